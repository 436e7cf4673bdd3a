use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::{contains_induced, from_graph6, is_isomorphic, to_graph6, Graph, VertexSet};

const BUNDLED: &str = include_str!("../../../../data/forbidden_mr2.g6");

/// Minimal forbidden induced subgraphs for minimum rank at most two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenList {
    patterns: Vec<Graph>,
}

impl ForbiddenList {
    pub fn new(patterns: Vec<Graph>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::Domain("forbidden list must not be empty".into()));
        }
        for (i, p) in patterns.iter().enumerate() {
            for (j, q) in patterns.iter().enumerate() {
                if i != j && contains_induced(p, q) {
                    return Err(Error::Domain(format!(
                        "pattern {} contains pattern {} as an induced subgraph",
                        to_graph6(p),
                        to_graph6(q)
                    )));
                }
            }
        }
        Ok(ForbiddenList { patterns })
    }

    /// The list shipped with the crate, derived from the transcribed table.
    pub fn bundled() -> Self {
        ForbiddenList::parse(BUNDLED, "forbidden_mr2.g6").expect("bundled forbidden list is valid")
    }

    /// One graph6 string per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut patterns = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let g = from_graph6(line).map_err(|e| Error::parse(origin, i + 1, e.to_string()))?;
            patterns.push(g);
        }
        ForbiddenList::new(patterns)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# minimal forbidden induced subgraphs for minimum rank <= 2 (graph6)\n");
        for p in &self.patterns {
            out.push_str(&to_graph6(p));
            out.push('\n');
        }
        out
    }

    pub fn patterns(&self) -> &[Graph] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

/// Whether `g` contains some pattern of `list` as an induced subgraph.
pub fn is_forbidden_mr2(g: &Graph, list: &ForbiddenList) -> bool {
    list.patterns.iter().any(|p| contains_induced(g, p))
}

/// Derives the minimal forbidden family from graphs with known minimum rank.
///
/// `graphs` must be the atlas, numbered and in atlas order (so by nondecreasing
/// order). A graph with `mr >= 3` is kept when none of its one-vertex deletions has
/// `mr >= 3`; deletions are identified up to isomorphism against `graphs` and
/// their rank read from `known_mr`. Graphs already containing a kept pattern are
/// skipped. If a deletion has no known rank and the decision depends on it, the
/// gap is reported instead of guessing.
pub fn derive_forbidden_list(graphs: &[(usize, Graph)], known_mr: &BTreeMap<usize, usize>) -> Result<ForbiddenList> {
    let mut by_shape: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (idx, (_, g)) in graphs.iter().enumerate() {
        by_shape.entry((g.order(), g.size())).or_default().push(idx);
    }
    let lookup = |h: &Graph| -> Option<usize> {
        by_shape
            .get(&(h.order(), h.size()))?
            .iter()
            .map(|&idx| &graphs[idx])
            .find(|(_, g)| is_isomorphic(g, h))
            .map(|(k, _)| *k)
    };

    let mut patterns: Vec<Graph> = Vec::new();
    let mut gaps = Vec::new();
    for (atlas, g) in graphs {
        match known_mr.get(atlas) {
            Some(&mr) if mr >= 3 => {}
            _ => continue,
        }
        if patterns.iter().any(|p| contains_induced(g, p)) {
            continue;
        }
        let mut unknown = Vec::new();
        let mut larger = false;
        for v in 0..g.order() {
            let rest = g.vertices().difference(VertexSet::singleton(v));
            let h = g.induced_subgraph(rest)?;
            match lookup(&h) {
                Some(k) => match known_mr.get(&k) {
                    Some(&mr) if mr >= 3 => {
                        larger = true;
                        break;
                    }
                    Some(_) => {}
                    None => unknown.push(k),
                },
                None => unknown.push(0),
            }
        }
        if larger {
            continue;
        }
        if unknown.is_empty() {
            patterns.push(g.clone());
        } else {
            unknown.sort_unstable();
            unknown.dedup();
            gaps.push(format!("atlas {atlas} needs {unknown:?}"));
        }
    }
    if !gaps.is_empty() {
        return Err(Error::FixtureGap(gaps.join("; ")));
    }
    ForbiddenList::new(patterns)
}
