use crate::graph::{for_each_subset, Graph, VertexSet};

/// Closure of `filled` under the colour-change rule: a filled vertex with exactly
/// one unfilled neighbour forces that neighbour.
pub fn zf_closure(g: &Graph, filled: VertexSet) -> VertexSet {
    let mut filled = filled.bits() & g.vertices().bits();
    loop {
        let mut gained = 0u64;
        for v in VertexSet(filled).iter() {
            let open = g.row(v) & !filled;
            if open.count_ones() == 1 {
                gained |= open;
            }
        }
        if gained == 0 {
            return VertexSet(filled);
        }
        filled |= gained;
    }
}

/// Zero forcing number: the size of a smallest set whose closure is every vertex.
///
/// Subsets are tried by increasing size and in increasing bit order; the first
/// success is optimal. A forcing set must meet every component, so subsets that
/// miss one are skipped without computing a closure.
pub fn zero_forcing_number(g: &Graph) -> usize {
    minimum_forcing_set(g).len()
}

/// A lexicographically first zero forcing set of minimum size.
pub fn minimum_forcing_set(g: &Graph) -> VertexSet {
    let n = g.order();
    let all = g.vertices();
    let components = g.components();
    let start = g.min_degree().max(components.len()).max(1);
    for k in start..=n {
        let mut found = None;
        for_each_subset(n, k, |s| {
            if components.iter().any(|c| c.intersection(s).is_empty()) {
                return false;
            }
            if zf_closure(g, s) == all {
                found = Some(s);
                return true;
            }
            false
        });
        if let Some(s) = found {
            return s;
        }
    }
    all
}
