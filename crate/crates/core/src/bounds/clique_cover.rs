use crate::graph::{maximal_cliques, Graph, VertexSet};

/// Minimum number of cliques covering every edge (edge clique cover number).
///
/// Exact branch and bound over maximal cliques: take the first uncovered edge,
/// branch on each maximal clique containing it. The bound is the number of
/// uncovered edges divided by the edge count of the largest candidate clique.
pub fn clique_cover_number(g: &Graph) -> usize {
    minimum_clique_cover(g).len()
}

/// A minimum edge clique cover, cliques listed in the order they were chosen.
pub fn minimum_clique_cover(g: &Graph) -> Vec<VertexSet> {
    let candidates: Vec<VertexSet> = maximal_cliques(g).into_iter().filter(|c| c.len() >= 2).collect();
    if candidates.is_empty() {
        return Vec::new();
    }
    let widest = candidates.iter().map(|c| c.len()).max().unwrap_or(2);
    let mut search = Search {
        candidates: &candidates,
        per_clique: widest * (widest - 1) / 2,
        // every edge on its own is a valid cover
        best: g.edges().map(|(u, v)| VertexSet::from_vertices([u, v])).collect(),
        chosen: Vec::new(),
    };
    let residual: Vec<u64> = (0..g.order()).map(|v| g.row(v)).collect();
    search.run(residual);
    search.best
}

struct Search<'a> {
    candidates: &'a [VertexSet],
    per_clique: usize,
    best: Vec<VertexSet>,
    chosen: Vec<VertexSet>,
}

impl Search<'_> {
    fn run(&mut self, residual: Vec<u64>) {
        let uncovered: usize = residual.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        if uncovered == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let needed = uncovered.div_ceil(self.per_clique);
        if self.chosen.len() + needed >= self.best.len() {
            return;
        }
        let (u, row) = residual
            .iter()
            .enumerate()
            .find(|(_, r)| **r != 0)
            .map(|(u, r)| (u, *r))
            .expect("an uncovered edge exists");
        let v = row.trailing_zeros() as usize;
        let edge = VertexSet::from_vertices([u, v]);
        for &clique in self.candidates {
            if !edge.is_subset(clique) {
                continue;
            }
            let mut next = residual.clone();
            for w in clique.iter() {
                next[w] &= !clique.bits();
            }
            self.chosen.push(clique);
            self.run(next);
            self.chosen.pop();
        }
    }
}
