//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex.

mod cliques;
mod graph6;
mod iso;

use std::fmt;

use crate::error::{Error, Result};

pub use cliques::maximal_cliques;
pub use graph6::{from_graph6, to_graph6};
pub use iso::{contains_induced, for_each_subset, is_isomorphic};

pub const MAX_ORDER: usize = 64;

/// A set of vertices `0..64` packed into one word.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Undirected simple graph with `1 <= order <= 64`.
///
/// Row `i` of the adjacency holds the neighbourhood of vertex `i` as a bitset.
/// Rows are symmetric and carry no loops; every constructor enforces this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::Order(order));
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    /// Builds a graph from an edge list. Loops are rejected, repeated edges collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            if u >= order || v >= order || u == v {
                return Err(Error::Domain(format!("invalid edge ({u}, {v}) for order {order}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let order = rows.len();
        if order == 0 || order > MAX_ORDER {
            return Err(Error::Order(order));
        }
        let mask = VertexSet::full(order).bits();
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || (row >> i) & 1 == 1 {
                return Err(Error::Domain(format!("row {i} has out-of-range bits or a loop")));
            }
            for j in VertexSet(row).iter() {
                if (rows[j] >> i) & 1 == 0 {
                    return Err(Error::Domain(format!("adjacency not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Graph { order, adj: rows })
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        let all = VertexSet::full(order).bits();
        for (i, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1u64 << i);
        }
        Ok(g)
    }

    pub fn path(order: usize) -> Result<Self> {
        let edges: Vec<_> = (1..order).map(|i| (i - 1, i)).collect();
        Graph::from_edges(order, &edges)
    }

    pub fn cycle(order: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..order).map(|i| (i - 1, i)).collect();
        if order >= 3 {
            edges.push((order - 1, 0));
        }
        Graph::from_edges(order, &edges)
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| VertexSet(self.adj[u] >> u >> 1 << u << 1).iter().map(move |v| (u, v)))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            frontier = VertexSet(next & within.bits() & !seen.bits());
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()) == self.vertices()
    }

    /// Whether `s` induces a connected subgraph. The empty set is not connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        match s.first() {
            Some(v) => self.reach(v, s) == s,
            None => false,
        }
    }

    /// BFS eccentricity of `v`; `None` if some vertex is unreachable.
    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let all = self.vertices();
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        let mut dist = 0;
        loop {
            let mut next = 0u64;
            for u in frontier.iter() {
                next |= self.adj[u];
            }
            frontier = VertexSet(next & !seen.bits());
            if frontier.is_empty() {
                break;
            }
            seen = seen.union(frontier);
            dist += 1;
        }
        (seen == all).then_some(dist)
    }

    /// Largest BFS distance between two vertices. Errors on disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in 0..self.order {
            best = best.max(self.eccentricity(v).ok_or(Error::NotConnected)?);
        }
        Ok(best)
    }

    /// Cut vertices, found with the usual DFS low-link recursion.
    pub fn articulation_points(&self) -> VertexSet {
        struct Dfs<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            clock: usize,
            cut: VertexSet,
        }
        impl Dfs<'_> {
            fn visit(&mut self, v: usize, parent: Option<usize>) {
                self.clock += 1;
                self.disc[v] = self.clock;
                self.low[v] = self.clock;
                let mut children = 0;
                for w in self.g.neighbors(v).iter() {
                    if self.disc[w] == 0 {
                        children += 1;
                        self.visit(w, Some(v));
                        self.low[v] = self.low[v].min(self.low[w]);
                        if parent.is_some() && self.low[w] >= self.disc[v] {
                            self.cut.insert(v);
                        }
                    } else if Some(w) != parent {
                        self.low[v] = self.low[v].min(self.disc[w]);
                    }
                }
                if parent.is_none() && children > 1 {
                    self.cut.insert(v);
                }
            }
        }
        let mut dfs = Dfs {
            g: self,
            disc: vec![0; self.order],
            low: vec![0; self.order],
            clock: 0,
            cut: VertexSet::EMPTY,
        };
        for v in 0..self.order {
            if dfs.disc[v] == 0 {
                dfs.visit(v, None);
            }
        }
        dfs.cut
    }

    pub fn has_cut_vertex(&self) -> bool {
        !self.articulation_points().is_empty()
    }

    /// Connected with exactly `order - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order && self.is_connected()
    }

    /// A tree with maximum degree at most two.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// Whether `s` is a clique.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| s.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices().bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &r)| !r & all & !(1u64 << i))
            .collect();
        Graph { order: self.order, adj }
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in increasing vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let keep: Vec<usize> = s.intersection(self.vertices()).iter().collect();
        let mut adj = vec![0u64; keep.len()];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1u64 << j;
                }
            }
        }
        Ok(Graph { order: keep.len(), adj })
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order);
        let mut adj = vec![0u64; self.order];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1u64 << perm[v];
            adj[perm[v]] |= 1u64 << perm[u];
        }
        Graph { order: self.order, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.order, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_counts_edges_once() {
        assert_eq!(Graph::complete(5).unwrap().size(), 10);
        assert_eq!(Graph::empty(1).unwrap().size(), 0);
        assert_eq!(Graph::path(7).unwrap().size(), 6);
    }

    #[test]
    fn order_bounds() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn components_ordered_and_disjoint() {
        let g = Graph::from_edges(6, &[(0, 3), (1, 2), (2, 5)]).unwrap();
        let comps = g.components();
        assert_eq!(
            comps,
            vec![
                VertexSet::from_vertices([0, 3]),
                VertexSet::from_vertices([1, 2, 5]),
                VertexSet::singleton(4)
            ]
        );
        assert!(!g.is_connected());
        let k1 = Graph::empty(1).unwrap();
        assert!(k1.is_connected());
        assert_eq!(k1.components().len(), 1);
    }

    #[test]
    fn diameter_of_paths_and_cliques() {
        for n in 1..=10 {
            assert_eq!(Graph::path(n).unwrap().diameter().unwrap(), n - 1);
        }
        for n in 2..=10 {
            assert_eq!(Graph::complete(n).unwrap().diameter().unwrap(), 1);
        }
        assert_eq!(Graph::cycle(5).unwrap().diameter().unwrap(), 2);
        assert!(matches!(Graph::empty(2).unwrap().diameter(), Err(Error::NotConnected)));
    }

    #[test]
    fn articulation_points_small_cases() {
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_eq!(star.articulation_points(), VertexSet::singleton(0));
        assert!(Graph::cycle(5).unwrap().articulation_points().is_empty());
        assert!(Graph::path(2).unwrap().articulation_points().is_empty());
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.articulation_points(), VertexSet::from_vertices([1, 2]));
        // bowtie: two triangles sharing vertex 2
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(bowtie.articulation_points(), VertexSet::singleton(2));
    }

    #[test]
    fn tree_and_path_predicates() {
        let p4 = Graph::path(4).unwrap();
        assert!(p4.is_tree() && p4.is_path());
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert!(star.is_tree() && !star.is_path());
        let k5 = Graph::complete(5).unwrap();
        assert!(!k5.is_tree() && !k5.is_path());
        let k1 = Graph::empty(1).unwrap();
        assert!(k1.is_tree() && k1.is_path());
        // forest is not a tree
        let forest = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!forest.is_tree());
    }

    #[test]
    fn complement_and_induced() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.complement().size(), 5);

        let k5 = Graph::complete(5).unwrap();
        let tri = k5.induced_subgraph(VertexSet::from_vertices([0, 2, 4])).unwrap();
        assert_eq!(tri, Graph::complete(3).unwrap());

        let p4 = Graph::path(4).unwrap();
        let p3 = p4.induced_subgraph(VertexSet::from_vertices([0, 1, 2])).unwrap();
        assert_eq!(p3, Graph::path(3).unwrap());

        assert!(matches!(
            p4.induced_subgraph(VertexSet::EMPTY),
            Err(Error::EmptyVertexSet)
        ));
    }

    #[test]
    fn from_rows_rejects_bad_input() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn edges_are_ordered() {
        let g = Graph::from_edges(4, &[(3, 0), (2, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }
}
