//! Minor containment by branch-set enumeration, and the planarity tests built on it.

use crate::graph::{Graph, VertexSet};

/// Whether `h` is a minor of `g`.
///
/// Enumerates every way of choosing `h.order()` disjoint, nonempty vertex sets
/// of `g` (the remaining vertices are deleted), keeps those whose sets each
/// induce a connected subgraph, and checks whether the contracted graph contains
/// `h` as a subgraph. Blocks are numbered by first appearance, so each partition
/// is visited once. Practical up to about ten vertices in `g`.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    let k = h.order();
    if k > g.order() || h.size() > g.size() {
        return false;
    }
    let h_rows: Vec<u64> = (0..k).map(|v| h.row(v)).collect();
    let mut blocks = vec![VertexSet::EMPTY; k];
    assign(g, &h_rows, 0, 0, &mut blocks)
}

fn assign(g: &Graph, h_rows: &[u64], v: usize, used: usize, blocks: &mut [VertexSet]) -> bool {
    let k = blocks.len();
    let remaining = g.order() - v;
    if used + remaining < k {
        return false;
    }
    if v == g.order() {
        return quotient_contains(g, h_rows, blocks);
    }
    // delete v
    if assign(g, h_rows, v + 1, used, blocks) {
        return true;
    }
    for b in 0..(used + 1).min(k) {
        blocks[b].insert(v);
        let found = assign(g, h_rows, v + 1, used.max(b + 1), blocks);
        blocks[b].remove(v);
        if found {
            return true;
        }
    }
    false
}

fn quotient_contains(g: &Graph, h_rows: &[u64], blocks: &[VertexSet]) -> bool {
    if !blocks.iter().all(|&b| g.is_connected_within(b)) {
        return false;
    }
    let k = blocks.len();
    let mut q = vec![0u64; k];
    for (a, row) in q.iter_mut().enumerate() {
        let reach = blocks[a].iter().fold(0u64, |acc, v| acc | g.row(v));
        for (b, block) in blocks.iter().enumerate() {
            if a != b && reach & block.bits() != 0 {
                *row |= 1u64 << b;
            }
        }
    }
    let q_edges: u32 = q.iter().map(|r| r.count_ones()).sum();
    let h_edges: u32 = h_rows.iter().map(|r| r.count_ones()).sum();
    if q_edges < h_edges {
        return false;
    }
    let mut image = vec![usize::MAX; k];
    embed(h_rows, &q, 0, &mut image, 0)
}

/// Injective map from `h` vertices to quotient vertices preserving edges of `h`.
fn embed(h_rows: &[u64], q: &[u64], x: usize, image: &mut [usize], used: u64) -> bool {
    if x == h_rows.len() {
        return true;
    }
    let need = h_rows[x].count_ones();
    for b in 0..q.len() {
        if used & (1u64 << b) != 0 || q[b].count_ones() < need {
            continue;
        }
        let ok = (0..x).all(|y| h_rows[x] & (1u64 << y) == 0 || q[b] & (1u64 << image[y]) != 0);
        if ok {
            image[x] = b;
            if embed(h_rows, q, x + 1, image, used | (1u64 << b)) {
                return true;
            }
        }
    }
    false
}

/// No K5 and no K3,3 minor.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    if g.size() > 3 * n - 6 {
        return false;
    }
    !has_minor(g, &Graph::complete(5).expect("K5")) && !has_minor(g, &Graph::complete_bipartite(3, 3).expect("K3,3"))
}

/// No K4 and no K2,3 minor.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 3 {
        return true;
    }
    if g.size() > 2 * n - 3 {
        return false;
    }
    !has_minor(g, &Graph::complete(4).expect("K4")) && !has_minor(g, &Graph::complete_bipartite(2, 3).expect("K2,3"))
}
