use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest tree handled by the exhaustive edge-subset search.
const EXHAUSTIVE_LIMIT: usize = 16;

/// Minimum number of vertex-disjoint paths covering a tree.
///
/// A path partition of a tree is the same thing as a set of tree edges in which
/// every vertex has degree at most two; the partition has `n - |edges|` paths.
/// Small trees are searched exhaustively over edge subsets, larger ones use the
/// leaf-stripping greedy. Both are checked against each other in debug builds.
pub fn tree_path_cover_number(t: &Graph) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let greedy = greedy_path_cover(t);
    if t.order() <= EXHAUSTIVE_LIMIT {
        let exact = exhaustive_path_cover(t);
        debug_assert_eq!(exact, greedy, "path cover disagreement on {t:?}");
        Ok(exact)
    } else {
        Ok(greedy)
    }
}

/// Minimum rank of a tree: order minus its path cover number.
pub fn tree_minimum_rank(t: &Graph) -> Result<usize> {
    Ok(t.order() - tree_path_cover_number(t)?)
}

fn exhaustive_path_cover(t: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = t.edges().collect();
    let mut best_kept = 0;
    let mut degree = vec![0u8; t.order()];
    for mask in 0u32..(1u32 << edges.len()) {
        if (mask.count_ones() as usize) <= best_kept {
            continue;
        }
        degree.iter_mut().for_each(|d| *d = 0);
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                degree[u] += 1;
                degree[v] += 1;
                if degree[u] > 2 || degree[v] > 2 {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            best_kept = mask.count_ones() as usize;
        }
    }
    t.order() - best_kept
}

/// Bottom-up greedy: a vertex joins up to two children that are still path
/// endpoints, and stays an endpoint itself only if it joined fewer than two.
pub fn greedy_path_cover(t: &Graph) -> usize {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut seen = 1u64;
    while let Some(v) = stack.pop() {
        order.push(v);
        for w in t.neighbors(v).iter() {
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut open_children = vec![0usize; n];
    let mut kept = 0;
    for &v in order.iter().rev() {
        let joined = open_children[v].min(2);
        kept += joined;
        if joined < 2 && parent[v] != usize::MAX {
            open_children[parent[v]] += 1;
        }
    }
    n - kept
}
