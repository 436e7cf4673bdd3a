use super::{Graph, VertexSet};

/// Backtracking isomorphism test with degree filtering. Meant for small orders.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let n = g.order();
    // map high-degree vertices of g first; they constrain the search most
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut image = vec![usize::MAX; n];
    extend(g, h, &order, 0, &mut image, VertexSet::EMPTY)
}

fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: VertexSet) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let want = g.degree(v);
    for w in h.vertices().difference(used).iter() {
        if h.degree(w) != want {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        let mut next = used;
        next.insert(w);
        if extend(g, h, order, depth + 1, image, next) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}

/// Whether some vertex subset of `g` induces a copy of `pattern`.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    let n = g.order();
    if k > n {
        return false;
    }
    let want_size = pattern.size();
    let want_degrees = pattern.degree_sequence();
    for_each_subset(n, k, |s| {
        let sub = g.induced_subgraph(s).expect("k >= 1");
        sub.size() == want_size && sub.degree_sequence() == want_degrees && is_isomorphic(&sub, pattern)
    })
}

/// Calls `f` on every `k`-subset of `0..n` in increasing bit order until it returns true.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(VertexSet) -> bool) -> bool {
    if k == 0 || k > n {
        return false;
    }
    let limit: u128 = 1u128 << n;
    let mut s: u128 = (1u128 << k) - 1;
    while s < limit {
        if f(VertexSet(s as u64)) {
            return true;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    false
}
