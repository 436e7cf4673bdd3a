use super::{Graph, VertexSet};

/// All maximal cliques, sorted by bitset value.
///
/// Bron–Kerbosch with Tomita pivoting on bitsets. Isolated vertices come out as
/// singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, 0, g.vertices().bits(), 0, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet(r));
        }
        return;
    }
    let pivot = VertexSet(p | x)
        .iter()
        .max_by_key(|&u| (p & g.row(u)).count_ones())
        .expect("p is nonempty");
    for v in VertexSet(p & !g.row(pivot)).iter() {
        let nv = g.row(v);
        bron_kerbosch(g, r | (1u64 << v), p & nv, x & nv, out);
        p &= !(1u64 << v);
        x |= 1u64 << v;
    }
}
