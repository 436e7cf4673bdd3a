//! Minimum-rank bounds for small graphs.
//!
//! Every bound is a [`BoundStrategy`] registered by name in a [`BoundRegistry`].
//! [`combine`] evaluates the registry on each connected component, takes the
//! largest lower and smallest upper bound, and adds the results over components.

mod clique_cover;
mod forbidden;
mod minor;
mod registry;
mod tree;
mod zero_forcing;

use serde::Serialize;

use crate::graph::Graph;

pub use clique_cover::{clique_cover_number, minimum_clique_cover};
pub use forbidden::{derive_forbidden_list, is_forbidden_mr2, ForbiddenList};
pub use minor::{has_minor, is_outerplanar, is_planar};
pub use registry::{BoundContext, BoundRegistry, BoundStrategy, Sense};
pub use tree::{greedy_path_cover, tree_minimum_rank, tree_path_cover_number};
pub use zero_forcing::{minimum_forcing_set, zero_forcing_number, zf_closure};

/// A table cell that may be blank.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BoundValue(Option<usize>);

impl BoundValue {
    pub const ABSENT: BoundValue = BoundValue(None);

    pub fn of(v: usize) -> Self {
        BoundValue(Some(v))
    }

    pub fn when(cond: bool, v: impl FnOnce() -> usize) -> Self {
        BoundValue(cond.then(v))
    }

    pub fn is_present(self) -> bool {
        self.0.is_some()
    }

    pub fn value(self) -> Option<usize> {
        self.0
    }
}

impl From<Option<usize>> for BoundValue {
    fn from(v: Option<usize>) -> Self {
        BoundValue(v)
    }
}

/// `order - Z(G)`, only for connected graphs.
pub fn zfs_lower_bound(g: &Graph) -> BoundValue {
    BoundValue::when(g.is_connected(), || g.order() - zero_forcing_number(g))
}

/// The diameter, only for connected graphs.
pub fn diameter_lower_bound(g: &Graph) -> BoundValue {
    BoundValue::from(g.diameter().ok())
}

/// Edge clique cover number, only for connected graphs.
pub fn clique_cover_upper_bound(g: &Graph) -> BoundValue {
    BoundValue::when(g.is_connected(), || clique_cover_number(g))
}

/// `order - 4` for connected nonplanar graphs.
pub fn np_upper_bound(g: &Graph) -> BoundValue {
    BoundValue::when(g.is_connected() && !is_planar(g), || g.order() - 4)
}

/// `order - 3` for connected graphs that are not outerplanar.
pub fn nop_upper_bound(g: &Graph) -> BoundValue {
    BoundValue::when(g.is_connected() && !is_outerplanar(g), || g.order() - 3)
}

/// `order - 2` for connected graphs that are not paths.
pub fn path_upper_bound(g: &Graph) -> BoundValue {
    BoundValue::when(g.is_connected() && !g.is_path(), || g.order() - 2)
}

/// One computed row of the minimum-rank table.
///
/// Conditional columns are absent on disconnected graphs. For those, `lb`, `ub`
/// and `mr_exact` are sums over components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub order: usize,
    pub size: usize,
    pub con: bool,
    pub zfs_lb: BoundValue,
    pub diam_lb: BoundValue,
    pub cc_ub: BoundValue,
    pub np_ub: BoundValue,
    pub nop_ub: BoundValue,
    pub path_ub: BoundValue,
    pub is_flag: Option<bool>,
    pub cv: bool,
    pub tree: bool,
    pub lb: usize,
    pub ub: usize,
    pub mr_exact: Option<usize>,
}

/// Table row for `g` using the standard strategies.
pub fn combine(g: &Graph, list: &ForbiddenList) -> BoundsRow {
    combine_with(g, &BoundRegistry::standard(), &BoundContext::new(list))
}

/// Table row for `g` with `lb`/`ub` taken from the strategies in `registry`.
pub fn combine_with(g: &Graph, registry: &BoundRegistry, ctx: &BoundContext<'_>) -> BoundsRow {
    let con = g.is_connected();
    let (lb, ub, mr_exact) = if con {
        registry.bracket(g, ctx)
    } else {
        let mut lb = 0;
        let mut ub = 0;
        let mut exact = Some(0);
        for comp in g.components() {
            let h = g.induced_subgraph(comp).expect("components are nonempty");
            let (l, u, e) = registry.bracket(&h, ctx);
            lb += l;
            ub += u;
            exact = exact.zip(e).map(|(a, b)| a + b);
        }
        (lb, ub, exact)
    };
    BoundsRow {
        order: g.order(),
        size: g.size(),
        con,
        zfs_lb: zfs_lower_bound(g),
        diam_lb: diameter_lower_bound(g),
        cc_ub: clique_cover_upper_bound(g),
        np_ub: np_upper_bound(g),
        nop_ub: nop_upper_bound(g),
        path_ub: path_upper_bound(g),
        is_flag: con.then(|| is_forbidden_mr2(g, ctx.forbidden)),
        cv: con && g.has_cut_vertex(),
        tree: g.is_tree(),
        lb,
        ub,
        mr_exact,
    }
}
