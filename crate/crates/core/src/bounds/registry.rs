use std::fmt;

use super::{
    clique_cover_number, is_forbidden_mr2, is_outerplanar, is_planar, tree_minimum_rank, zero_forcing_number,
    BoundValue, ForbiddenList,
};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Lower,
    Upper,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Lower => "lower",
            Sense::Upper => "upper",
        })
    }
}

/// Shared inputs that some strategies need.
#[derive(Clone, Copy)]
pub struct BoundContext<'a> {
    pub forbidden: &'a ForbiddenList,
}

impl<'a> BoundContext<'a> {
    pub fn new(forbidden: &'a ForbiddenList) -> Self {
        BoundContext { forbidden }
    }
}

/// One way of bounding the minimum rank of a connected graph.
pub trait BoundStrategy: Send + Sync {
    fn name(&self) -> &'static str;

    fn sense(&self) -> Sense;

    fn description(&self) -> &'static str;

    /// A present value from an exact strategy is the minimum rank itself.
    fn exact(&self) -> bool {
        false
    }

    /// Evaluated on connected graphs only.
    fn evaluate(&self, g: &Graph, ctx: &BoundContext<'_>) -> BoundValue;
}

macro_rules! strategy {
    ($ty:ident, $name:literal, $sense:expr, $desc:literal, |$g:ident, $ctx:ident| $body:expr) => {
        strategy!($ty, $name, $sense, $desc, false, |$g, $ctx| $body);
    };
    ($ty:ident, $name:literal, $sense:expr, $desc:literal, $exact:expr, |$g:ident, $ctx:ident| $body:expr) => {
        pub struct $ty;

        impl BoundStrategy for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn sense(&self) -> Sense {
                $sense
            }
            fn description(&self) -> &'static str {
                $desc
            }
            fn exact(&self) -> bool {
                $exact
            }
            #[allow(unused_variables, unused_braces)]
            fn evaluate(&self, $g: &Graph, $ctx: &BoundContext<'_>) -> BoundValue {
                $body
            }
        }
    };
}

strategy!(
    ZeroForcing,
    "zfs",
    Sense::Lower,
    "order minus the zero forcing number",
    |g, ctx| { BoundValue::of(g.order() - zero_forcing_number(g)) }
);

strategy!(
    Diameter,
    "diam",
    Sense::Lower,
    "diameter (a shortest path is induced)",
    |g, ctx| { BoundValue::from(g.diameter().ok()) }
);

strategy!(
    ForbiddenMr2,
    "forbidden-mr2",
    Sense::Lower,
    "3 when a forbidden induced subgraph for rank 2 occurs",
    |g, ctx| { BoundValue::when(is_forbidden_mr2(g, ctx.forbidden), || 3) }
);

strategy!(CliqueCover, "cc", Sense::Upper, "edge clique cover number", |g, ctx| {
    BoundValue::of(clique_cover_number(g))
});

strategy!(
    Nonplanar,
    "nonplanar",
    Sense::Upper,
    "order - 4 for nonplanar graphs",
    |g, ctx| { BoundValue::when(!is_planar(g), || g.order() - 4) }
);

strategy!(
    NonOuterplanar,
    "non-outerplanar",
    Sense::Upper,
    "order - 3 for graphs that are not outerplanar",
    |g, ctx| { BoundValue::when(!is_outerplanar(g), || g.order() - 3) }
);

strategy!(
    NonPath,
    "non-path",
    Sense::Upper,
    "order - 2 for graphs that are not paths",
    |g, ctx| { BoundValue::when(!g.is_path(), || g.order() - 2) }
);

strategy!(
    Mr2Free,
    "mr2-free",
    Sense::Upper,
    "2 when no forbidden induced subgraph for rank 2 occurs",
    |g, ctx| { BoundValue::when(!is_forbidden_mr2(g, ctx.forbidden), || 2) }
);

strategy!(
    TreePathCover,
    "tree",
    Sense::Upper,
    "order minus path cover number for trees",
    true,
    |g, ctx| { BoundValue::from(tree_minimum_rank(g).ok()) }
);

strategy!(
    Order,
    "order",
    Sense::Upper,
    "order - 1 for connected graphs",
    |g, ctx| { BoundValue::of(g.order() - 1) }
);

/// Named bound strategies, evaluated in registration order.
#[derive(Default)]
pub struct BoundRegistry {
    strategies: Vec<Box<dyn BoundStrategy>>,
}

impl BoundRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every built-in strategy.
    pub fn standard() -> Self {
        let mut r = BoundRegistry::new();
        r.register(ZeroForcing);
        r.register(Diameter);
        r.register(ForbiddenMr2);
        r.register(CliqueCover);
        r.register(Nonplanar);
        r.register(NonOuterplanar);
        r.register(NonPath);
        r.register(Mr2Free);
        r.register(TreePathCover);
        r.register(Order);
        r
    }

    /// Built-in strategies restricted to `names`, in the order given.
    pub fn select<S: AsRef<str>>(names: &[S]) -> Result<Self, String> {
        let mut all = BoundRegistry::standard();
        let mut out = BoundRegistry::new();
        for name in names {
            let name = name.as_ref();
            let pos = all
                .strategies
                .iter()
                .position(|s| s.name() == name)
                .ok_or_else(|| format!("unknown bound strategy `{name}`"))?;
            out.strategies.push(all.strategies.remove(pos));
        }
        Ok(out)
    }

    pub fn register<S: BoundStrategy + 'static>(&mut self, strategy: S) {
        self.strategies.push(Box::new(strategy));
    }

    pub fn get(&self, name: &str) -> Option<&dyn BoundStrategy> {
        self.strategies.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn BoundStrategy> {
        self.strategies.iter().map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }

    /// `(lb, ub, exact)` for a connected graph.
    ///
    /// The upper bound starts at `order - 1`, which holds for every connected graph.
    pub fn bracket(&self, g: &Graph, ctx: &BoundContext<'_>) -> (usize, usize, Option<usize>) {
        let mut lb = 0;
        let mut ub = g.order() - 1;
        let mut exact = None;
        for s in &self.strategies {
            let Some(v) = s.evaluate(g, ctx).value() else {
                continue;
            };
            match s.sense() {
                Sense::Lower => lb = lb.max(v),
                Sense::Upper => ub = ub.min(v),
            }
            if s.exact() {
                exact = Some(v);
            }
        }
        debug_assert!(lb <= ub, "lower bound {lb} above upper bound {ub} for {g:?}");
        let exact = exact.or((lb == ub).then_some(lb));
        (lb, ub, exact)
    }
}
