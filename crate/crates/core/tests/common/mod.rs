//! Shared loaders and independent oracles for the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use minrank_core::bounds::ForbiddenList;
use minrank_core::catalog::{self, load_atlas, load_fixtures, load_forbidden, Atlas, FixtureRow};
use minrank_core::graph::Graph;
use minrank_core::linalg::{Rational, RationalMatrix};
use num_traits::{One, Zero};
use rand::Rng;

pub fn data_path(default: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(default)
}

pub fn atlas() -> Atlas {
    load_atlas(&data_path(catalog::DEFAULT_ATLAS)).expect("bundled atlas")
}

pub fn fixtures() -> Vec<FixtureRow> {
    load_fixtures(&data_path(catalog::DEFAULT_FIXTURES)).expect("bundled fixtures")
}

pub fn forbidden() -> ForbiddenList {
    load_forbidden(&data_path(catalog::DEFAULT_FORBIDDEN)).expect("bundled forbidden list")
}

pub fn witness_text() -> String {
    std::fs::read_to_string(data_path(catalog::DEFAULT_WITNESSES)).expect("bundled witnesses")
}

/// Rank by textbook Gauss–Jordan reduction directly over the rationals.
pub fn gauss_jordan_rank(m: &RationalMatrix) -> usize {
    let n = m.dim();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = Rational::one() / a[rank][col].clone();
        for x in a[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Entry drawn from {-2, -1, -1/2, 0, 1/2, 1, 2}.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    const CHOICES: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];
    let (p, q) = CHOICES[rng.gen_range(0..CHOICES.len())];
    Rational::new(p.into(), q.into())
}

/// An n×n matrix with small entries. Half of the draws are products of
/// n×r and r×n factors so rank-deficient matrices are well represented.
pub fn random_matrix(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    let rows = if rng.gen_bool(0.5) {
        (0..n).map(|_| (0..n).map(|_| small_rational(rng)).collect()).collect()
    } else {
        let r = rng.gen_range(0..=n);
        let a: Vec<Vec<Rational>> = (0..n).map(|_| (0..r).map(|_| small_rational(rng)).collect()).collect();
        let b: Vec<Vec<Rational>> = (0..r).map(|_| (0..n).map(|_| small_rational(rng)).collect()).collect();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..r).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                    .collect()
            })
            .collect()
    };
    RationalMatrix::from_rows(rows).expect("square by construction")
}

/// G(n, p) on `n` vertices.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Random triangle-free graph: edges are offered in random order and kept
/// only when the endpoints have no common neighbour yet.
pub fn random_triangle_free(rng: &mut impl Rng, n: usize) -> Graph {
    use rand::seq::SliceRandom;
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let keep = rng.gen_range(0..=pairs.len());
    let mut adj = vec![0u64; n];
    let mut edges = Vec::new();
    for &(u, v) in pairs.iter().take(keep) {
        if adj[u] & adj[v] == 0 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Brute-force triangle check, independent of the clique code.
pub fn has_triangle(g: &Graph) -> bool {
    let n = g.order();
    (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))))
}
