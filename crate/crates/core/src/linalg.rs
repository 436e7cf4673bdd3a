//! Exact rational matrices and their rank.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Rational = num_rational::BigRational;

/// Parses `[+-]digits[/digits]` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Rational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Square matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Domain(format!("row {i} has {} entries, expected {n}", r.len())));
        }
        Ok(RationalMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for integer matrices.
    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `P M P^T` where old index `v` moves to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        out
    }

    /// Graph of the off-diagonal nonzero pattern.
    pub fn pattern_graph(&self) -> Result<Graph> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut g = Graph::empty(self.n)?;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.get(i, j).is_zero() {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Rows scaled by the lcm of their denominators; rank is unchanged.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect()
    }

    /// Exact rank via fraction-free (Bareiss) elimination.
    ///
    /// The pivot is the first row with a nonzero entry in the current column;
    /// columns without one are skipped. Every division by the previous pivot is
    /// exact, so all intermediates stay integral.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows())
    }
}

pub(crate) fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let num = pivot * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact Bareiss step");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        r += 1;
    }
    r
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(q("-19"), Rational::from_integer((-19).into()));
        assert_eq!(q("3/5"), Rational::new(3.into(), 5.into()));
        assert_eq!(q("2/4"), Rational::new(1.into(), 2.into()));
        assert_eq!(q("+7"), Rational::from_integer(7.into()));
        assert_eq!(q("-1/2").denom(), &BigInt::from(2));
        assert_eq!(q("0"), Rational::zero());
        for bad in ["", "-", "1/0", "1/", "/2", "1/-2", "a", "1.5", "1/2/3", "--1", " 1"] {
            assert!(matches!(parse_rational(bad), Err(Error::Rational(_))), "{bad:?}");
        }
    }

    #[test]
    fn rank_of_basic_matrices() {
        for n in 0..=7 {
            assert_eq!(RationalMatrix::zeros(n).rank(), 0);
            assert_eq!(RationalMatrix::identity(n).rank(), n);
        }
        let ones = RationalMatrix::from_integers(&[vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(ones.rank(), 1);
        let skip = RationalMatrix::from_integers(&[vec![0, 1, 2], vec![0, 2, 4], vec![0, 0, 1]]).unwrap();
        assert_eq!(skip.rank(), 2);
    }

    #[test]
    fn fractional_rows_are_scaled() {
        let m = RationalMatrix::from_rows(vec![vec![q("1/2"), q("1/3")], vec![q("3"), q("2")]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn symmetry_and_pattern() {
        assert!(RationalMatrix::identity(4).is_symmetric());
        let mut m = RationalMatrix::zeros(2);
        m.set(0, 1, Rational::one());
        assert!(!m.is_symmetric());
        assert!(matches!(m.pattern_graph(), Err(Error::NotSymmetric)));

        assert_eq!(
            RationalMatrix::identity(7).pattern_graph().unwrap(),
            Graph::empty(7).unwrap()
        );
        let ones = RationalMatrix::from_integers(&[vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(ones.pattern_graph().unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RationalMatrix::from_integers(&[vec![1, 2], vec![3]]).is_err());
    }
}
