//! Factorizations of semigroup elements as vectors of atom multiplicities.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Coordinates `(x_1, …, x_p)` with every `x_i ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Factorization(Vec<i64>);

impl Factorization {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(
            coords.iter().all(|&c| c >= 0),
            "negative coordinate in {coords:?}"
        );
        Self(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// |x| = x_1 + … + x_p
    pub fn length(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The element this factorization maps to.
    pub fn evaluate(&self, generators: &[i64]) -> i64 {
        self.0.iter().zip(generators).map(|(x, n)| x * n).sum()
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        ))
    }

    pub fn dot(&self, other: &Self) -> Result<i64> {
        self.check_dim(other)?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dimension() != other.dimension() {
            return Err(Error::DimensionMismatch {
                left: self.dimension(),
                right: other.dimension(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// d(x, y) = max(|x|, |y|) − |x ∧ y|
pub fn distance(x: &Factorization, y: &Factorization) -> Result<i64> {
    let common = x.meet(y)?.length();
    Ok(x.length().max(y.length()) - common)
}

/// Enumerates factorization sets, reusing prefix-membership tables across
/// calls.
///
/// `prefix[i][t]` records whether `t` lies in the monoid generated by the
/// first `i + 1` generators, which prunes the depth-first search to branches
/// that complete.
#[derive(Clone, Debug)]
pub struct Factorizer {
    generators: Vec<i64>,
    prefix: Vec<Vec<bool>>,
}

impl Factorizer {
    pub fn new(semigroup: &NumericalSemigroup, bound: i64) -> Self {
        let generators = semigroup.generators().to_vec();
        let size = bound.max(0) as usize + 1;
        let mut prefix: Vec<Vec<bool>> = Vec::with_capacity(generators.len());
        for &g in &generators {
            let g = g as usize;
            let mut row = match prefix.last() {
                Some(prev) => prev.clone(),
                None => {
                    let mut r = vec![false; size];
                    r[0] = true;
                    r
                }
            };
            for t in g..size {
                if row[t - g] {
                    row[t] = true;
                }
            }
            prefix.push(row);
        }
        Self { generators, prefix }
    }

    pub fn bound(&self) -> i64 {
        self.prefix[0].len() as i64 - 1
    }

    /// All factorizations of `element`, lexicographically decreasing.
    ///
    /// Panics if `element` exceeds the bound given at construction.
    pub fn factorizations(&self, element: i64) -> Vec<Factorization> {
        if element < 0 {
            return Vec::new();
        }
        assert!(
            element <= self.bound(),
            "element {element} beyond factorizer bound {}",
            self.bound()
        );
        let p = self.generators.len();
        let mut out = Vec::new();
        if !self.prefix[p - 1][element as usize] {
            return out;
        }
        let mut coords = vec![0i64; p];
        self.descend(p - 1, element, &mut coords, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn descend(&self, level: usize, rem: i64, coords: &mut [i64], out: &mut Vec<Factorization>) {
        let n = self.generators[level];
        if level == 0 {
            if rem % n == 0 {
                coords[0] = rem / n;
                out.push(Factorization(coords.to_vec()));
            }
            return;
        }
        let below = &self.prefix[level - 1];
        for x in (0..=rem / n).rev() {
            let left = rem - x * n;
            if below[left as usize] {
                coords[level] = x;
                self.descend(level - 1, left, coords, out);
            }
        }
        coords[level] = 0;
    }
}

/// Z(s): every factorization of `element`, lexicographically decreasing.
/// Empty when `element ∉ S`.
pub fn factorizations(semigroup: &NumericalSemigroup, element: i64) -> Vec<Factorization> {
    if !semigroup.contains(element) {
        return Vec::new();
    }
    Factorizer::new(semigroup, element).factorizations(element)
}
