//! Numerical semigroups given by generators, and their classical invariants.
//!
//! A [`NumericalSemigroup`] always stores its minimal generating set in
//! ascending order together with the Apéry set of the multiplicity, so that
//! membership is a single table lookup.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest generator accepted by [`NumericalSemigroup::new`].
pub const MAX_GENERATOR: i64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    /// `apery[r]` is the least element of S congruent to r modulo n_1.
    apery: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryClass {
    Symmetric,
    PseudoSymmetric,
    Neither,
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::PseudoSymmetric => "pseudo_symmetric",
            SymmetryClass::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalInvariants {
    pub frobenius: i64,
    pub genus: i64,
    pub gaps: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    pub symmetry: SymmetryClass,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reducing to the minimal
    /// generating set.
    pub fn new(raw: &[i64]) -> Result<Self> {
        Self::with_generator_cap(raw, MAX_GENERATOR)
    }

    pub fn with_generator_cap(raw: &[i64], max_generator: i64) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = raw.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(bad));
        }
        if let Some(&big) = raw.iter().find(|&&g| g > max_generator) {
            return Err(Error::GeneratorTooLarge {
                value: big,
                max: max_generator,
            });
        }
        let g = raw.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let mut sorted = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let generators = minimal_subset(&sorted);
        let apery = shortest_residues(&generators, generators[0]);
        Ok(Self { generators, apery })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn is_whole_naturals(&self) -> bool {
        self.generators[0] == 1
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let m = self.multiplicity();
        x >= self.apery[x.rem_euclid(m) as usize]
    }

    /// Apéry set of S with respect to the nonzero element `m`, sorted.
    pub fn apery_set(&self, m: i64) -> Result<Vec<i64>> {
        if m <= 0 || !self.contains(m) {
            return Err(Error::NotAMember(m));
        }
        let mut set = if m == self.multiplicity() {
            self.apery.clone()
        } else {
            shortest_residues(&self.generators, m)
        };
        set.sort_unstable();
        Ok(set)
    }

    /// Largest integer not in S; `-1` for S = N.
    pub fn frobenius(&self) -> i64 {
        self.apery.iter().copied().max().unwrap_or(0) - self.multiplicity()
    }

    pub fn genus(&self) -> i64 {
        let m = self.multiplicity();
        self.apery.iter().map(|w| w / m).sum()
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..=self.frobenius())
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// x is pseudo-Frobenius iff x + n_1 is a maximal element of the Apéry
    /// set of n_1 with respect to the order induced by S.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let m = self.multiplicity();
        let mut pf: Vec<i64> = self
            .apery
            .iter()
            .map(|&w| w - m)
            .filter(|&x| !self.contains(x) && self.generators.iter().all(|&n| self.contains(x + n)))
            .collect();
        pf.sort_unstable();
        pf
    }

    pub fn symmetry_class(&self) -> SymmetryClass {
        let f = self.frobenius();
        let g = self.genus();
        if 2 * g == f + 1 {
            SymmetryClass::Symmetric
        } else if 2 * g == f + 2 {
            SymmetryClass::PseudoSymmetric
        } else {
            SymmetryClass::Neither
        }
    }

    pub fn classical_invariants(&self) -> ClassicalInvariants {
        ClassicalInvariants {
            frobenius: self.frobenius(),
            genus: self.genus(),
            gaps: self.gaps(),
            pseudo_frobenius: self.pseudo_frobenius(),
            symmetry: self.symmetry_class(),
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(i64::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// Gluing of `s1` and `s2`: the semigroup generated by `mu * s1 ∪ lambda * s2`.
///
/// Requires `lambda ∈ s1` and `mu ∈ s2`, neither a minimal generator, with
/// `gcd(lambda, mu) = 1`.
pub fn glue(
    s1: &NumericalSemigroup,
    s2: &NumericalSemigroup,
    lambda: i64,
    mu: i64,
) -> Result<NumericalSemigroup> {
    if !s1.contains(lambda) || s1.generators().contains(&lambda) {
        return Err(Error::InvalidGluingData(format!(
            "lambda = {lambda} must be a non-generator element of {s1}"
        )));
    }
    if !s2.contains(mu) || s2.generators().contains(&mu) {
        return Err(Error::InvalidGluingData(format!(
            "mu = {mu} must be a non-generator element of {s2}"
        )));
    }
    if lambda.gcd(&mu) != 1 {
        return Err(Error::InvalidGluingData(format!(
            "gcd({lambda}, {mu}) != 1"
        )));
    }
    let raw: Vec<i64> = s1
        .generators()
        .iter()
        .map(|&n| mu * n)
        .chain(s2.generators().iter().map(|&n| lambda * n))
        .collect();
    let glued =
        NumericalSemigroup::new(&raw).map_err(|e| Error::InvalidGluingData(e.to_string()))?;
    if s1.symmetry_class() == SymmetryClass::Symmetric
        && s2.symmetry_class() == SymmetryClass::Symmetric
    {
        assert_eq!(
            glued.symmetry_class(),
            SymmetryClass::Symmetric,
            "gluing of symmetric semigroups {s1} and {s2} is not symmetric"
        );
    }
    Ok(glued)
}

/// Drops every generator that is a sum of smaller ones. Input sorted, deduped.
fn minimal_subset(sorted: &[i64]) -> Vec<i64> {
    let top = *sorted.last().expect("nonempty") as usize;
    let mut reach = vec![false; top + 1];
    reach[0] = true;
    let mut kept = Vec::new();
    for &g in sorted {
        if reach[g as usize] {
            continue;
        }
        kept.push(g);
        let g = g as usize;
        for x in g..=top {
            if reach[x - g] {
                reach[x] = true;
            }
        }
    }
    kept
}

/// Least element of ⟨generators⟩ in each residue class mod `m`, indexed by
/// residue. Dijkstra over the residue graph with one edge per generator.
/// Unreachable classes hold `i64::MAX`.
fn shortest_residues(generators: &[i64], m: i64) -> Vec<i64> {
    let size = m as usize;
    let mut dist = vec![i64::MAX; size];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &n in generators {
            let next = (r + (n % m) as usize) % size;
            let cand = d + n;
            if cand < dist[next] {
                dist[next] = cand;
                heap.push(Reverse((cand, next)));
            }
        }
    }
    dist
}
