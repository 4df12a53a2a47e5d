//! Embedding dimension three.
//!
//! For S = ⟨n_1, n_2, n_3⟩ let c_i be the least positive k with k·n_i in the
//! semigroup generated by the other two generators, and write
//! c_i·n_i = r_ij·n_j + r_ik·n_k. The Betti elements are the distinct values
//! among c_i·n_i, and their number (1, 2 or 3) selects which closed forms for
//! max Δ(S) and cat(S) apply:
//!
//! * one Betti element: [`single`], never minimal;
//! * two Betti elements (symmetric): [`two`], five-bullet criterion;
//! * three Betti elements (nonsymmetric): [`three`], two-bullet criterion.
//!
//! Indices are zero-based in code: `c[0]` is c_1 and `r[1][2]` is r_23.

pub mod single;
pub mod three;
pub mod two;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub use single::{single_betti_invariants, single_betti_structure};
pub use three::{three_betti_invariants, three_betti_minimal};
pub use two::{two_betti_parametrizations, two_betti_parametrize, TwoBettiParametrization};

/// The criterion clause that decides the minimal-catenary verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    /// A single Betti element never attains equality.
    SingleBettiNever,
    /// Bullet 1..=5 of the two-Betti criterion.
    TwoBetti(u8),
    /// Bullet 1..=2 of the three-Betti criterion.
    ThreeBetti(u8),
    /// Arithmetic sequence with ⌈n/t⌉ = 2.
    ArithmeticCeil2,
    None,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::SingleBettiNever => f.write_str("singleBetti.never"),
            Witness::TwoBetti(k) => write!(f, "thmB2.bullet{k}"),
            Witness::ThreeBetti(k) => write!(f, "thm24.bullet{k}"),
            Witness::ArithmeticCeil2 => f.write_str("arithmetic.ceil2"),
            Witness::None => f.write_str("none"),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dim3Data {
    pub generators: [i64; 3],
    pub c: [i64; 3],
    /// `r[i][j]` for i ≠ j; diagonal entries are zero.
    pub r: [[i64; 3]; 3],
    /// Number of representations of c_i·n_i in the other two generators.
    pub representation_counts: [usize; 3],
    pub symmetric: bool,
    pub betti_count: u8,
}

impl Dim3Data {
    /// Distinct values of c_i·n_i, ascending.
    pub fn betti_values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = (0..3).map(|i| self.c[i] * self.generators[i]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Whether every stored representation is the only one.
    pub fn unique_representations(&self) -> bool {
        self.representation_counts.iter().all(|&k| k == 1)
    }

    /// c_i·n_i − r_ij·n_j − r_ik·n_k, zero for valid data.
    pub fn residual(&self, i: usize) -> i64 {
        let (j, k) = others(i);
        self.c[i] * self.generators[i]
            - self.r[i][j] * self.generators[j]
            - self.r[i][k] * self.generators[k]
    }
}

/// The two indices other than `i`, ascending.
pub(crate) fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn three_generators(semigroup: &NumericalSemigroup) -> Result<[i64; 3]> {
    match *semigroup.generators() {
        [a, b, c] => Ok([a, b, c]),
        _ => Err(Error::UnsupportedDimension(semigroup.embedding_dimension())),
    }
}

/// All (y, z) ≥ 0 with y·a + z·b = target, y ascending.
fn representations(target: i64, a: i64, b: i64) -> Vec<(i64, i64)> {
    (0..=target / a)
        .filter(|y| (target - y * a) % b == 0)
        .map(|y| (y, (target - y * a) / b))
        .collect()
}

fn in_two_generated(target: i64, a: i64, b: i64) -> bool {
    (0..=target / a).any(|y| (target - y * a) % b == 0)
}

/// c_i and r_ij for every i.
///
/// Nonsymmetric semigroups have a unique, strictly positive representation of
/// each c_i·n_i; this is checked. Symmetric ones may have several, and a
/// representation with a zero coordinate is stored whenever one exists
/// (zero at the lower-indexed partner preferred).
pub fn dim3_params(semigroup: &NumericalSemigroup) -> Result<Dim3Data> {
    let n = three_generators(semigroup)?;
    let mut c = [0i64; 3];
    let mut r = [[0i64; 3]; 3];
    let mut representation_counts = [0usize; 3];
    let mut zero_available = false;

    for i in 0..3 {
        let (j, k) = others(i);
        // k·n_i ∈ ⟨n_j⟩ once k = n_j, so the search ends by then.
        let ci = (1..=n[j])
            .find(|&m| in_two_generated(m * n[i], n[j], n[k]))
            .expect("n_j·n_i is always representable");
        c[i] = ci;
        let reps = representations(ci * n[i], n[j], n[k]);
        representation_counts[i] = reps.len();
        let chosen = reps
            .iter()
            .find(|(y, _)| *y == 0)
            .or_else(|| reps.iter().find(|(_, z)| *z == 0))
            .or_else(|| reps.first())
            .copied()
            .expect("at least one representation");
        if chosen.0 == 0 || chosen.1 == 0 {
            zero_available = true;
        }
        r[i][j] = chosen.0;
        r[i][k] = chosen.1;
    }

    let mut products: Vec<i64> = (0..3).map(|i| c[i] * n[i]).collect();
    products.sort_unstable();
    products.dedup();
    let betti_count = products.len() as u8;
    let symmetric = zero_available;

    if symmetric != (betti_count < 3) {
        return Err(Error::Inconsistent(format!(
            "{semigroup}: {betti_count} Betti elements but zero coefficient available = {symmetric}"
        )));
    }
    if !symmetric {
        for i in 0..3 {
            let (j, k) = others(i);
            if representation_counts[i] != 1 || r[i][j] == 0 || r[i][k] == 0 {
                return Err(Error::Inconsistent(format!(
                    "{semigroup}: nonsymmetric but c_{}·n_{} has {} representations",
                    i + 1,
                    i + 1,
                    representation_counts[i]
                )));
            }
        }
    }

    Ok(Dim3Data {
        generators: n,
        c,
        r,
        representation_counts,
        symmetric,
        betti_count,
    })
}

/// Number of distinct Betti elements: 1, 2 or 3.
pub fn betti_count(semigroup: &NumericalSemigroup) -> Result<u8> {
    Ok(dim3_params(semigroup)?.betti_count)
}
