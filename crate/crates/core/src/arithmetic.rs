//! Semigroups generated by arithmetic sequences ⟨n, n + k, …, n + t·k⟩.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArithmeticInvariants {
    pub n: i64,
    pub k: i64,
    pub t: i64,
    /// Always `[k]`.
    pub delta_set: Vec<i64>,
    /// ⌈n/t⌉ + k
    pub catenary: i64,
    /// ⌈n/t⌉ = 2
    pub minimal: bool,
    #[serde(skip)]
    pub semigroup: NumericalSemigroup,
}

/// Closed forms Δ(S) = {k}, cat(S) = ⌈n/t⌉ + k for S = ⟨n, n + k, …, n + t·k⟩.
///
/// Requires 1 ≤ t < n, k ≥ 1, gcd(n, k) = 1, and that the t + 1 terms form a
/// minimal generating set.
pub fn arithmetic_invariants(n: i64, k: i64, t: i64) -> Result<ArithmeticInvariants> {
    if !(1 <= t && t < n) {
        return Err(Error::InvalidArithmeticData(format!(
            "need 1 <= t < n, got n={n}, t={t}"
        )));
    }
    if k < 1 || n.gcd(&k) != 1 {
        return Err(Error::InvalidArithmeticData(format!(
            "need k >= 1 and gcd(n, k) = 1, got n={n}, k={k}"
        )));
    }
    let terms: Vec<i64> = (0..=t).map(|j| n + j * k).collect();
    let semigroup =
        NumericalSemigroup::new(&terms).map_err(|e| Error::InvalidArithmeticData(e.to_string()))?;
    if semigroup.generators() != terms.as_slice() {
        return Err(Error::InvalidArithmeticData(format!(
            "{terms:?} is not a minimal generating set"
        )));
    }
    let ceil = Integer::div_ceil(&n, &t);
    Ok(ArithmeticInvariants {
        n,
        k,
        t,
        delta_set: vec![k],
        catenary: ceil + k,
        minimal: ceil == 2,
        semigroup,
    })
}

/// (n, k, t) when the minimal generators form an arithmetic sequence with at
/// least two terms.
pub fn as_arithmetic_sequence(semigroup: &NumericalSemigroup) -> Option<(i64, i64, i64)> {
    let g = semigroup.generators();
    if g.len() < 2 {
        return None;
    }
    let k = g[1] - g[0];
    g.windows(2)
        .all(|w| w[1] - w[0] == k)
        .then(|| (g[0], k, g.len() as i64 - 1))
}
