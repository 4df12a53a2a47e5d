//! Two Betti elements: S = ⟨a·m_1, a·m_2, b·m_1 + c·m_2⟩, symmetric.

use num_integer::Integer;
use serde::Serialize;

use super::{dim3_params, Witness};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoBettiParametrization {
    pub a: i64,
    pub m1: i64,
    pub m2: i64,
    pub b: i64,
    pub c: i64,
    /// Minimizer of |b + c + λ(m_2 − m_1) − a| over −⌊b/m_2⌋ ≤ λ ≤ ⌊c/m_1⌋,
    /// smallest on ties.
    pub lambda_star: i64,
    /// m_2 − m_1
    pub delta1: i64,
    /// |b + c + λ*(m_2 − m_1) − a|
    pub delta2: i64,
}

impl TwoBettiParametrization {
    /// Checks m_1 < m_2 coprime and > 1, a ≥ 2, b + c ≥ 2,
    /// gcd(a, b·m_1 + c·m_2) = 1.
    pub fn new(a: i64, m1: i64, m2: i64, b: i64, c: i64) -> Result<Self> {
        let valid = m1 > 1
            && m1 < m2
            && m1.gcd(&m2) == 1
            && a >= 2
            && b >= 0
            && c >= 0
            && b + c >= 2
            && a.gcd(&(b * m1 + c * m2)) == 1;
        if !valid {
            return Err(Error::NoValidParametrization);
        }
        let spread = m2 - m1;
        let signed = |lambda: i64| (b + c + lambda * spread - a).abs();
        let lambda_star = (-(b / m2)..=c / m1)
            .min_by_key(|&l| (signed(l), l))
            .expect("range contains 0");
        Ok(Self {
            a,
            m1,
            m2,
            b,
            c,
            lambda_star,
            delta1: spread,
            delta2: signed(lambda_star),
        })
    }

    /// Generators a·m_1, a·m_2, b·m_1 + c·m_2 in ascending order.
    pub fn generators(&self) -> [i64; 3] {
        let mut g = [
            self.a * self.m1,
            self.a * self.m2,
            self.b * self.m1 + self.c * self.m2,
        ];
        g.sort_unstable();
        g
    }

    /// The same semigroup written with (b + m_2, c − m_1), if c ≥ m_1.
    pub fn shifted(&self) -> Option<Self> {
        if self.c < self.m1 {
            return None;
        }
        Self::new(self.a, self.m1, self.m2, self.b + self.m2, self.c - self.m1).ok()
    }

    /// Whether Z(a·m_1·m_2) = {(m_2, 0, 0), (0, m_1, 0)}, i.e. m_1·m_2 − d is
    /// not in ⟨m_1, m_2⟩ for d = b·m_1 + c·m_2. The closed forms rely on it;
    /// otherwise a·m_1·m_2 has a factorization through the third generator.
    pub fn is_proper(&self) -> bool {
        let rest = self.m1 * self.m2 - (self.b * self.m1 + self.c * self.m2);
        rest < 0 || !(0..=rest / self.m1).any(|y| (rest - y * self.m1) % self.m2 == 0)
    }

    /// b + c − ⌊b/m_2⌋(m_2 − m_1): the least length in the class of the
    /// factorizations (b + k·m_2, c − k·m_1, 0).
    fn least_mixed_length(&self) -> i64 {
        self.b + self.c - (self.b / self.m2) * (self.m2 - self.m1)
    }
}

/// Every proper parametrization of S, one per generator pair whose gcd a ≥ 2
/// leaves a third generator representable as b·m_1 + c·m_2 (b minimal).
/// Pairs are visited in index order.
///
/// Improper ones (see [`TwoBettiParametrization::is_proper`]) describe the
/// same semigroup but give wrong closed forms, e.g. ⟨6,8,15⟩ as
/// 3·⟨2,5⟩ + 8·ℕ, and are skipped.
pub fn two_betti_parametrizations(
    semigroup: &NumericalSemigroup,
) -> Result<Vec<TwoBettiParametrization>> {
    let d = dim3_params(semigroup)?;
    if d.betti_count != 2 {
        return Err(Error::NotTwoBetti);
    }
    let n = d.generators;
    let mut found = Vec::new();
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let a = n[i].gcd(&n[j]);
        if a < 2 {
            continue;
        }
        let (m1, m2) = (n[i] / a, n[j] / a);
        let third = n[k];
        let Some(b) = (0..m2.min(third / m1 + 1)).find(|&b| (third - b * m1) % m2 == 0) else {
            continue;
        };
        let c = (third - b * m1) / m2;
        if let Ok(p) = TwoBettiParametrization::new(a, m1, m2, b, c) {
            debug_assert_eq!(p.generators(), n);
            if !p.is_proper() {
                continue;
            }
            found.push(p);
        }
    }
    Ok(found)
}

/// The parametrization from the first admissible generator pair.
///
/// All admissible parametrizations must give the same invariants and
/// verdict; a disagreement is reported as [`Error::Inconsistent`].
pub fn two_betti_parametrize(semigroup: &NumericalSemigroup) -> Result<TwoBettiParametrization> {
    let all = two_betti_parametrizations(semigroup)?;
    let first = all.first().cloned().ok_or(Error::NoValidParametrization)?;
    let expected = (two_betti_invariants(&first), two_betti_minimal(&first).0);
    for other in &all[1..] {
        let got = (two_betti_invariants(other), two_betti_minimal(other).0);
        if got != expected {
            return Err(Error::Inconsistent(format!(
                "{semigroup}: parametrizations {first:?} and {other:?} disagree ({expected:?} vs {got:?})"
            )));
        }
    }
    Ok(first)
}

/// (max Δ(S), cat(S)) = (max{δ_1, δ_2}, max{m_2, a, b + c − ⌊b/m_2⌋(m_2 − m_1)}).
pub fn two_betti_invariants(p: &TwoBettiParametrization) -> (i64, i64) {
    let delta_max = p.delta1.max(p.delta2);
    let catenary = p.m2.max(p.a).max(p.least_mixed_length());
    (delta_max, catenary)
}

/// The five-bullet criterion for max Δ(S) + 2 = cat(S); reports the first
/// bullet that holds.
pub fn two_betti_minimal(p: &TwoBettiParametrization) -> (bool, Witness) {
    let (a, m1, m2, b, c) = (p.a, p.m1, p.m2, p.b, p.c);
    let fb = b / m2;
    let fc = c / m1;
    let t = p.least_mixed_length();
    let bullets = [
        a == 2 && m2 < t,
        a == 2 && 2 < m1 && m2 == t,
        m1 == 2 && {
            let t2 = b + c - fb * (m2 - 2);
            a < t2 && t2 <= m2
        },
        m1 == 2 && m2 >= a && {
            let t2 = b + c - fb * (m2 - 2);
            t2 <= a && a < b + c + fc * (m2 - 2) + m2 - 2
        },
        b + c == 2 && c < m1 && m2 <= a,
    ];
    match bullets.iter().position(|&hit| hit) {
        Some(k) => (true, Witness::TwoBetti(k as u8 + 1)),
        None => (false, Witness::None),
    }
}
