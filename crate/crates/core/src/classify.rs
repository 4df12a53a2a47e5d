//! Minimal-catenary characterization: dispatch on the Betti count (or the
//! arithmetic-sequence shape) and evaluate the matching closed forms.

use serde::Serialize;

use crate::arithmetic::{arithmetic_invariants, as_arithmetic_sequence};
use crate::dim3::{self, Witness};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    SingleBetti,
    TwoBetti,
    ThreeBetti,
    Arithmetic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterizationResult {
    pub regime: Regime,
    /// Number of Betti elements; absent for arithmetic sequences outside
    /// embedding dimension three.
    pub betti_count: Option<u8>,
    pub delta_max: i64,
    pub catenary: i64,
    pub minimal_catenary: bool,
    pub witness: Witness,
}

/// Closed-form max Δ(S), cat(S) and the verdict max Δ(S) + 2 = cat(S).
///
/// Embedding dimension three dispatches on the number of Betti elements.
/// Other dimensions are accepted only for arithmetic sequences.
pub fn characterize(semigroup: &NumericalSemigroup) -> Result<CharacterizationResult> {
    if semigroup.embedding_dimension() != 3 {
        let (n, k, t) = as_arithmetic_sequence(semigroup)
            .ok_or(Error::UnsupportedDimension(semigroup.embedding_dimension()))?;
        let a = arithmetic_invariants(n, k, t)?;
        return Ok(CharacterizationResult {
            regime: Regime::Arithmetic,
            betti_count: None,
            delta_max: k,
            catenary: a.catenary,
            minimal_catenary: a.minimal,
            witness: if a.minimal {
                Witness::ArithmeticCeil2
            } else {
                Witness::None
            },
        });
    }

    let d = dim3::dim3_params(semigroup)?;
    let (regime, delta_max, catenary, minimal, witness) = match d.betti_count {
        1 => {
            let (dm, cat, minimal) = dim3::single_betti_invariants(semigroup)?;
            (
                Regime::SingleBetti,
                dm,
                cat,
                minimal,
                Witness::SingleBettiNever,
            )
        }
        2 => {
            let p = dim3::two_betti_parametrize(semigroup)?;
            let (dm, cat) = dim3::two::two_betti_invariants(&p);
            let (minimal, witness) = dim3::two::two_betti_minimal(&p);
            (Regime::TwoBetti, dm, cat, minimal, witness)
        }
        _ => {
            let (dm, cat) = dim3::three_betti_invariants(&d)?;
            let (minimal, witness) = dim3::three_betti_minimal(&d)?;
            (Regime::ThreeBetti, dm, cat, minimal, witness)
        }
    };
    if minimal != (delta_max + 2 == catenary) {
        return Err(Error::Inconsistent(format!(
            "{semigroup}: criterion says {minimal} ({witness}) but closed forms give {delta_max} + 2 vs {catenary}"
        )));
    }
    Ok(CharacterizationResult {
        regime,
        betti_count: Some(d.betti_count),
        delta_max,
        catenary,
        minimal_catenary: minimal,
        witness,
    })
}
