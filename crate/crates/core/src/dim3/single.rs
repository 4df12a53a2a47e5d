//! One Betti element h = c_1n_1 = c_2n_2 = c_3n_3.

use num_integer::Integer;

use super::{dim3_params, Dim3Data};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Pairwise coprime p_1 > p_2 > p_3 > 1 with n_1 = p_2p_3, n_2 = p_1p_3,
/// n_3 = p_1p_2 and c_i = p_i.
pub fn single_betti_structure(semigroup: &NumericalSemigroup) -> Result<(i64, i64, i64)> {
    let d = single_betti_data(semigroup)?;
    let [n1, n2, n3] = d.generators;
    let p1 = n2.gcd(&n3);
    let p2 = n1.gcd(&n3);
    let p3 = n1.gcd(&n2);
    let consistent = n1 == p2 * p3
        && n2 == p1 * p3
        && n3 == p1 * p2
        && d.c == [p1, p2, p3]
        && p1 > p2
        && p2 > p3
        && p3 > 1;
    if !consistent {
        return Err(Error::Inconsistent(format!(
            "{semigroup}: single Betti element but factors ({p1},{p2},{p3}) do not match c = {:?}",
            d.c
        )));
    }
    Ok((p1, p2, p3))
}

/// (max Δ(S), cat(S), minimal) = (max{c_2 − c_3, c_1 − c_2}, c_1, false).
pub fn single_betti_invariants(semigroup: &NumericalSemigroup) -> Result<(i64, i64, bool)> {
    let d = single_betti_data(semigroup)?;
    let [c1, c2, c3] = d.c;
    let delta_max = (c2 - c3).max(c1 - c2);
    let catenary = c1;
    assert!(
        delta_max + 2 < catenary,
        "{semigroup}: single Betti element with max delta {delta_max} and catenary {catenary}"
    );
    Ok((delta_max, catenary, false))
}

fn single_betti_data(semigroup: &NumericalSemigroup) -> Result<Dim3Data> {
    let d = dim3_params(semigroup)?;
    if d.betti_count != 1 {
        return Err(Error::NotSingleBetti);
    }
    Ok(d)
}
