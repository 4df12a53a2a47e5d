//! Three Betti elements (nonsymmetric): every r_ij is positive and unique.

use super::{Dim3Data, Witness};
use crate::error::{Error, Result};

fn require_three(d: &Dim3Data) -> Result<()> {
    if d.betti_count != 3 {
        return Err(Error::NotThreeBetti);
    }
    Ok(())
}

/// (max Δ(S), cat(S)) with δ_1 = c_1 − r_12 − r_13, δ_3 = r_31 + r_32 − c_3:
/// max Δ(S) = max{δ_1, δ_3} and cat(S) = max{c_1, c_2, r_21 + r_23, r_31 + r_32}.
pub fn three_betti_invariants(d: &Dim3Data) -> Result<(i64, i64)> {
    require_three(d)?;
    let (c, r) = (d.c, d.r);
    let delta1 = c[0] - r[0][1] - r[0][2];
    let delta3 = r[2][0] + r[2][1] - c[2];
    let catenary = c[0].max(c[1]).max(r[1][0] + r[1][2]).max(r[2][0] + r[2][1]);
    Ok((delta1.max(delta3), catenary))
}

/// The two-bullet criterion for max Δ(S) + 2 = cat(S):
///
/// 1. r_12 = r_13 = 1, r_21 + r_23 > c_2 and c_1 ≥ max{r_21 + r_23, r_31 + r_32};
/// 2. c_3 = 2 and r_31 + r_32 ≥ max{c_1, c_2}.
pub fn three_betti_minimal(d: &Dim3Data) -> Result<(bool, Witness)> {
    require_three(d)?;
    let (c, r) = (d.c, d.r);
    let row2 = r[1][0] + r[1][2];
    let row3 = r[2][0] + r[2][1];
    if r[0][1] == 1 && r[0][2] == 1 && row2 > c[1] && c[0] >= row2.max(row3) {
        return Ok((true, Witness::ThreeBetti(1)));
    }
    if c[2] == 2 && row3 >= c[0].max(c[1]) {
        return Ok((true, Witness::ThreeBetti(2)));
    }
    Ok((false, Witness::None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti;
    use crate::dim3::dim3_params;
    use crate::semigroup::NumericalSemigroup;

    fn params(g: &[i64]) -> Dim3Data {
        dim3_params(&NumericalSemigroup::new(g).unwrap()).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            three_betti_invariants(&params(&[4, 9, 15])).unwrap(),
            (4, 6)
        );
        assert_eq!(
            three_betti_invariants(&params(&[3, 8, 13])).unwrap(),
            (5, 7)
        );
        assert_eq!(three_betti_invariants(&params(&[4, 5, 7])).unwrap(), (1, 3));
        assert_eq!(
            three_betti_invariants(&params(&[7, 11, 38])).unwrap(),
            (6, 8)
        );
        assert_eq!(
            three_betti_invariants(&params(&[5, 6, 9])),
            Err(Error::NotThreeBetti)
        );
    }

    #[test]
    fn criterion() {
        assert_eq!(
            three_betti_minimal(&params(&[4, 9, 15])).unwrap(),
            (true, Witness::ThreeBetti(1))
        );
        assert_eq!(
            three_betti_minimal(&params(&[7, 11, 38])).unwrap(),
            (true, Witness::ThreeBetti(2))
        );
        assert_eq!(
            three_betti_minimal(&params(&[3, 8, 13])).unwrap(),
            (true, Witness::ThreeBetti(2))
        );
        assert_eq!(
            three_betti_minimal(&params(&[4, 5, 7])).unwrap(),
            (true, Witness::ThreeBetti(2))
        );
        assert_eq!(
            three_betti_minimal(&params(&[6, 10, 15])),
            Err(Error::NotThreeBetti)
        );
    }

    #[test]
    fn a_nonminimal_triple_fails_both_bullets() {
        // first nonsymmetric triple in sweep order whose direct invariants
        // have max Δ + 2 < cat
        let mut found = None;
        'outer: for n1 in 3..=12i64 {
            for n2 in n1 + 1..=16 {
                for n3 in n2 + 1..=20 {
                    let Ok(s) = NumericalSemigroup::new(&[n1, n2, n3]) else {
                        continue;
                    };
                    if s.embedding_dimension() != 3 {
                        continue;
                    }
                    let d = dim3_params(&s).unwrap();
                    if d.betti_count != 3 {
                        continue;
                    }
                    let report = betti::betti_report(&s, None).unwrap();
                    if report.delta_max + 2 < report.catenary {
                        found = Some(d);
                        break 'outer;
                    }
                }
            }
        }
        let d = found.expect("some nonsymmetric triple is not minimal");
        // ⟨5,6,7⟩ is arithmetic with ⌈5/2⌉ = 3, so max Δ + 2 = 3 < 4 = cat
        assert_eq!(d.generators, [5, 6, 7]);
        assert_eq!(three_betti_minimal(&d).unwrap(), (false, Witness::None));
    }
}
