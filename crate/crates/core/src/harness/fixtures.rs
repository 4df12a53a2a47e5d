//! Worked examples with known Δ(S), cat(S) and verdicts, plus two
//! parametric families with closed-form Betti elements and classical
//! invariants.

use num_integer::Integer;
use serde::Serialize;

use crate::arithmetic::arithmetic_invariants;
use crate::betti;
use crate::classify::characterize;
use crate::dim3::dim3_params;
use crate::semigroup::{NumericalSemigroup, SymmetryClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    /// Full Δ(S), cat(S) and the witness of max Δ(S) + 2 = cat(S).
    Example {
        generators: Vec<i64>,
        delta_set: Vec<i64>,
        catenary: i64,
        witness: &'static str,
    },
    /// ⟨n, n + k, …, n + t·k⟩ against both closed forms and direct values.
    Arithmetic {
        n: i64,
        k: i64,
        t: i64,
        catenary: i64,
        minimal: bool,
    },
    /// Betti(⟨4, 4+k, 4+2k⟩) = {8+2k, 8+4k} and cat = k + 2 for odd k.
    GluedFamily { max_k: i64 },
    /// ⟨3, 3+k, 3+2k⟩ with 3 ∤ k: F = 2k, g = k + 1, pseudo-symmetric,
    /// c = (2 + k, 2, 2).
    PseudoSymmetricFamily { max_k: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub check: Check,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

fn example(g: &[i64], delta_set: &[i64], catenary: i64, witness: &'static str) -> Fixture {
    Fixture {
        name: NumericalSemigroup::new(g)
            .map(|s| s.to_string())
            .unwrap_or_default(),
        check: Check::Example {
            generators: g.to_vec(),
            delta_set: delta_set.to_vec(),
            catenary,
            witness,
        },
    }
}

/// The fourteen fixtures, in a fixed order.
pub fn all() -> Vec<Fixture> {
    vec![
        example(&[10, 14, 53], &[1, 2, 3, 5, 7], 9, "thmB2.bullet1"),
        example(&[6, 8, 15], &[1, 2], 4, "thmB2.bullet2"),
        example(&[4, 10, 17], &[1, 2, 3], 5, "thmB2.bullet3"),
        example(&[10, 16, 35], &[1, 2, 3, 5], 7, "thmB2.bullet4"),
        example(&[9, 10, 25], &[1, 2, 3], 5, "thmB2.bullet4"),
        example(&[5, 14, 21], &[1, 2, 3, 4, 5], 7, "thmB2.bullet5"),
        example(&[5, 6, 9], &[1], 3, "thmB2.bullet5"),
        example(&[4, 9, 15], &[1, 2, 3, 4], 6, "thm24.bullet1"),
        example(&[3, 8, 13], &[5], 7, "thm24.bullet2"),
        example(&[4, 5, 7], &[1], 3, "thm24.bullet2"),
        example(&[7, 11, 38], &[1, 2, 3, 4, 5, 6], 8, "thm24.bullet2"),
        Fixture {
            name: "arithmetic (n,k,t)=(7,2,4)".into(),
            check: Check::Arithmetic {
                n: 7,
                k: 2,
                t: 4,
                catenary: 4,
                minimal: true,
            },
        },
        Fixture {
            name: "<4,4+k,4+2k>, odd k <= 15".into(),
            check: Check::GluedFamily { max_k: 15 },
        },
        Fixture {
            name: "<3,3+k,3+2k>, 3 does not divide k <= 20".into(),
            check: Check::PseudoSymmetricFamily { max_k: 20 },
        },
    ]
}

/// A copy of [`all`] whose first example expects the wrong catenary degree;
/// running it must fail.
pub fn corrupted() -> Vec<Fixture> {
    let mut fixtures = all();
    if let Check::Example { catenary, .. } = &mut fixtures[0].check {
        *catenary += 1;
    }
    fixtures
}

fn fmt_set(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

impl Fixture {
    pub fn run(&self) -> FixtureOutcome {
        let (expected, actual) = match &self.check {
            Check::Example {
                generators,
                delta_set,
                catenary,
                witness,
            } => (
                format!(
                    "delta={} cat={catenary} minimal=true witness={witness}",
                    fmt_set(delta_set)
                ),
                run_example(generators),
            ),
            Check::Arithmetic {
                n,
                k,
                t,
                catenary,
                minimal,
            } => (
                format!("delta={{{k}}} cat={catenary} minimal={minimal}"),
                run_arithmetic(*n, *k, *t),
            ),
            Check::GluedFamily { max_k } => {
                let ks: Vec<i64> = (1..=*max_k).step_by(2).collect();
                let expected = ks
                    .iter()
                    .map(|k| {
                        format!(
                            "k={k}: betti={} cat={}",
                            fmt_set(&[8 + 2 * k, 8 + 4 * k]),
                            k + 2
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                (expected, run_glued(&ks))
            }
            Check::PseudoSymmetricFamily { max_k } => {
                let ks: Vec<i64> = (1..=*max_k).filter(|k| k.gcd(&3) == 1).collect();
                let expected = ks
                    .iter()
                    .map(|k| {
                        format!(
                            "k={k}: F={} g={} pseudo_symmetric c=({},2,2)",
                            2 * k,
                            k + 1,
                            2 + k
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                (expected, run_pseudo_symmetric(&ks))
            }
        };
        FixtureOutcome {
            name: self.name.clone(),
            passed: expected == actual,
            expected,
            actual,
        }
    }
}

fn run_example(generators: &[i64]) -> String {
    let s = match NumericalSemigroup::new(generators) {
        Ok(s) => s,
        Err(e) => return format!("error: {e}"),
    };
    let delta = match betti::delta_set_scan(&s, None) {
        Ok(d) => d,
        Err(e) => return format!("error: {e}"),
    };
    let direct = match betti::betti_report(&s, None) {
        Ok(r) => r,
        Err(e) => return format!("error: {e}"),
    };
    let ch = match characterize(&s) {
        Ok(c) => c,
        Err(e) => return format!("error: {e}"),
    };
    let mut out = format!(
        "delta={} cat={} minimal={} witness={}",
        fmt_set(&delta),
        direct.catenary,
        ch.minimal_catenary,
        ch.witness
    );
    if (ch.delta_max, ch.catenary) != (direct.delta_max, direct.catenary) {
        out += &format!(" closed_form=({}, {})", ch.delta_max, ch.catenary);
    }
    out
}

fn run_arithmetic(n: i64, k: i64, t: i64) -> String {
    let a = match arithmetic_invariants(n, k, t) {
        Ok(a) => a,
        Err(e) => return format!("error: {e}"),
    };
    let delta = betti::delta_set_scan(&a.semigroup, None);
    let cat = betti::catenary(&a.semigroup);
    match (delta, cat) {
        (Ok(delta), Ok(cat)) => {
            let mut out = format!(
                "delta={} cat={} minimal={}",
                fmt_set(&delta),
                cat,
                a.minimal
            );
            if (a.delta_set.clone(), a.catenary) != (delta, cat) {
                out += &format!(" closed_form=({}, {})", fmt_set(&a.delta_set), a.catenary);
            }
            out
        }
        (Err(e), _) | (_, Err(e)) => format!("error: {e}"),
    }
}

fn run_glued(ks: &[i64]) -> String {
    ks.iter()
        .map(|&k| {
            let s = match NumericalSemigroup::new(&[4, 4 + k, 4 + 2 * k]) {
                Ok(s) => s,
                Err(e) => return format!("k={k}: error: {e}"),
            };
            // scanned, not read off the c_i
            let betti = betti::betti_elements_scan(&s, betti::default_scan_bound(&s));
            let cat = betti::catenary(&s).unwrap_or(-1);
            format!("k={k}: betti={} cat={cat}", fmt_set(&betti))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn run_pseudo_symmetric(ks: &[i64]) -> String {
    ks.iter()
        .map(|&k| {
            let s = match NumericalSemigroup::new(&[3, 3 + k, 3 + 2 * k]) {
                Ok(s) => s,
                Err(e) => return format!("k={k}: error: {e}"),
            };
            let class = match s.symmetry_class() {
                SymmetryClass::Symmetric => "symmetric",
                SymmetryClass::PseudoSymmetric => "pseudo_symmetric",
                SymmetryClass::Neither => "neither",
            };
            let c = match dim3_params(&s) {
                Ok(d) => format!("({},{},{})", d.c[0], d.c[1], d.c[2]),
                Err(e) => format!("error: {e}"),
            };
            format!("k={k}: F={} g={} {class} c={c}", s.frobenius(), s.genus())
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Runs every fixture in order.
pub fn run_all(fixtures: &[Fixture]) -> Vec<FixtureOutcome> {
    fixtures.iter().map(Fixture::run).collect()
}
