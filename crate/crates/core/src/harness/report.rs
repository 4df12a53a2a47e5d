//! Per-semigroup invariant reports with a fixed JSON layout.

use std::fmt::Write as _;

use serde::Serialize;

use crate::betti::{self, ElementReport};
use crate::classify::{characterize, CharacterizationResult};
use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, SymmetryClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub generators: Vec<i64>,
    pub invariants: Invariants,
    pub betti: BettiSection,
    /// Absent outside embedding dimension three unless the generators form
    /// an arithmetic sequence.
    pub characterization: Option<CharacterizationResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub multiplicity: i64,
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub genus: i64,
    pub pseudo_frobenius: Vec<i64>,
    pub symmetry: SymmetryClass,
    /// Union of Δ(s) over the scanned range; its maximum is certified.
    pub delta_set: Vec<i64>,
    /// `None` for ℕ, where every Δ(s) is empty.
    pub delta_max: Option<i64>,
    pub catenary: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiSection {
    pub elements: Vec<i64>,
    pub presentation_cardinality: usize,
    pub per_element: Vec<ElementReport>,
}

/// Builds the full report. `scan_bound` overrides both the Betti scan bound
/// (embedding dimension other than three) and the stop of the Δ-set scan.
pub fn build(semigroup: &NumericalSemigroup, scan_bound: Option<i64>) -> Result<Report> {
    let classical = semigroup.classical_invariants();
    let generators = semigroup.generators().to_vec();
    let mut invariants = Invariants {
        multiplicity: semigroup.multiplicity(),
        embedding_dimension: semigroup.embedding_dimension(),
        frobenius: classical.frobenius,
        genus: classical.genus,
        pseudo_frobenius: classical.pseudo_frobenius,
        symmetry: classical.symmetry,
        delta_set: Vec::new(),
        delta_max: None,
        catenary: 0,
    };
    if semigroup.is_whole_naturals() {
        return Ok(Report {
            generators,
            invariants,
            betti: BettiSection {
                elements: Vec::new(),
                presentation_cardinality: 0,
                per_element: Vec::new(),
            },
            characterization: None,
        });
    }

    let direct = betti::betti_report(semigroup, scan_bound)?;
    invariants.delta_set = betti::delta_set_scan(semigroup, scan_bound)?;
    invariants.delta_max = Some(direct.delta_max);
    invariants.catenary = direct.catenary;
    let characterization = match characterize(semigroup) {
        Ok(c) => Some(c),
        Err(Error::UnsupportedDimension(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Report {
        generators,
        invariants,
        betti: BettiSection {
            elements: direct.betti_elements,
            presentation_cardinality: direct.presentation_cardinality,
            per_element: direct.per_element,
        },
        characterization,
    })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn symmetry_label(s: SymmetryClass) -> &'static str {
    match s {
        SymmetryClass::Symmetric => "symmetric",
        SymmetryClass::PseudoSymmetric => "pseudo_symmetric",
        SymmetryClass::Neither => "neither",
    }
}

/// Betti elements with their factorization data, one block per element.
pub fn render_elements(out: &mut String, elements: &[ElementReport]) {
    for e in elements {
        let _ = writeln!(out, "betti element {}", e.element);
        let z: Vec<String> = e.factorizations.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  Z = {{{}}}", z.join(", "));
        let _ = writeln!(out, "  L = {{{}}}", join(&e.length_set));
        let _ = writeln!(out, "  delta = {{{}}}", join(&e.delta));
        for (k, class) in e.r_classes.iter().enumerate() {
            let members: Vec<String> = class.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "  R-class {}: {{{}}} (min length {})",
                k + 1,
                members.join(", "),
                e.r_class_min_lengths[k]
            );
        }
        let _ = writeln!(out, "  mu = {}", e.mu);
        let _ = writeln!(out, "  cat = {}", e.catenary);
    }
}

/// Plain-text form, one `key=value` per line for the scalar invariants.
pub fn render_text(report: &Report) -> String {
    let inv = &report.invariants;
    let mut out = String::new();
    let _ = writeln!(out, "S=<{}>", join(&report.generators));
    let _ = writeln!(out, "multiplicity={}", inv.multiplicity);
    let _ = writeln!(out, "embedding_dimension={}", inv.embedding_dimension);
    let _ = writeln!(out, "frobenius={}", inv.frobenius);
    let _ = writeln!(out, "genus={}", inv.genus);
    let _ = writeln!(out, "pseudo_frobenius={{{}}}", join(&inv.pseudo_frobenius));
    let _ = writeln!(out, "symmetry={}", symmetry_label(inv.symmetry));
    let _ = writeln!(out, "delta_set={{{}}}", join(&inv.delta_set));
    match inv.delta_max {
        Some(d) => {
            let _ = writeln!(out, "delta_max={d}");
        }
        None => {
            let _ = writeln!(out, "delta_max=none");
        }
    }
    let _ = writeln!(out, "catenary={}", inv.catenary);
    let _ = writeln!(out, "betti_elements={{{}}}", join(&report.betti.elements));
    let _ = writeln!(
        out,
        "presentation_cardinality={}",
        report.betti.presentation_cardinality
    );
    if let Some(c) = &report.characterization {
        if let Some(b) = c.betti_count {
            let _ = writeln!(out, "betti_count={b}");
        }
        let _ = writeln!(out, "closed_form_delta_max={}", c.delta_max);
        let _ = writeln!(out, "closed_form_catenary={}", c.catenary);
        let _ = writeln!(out, "minimal={}", c.minimal_catenary);
        let _ = writeln!(out, "witness={}", c.witness);
    }
    render_elements(&mut out, &report.betti.per_element);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn json_layout() {
        let r = build(&sg(&[4, 9, 15]), None).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v.as_object().unwrap().len(), 4);
        let text = serde_json::to_string(&r).unwrap();
        let at = |k: &str| text.find(&format!("\"{k}\":")).unwrap();
        assert!(at("generators") < at("invariants"));
        assert!(at("invariants") < at("betti") && at("betti") < at("characterization"));
        assert_eq!(v["characterization"]["witness"], "thm24.bullet1");
        assert_eq!(v["invariants"]["catenary"], 6);
        assert_eq!(v["betti"]["elements"], serde_json::json!([24, 27, 30]));
    }

    #[test]
    fn no_floats_anywhere() {
        fn walk(v: &serde_json::Value) {
            match v {
                serde_json::Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "{n}"),
                serde_json::Value::Array(a) => a.iter().for_each(walk),
                serde_json::Value::Object(o) => o.values().for_each(walk),
                _ => {}
            }
        }
        for g in [&[10, 14, 53][..], &[7, 9, 11, 13, 15], &[1], &[3, 5]] {
            walk(&serde_json::to_value(build(&sg(g), None).unwrap()).unwrap());
        }
    }

    #[test]
    fn whole_naturals() {
        let r = build(&sg(&[1]), None).unwrap();
        assert_eq!(r.invariants.frobenius, -1);
        assert_eq!(r.invariants.delta_max, None);
        assert!(r.betti.elements.is_empty() && r.characterization.is_none());
        let v = serde_json::to_value(&r).unwrap();
        assert!(v["characterization"].is_null());
    }

    #[test]
    fn text_report() {
        let text = render_text(&build(&sg(&[10, 14, 53]), None).unwrap());
        for line in [
            "delta_max=7",
            "catenary=9",
            "minimal=true",
            "witness=thmB2.bullet1",
        ] {
            assert!(text.lines().any(|l| l == line), "{line} missing in\n{text}");
        }
    }

    #[test]
    fn dimension_four_has_no_characterization() {
        let r = build(&sg(&[5, 6, 7, 9]), None).unwrap();
        assert!(r.characterization.is_none());
        assert!(r.invariants.delta_max.is_some());
    }
}
