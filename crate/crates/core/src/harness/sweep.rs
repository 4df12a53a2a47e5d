//! Exhaustive sweep over triples ⟨n_1, n_2, n_3⟩ comparing every closed form
//! with direct factorization computations.

use std::io::Write;
use std::time::Instant;

use num_integer::Integer;
use serde::Serialize;

use crate::betti::{self, default_scan_bound, BettiReport};
use crate::classify::characterize;
use crate::dim3::{self, others, Dim3Data, Witness};
use crate::error::Result;
use crate::factorization::{factorizations, Factorization};
use crate::semigroup::{NumericalSemigroup, SymmetryClass};

pub const CSV_HEADER: [&str; 10] = [
    "n1",
    "n2",
    "n3",
    "betti_count",
    "delta_max_cf",
    "delta_max_direct",
    "cat_cf",
    "cat_direct",
    "minimal",
    "witness",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub generators: [i64; 3],
    pub betti_count: u8,
    pub delta_max_cf: i64,
    pub delta_max_direct: i64,
    pub cat_cf: i64,
    pub cat_direct: i64,
    pub minimal: bool,
    pub witness: Witness,
    /// Wall time spent on this triple; never written to CSV.
    #[serde(skip)]
    pub elapsed_micros: u64,
}

impl SweepRecord {
    fn csv_row(&self) -> [String; 10] {
        let [n1, n2, n3] = self.generators;
        [
            n1.to_string(),
            n2.to_string(),
            n3.to_string(),
            self.betti_count.to_string(),
            self.delta_max_cf.to_string(),
            self.delta_max_direct.to_string(),
            self.cat_cf.to_string(),
            self.cat_direct.to_string(),
            self.minimal.to_string(),
            self.witness.to_string(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub generators: [i64; 3],
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Filter {
    Minimal,
    #[default]
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub max_n3: i64,
    /// Worker threads; 0 and 1 both mean sequential.
    pub parallel: usize,
    /// Also recompute the Betti elements by scanning ∇_s up to n_2·n_3.
    pub scan_betti: bool,
}

impl SweepOptions {
    pub fn new(max_n3: i64) -> Self {
        Self {
            max_n3,
            parallel: 1,
            scan_betti: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOutcome {
    /// Every checked triple, sorted by generators.
    pub records: Vec<SweepRecord>,
    /// Violations sorted by generators; the first is the reported
    /// counterexample.
    pub violations: Vec<Violation>,
}

impl SweepOutcome {
    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn filtered(&self, filter: Filter) -> impl Iterator<Item = &SweepRecord> {
        self.records
            .iter()
            .filter(move |r| filter == Filter::All || r.minimal)
    }
}

/// Triples 2 < n_1 < n_2 < n_3 = `n3` with gcd 1 that generate minimally.
pub fn triples_with_n3(n3: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for n1 in 3..n3 {
        for n2 in n1 + 1..n3 {
            if n1.gcd(&n2).gcd(&n3) != 1 || n2 % n1 == 0 {
                continue;
            }
            if (0..=n3 / n2).any(|y| (n3 - y * n2) % n1 == 0) {
                continue;
            }
            out.push([n1, n2, n3]);
        }
    }
    out
}

/// Every triple with n_3 ≤ `max_n3`, sorted.
pub fn triples(max_n3: i64) -> Vec<[i64; 3]> {
    let mut all: Vec<[i64; 3]> = (5..=max_n3).flat_map(triples_with_n3).collect();
    all.sort_unstable();
    all
}

/// Runs the sweep. With `parallel > 1` the values of n_3 are dealt
/// round-robin to scoped worker threads; results are merged and sorted, so
/// output is independent of scheduling.
pub fn run(options: SweepOptions) -> SweepOutcome {
    let tasks: Vec<i64> = (5..=options.max_n3).collect();
    let workers = options.parallel.max(1).min(tasks.len().max(1));
    let mut results: Vec<std::result::Result<SweepRecord, Violation>> = if workers == 1 {
        tasks
            .iter()
            .flat_map(|&n3| triples_with_n3(n3))
            .map(|g| check_triple(g, options.scan_betti))
            .collect()
    } else {
        let tasks = &tasks;
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        tasks
                            .iter()
                            .skip(w)
                            .step_by(workers)
                            .flat_map(|&n3| triples_with_n3(n3))
                            .map(|g| check_triple(g, options.scan_betti))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };
    results.sort_by_key(|r| match r {
        Ok(rec) => rec.generators,
        Err(v) => v.generators,
    });
    let mut records = Vec::new();
    let mut violations = Vec::new();
    for r in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(v) => violations.push(v),
        }
    }
    SweepOutcome {
        records,
        violations,
    }
}

/// Writes the records in CSV form with the fixed header.
pub fn write_csv<'a, W: Write>(
    out: W,
    records: impl IntoIterator<Item = &'a SweepRecord>,
) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.csv_row())?;
    }
    w.flush()?;
    Ok(())
}

/// Checks one triple against every closed form and structural property.
pub fn check_triple(
    generators: [i64; 3],
    scan_betti: bool,
) -> std::result::Result<SweepRecord, Violation> {
    let start = Instant::now();
    let fail = |message: String| Violation {
        generators,
        message,
    };
    let s = NumericalSemigroup::new(&generators).map_err(|e| fail(e.to_string()))?;
    if s.generators() != generators {
        return Err(fail(format!(
            "not a minimal generating set: reduces to {s}"
        )));
    }
    let d = dim3::dim3_params(&s).map_err(|e| fail(e.to_string()))?;
    let direct = betti::betti_report(&s, None).map_err(|e| fail(e.to_string()))?;
    let ch = characterize(&s).map_err(|e| fail(e.to_string()))?;

    structure_checks(&s, &d, &direct, scan_betti).map_err(fail)?;
    if d.betti_count == 2 {
        two_betti_checks(&s)
            .map_err(|e| fail(e.to_string()))?
            .map_or(Ok(()), |m| Err(fail(m)))?;
    }

    if (ch.delta_max, ch.catenary) != (direct.delta_max, direct.catenary) {
        return Err(fail(format!(
            "closed form (max delta, cat) = ({}, {}) but direct = ({}, {})",
            ch.delta_max, ch.catenary, direct.delta_max, direct.catenary
        )));
    }
    if ch.minimal_catenary != (direct.delta_max + 2 == direct.catenary) {
        return Err(fail(format!(
            "criterion says minimal = {} ({}) but direct max delta + 2 = {} vs cat = {}",
            ch.minimal_catenary,
            ch.witness,
            direct.delta_max + 2,
            direct.catenary
        )));
    }
    if direct.delta_max + 2 > direct.catenary {
        return Err(fail(format!(
            "max delta + 2 = {} exceeds cat = {}",
            direct.delta_max + 2,
            direct.catenary
        )));
    }
    Ok(SweepRecord {
        generators,
        betti_count: d.betti_count,
        delta_max_cf: ch.delta_max,
        delta_max_direct: direct.delta_max,
        cat_cf: ch.catenary,
        cat_direct: direct.catenary,
        minimal: ch.minimal_catenary,
        witness: ch.witness,
        elapsed_micros: start.elapsed().as_micros() as u64,
    })
}

fn structure_checks(
    s: &NumericalSemigroup,
    d: &Dim3Data,
    direct: &BettiReport,
    scan_betti: bool,
) -> std::result::Result<(), String> {
    for i in 0..3 {
        if d.residual(i) != 0 {
            return Err(format!(
                "c_{}·n_{} has residual {}",
                i + 1,
                i + 1,
                d.residual(i)
            ));
        }
    }
    let (c, r) = (d.c, d.r);
    if !d.symmetric {
        for i in 0..3 {
            let (j, k) = others(i);
            if r[i][j] <= 0 || r[i][k] <= 0 {
                return Err(format!(
                    "nonsymmetric with r_{}{} or r_{}{} not positive",
                    i + 1,
                    j + 1,
                    i + 1,
                    k + 1
                ));
            }
            if c[i] != r[j][i] + r[k][i] {
                return Err(format!(
                    "c_{} = {} differs from r_{}{} + r_{}{}",
                    i + 1,
                    c[i],
                    j + 1,
                    i + 1,
                    k + 1,
                    i + 1
                ));
            }
        }
        if c[0] <= r[0][1] + r[0][2] || c[2] >= r[2][0] + r[2][1] {
            return Err(format!(
                "sign conditions on c_1, c_3 fail: c = {c:?}, r = {r:?}"
            ));
        }
    }

    let genus_symmetric = s.symmetry_class() == SymmetryClass::Symmetric;
    let zero_available = (0..3).any(|i| (0..3).any(|j| i != j && r[i][j] == 0));
    let complete_intersection = direct.presentation_cardinality == 2;
    let few_betti = d.betti_count <= 2;
    if ![genus_symmetric, zero_available, complete_intersection]
        .iter()
        .all(|&x| x == few_betti)
    {
        return Err(format!(
            "symmetry characterizations disagree: betti_count = {}, genus test = {genus_symmetric}, \
             zero coefficient = {zero_available}, presentation cardinality = {}",
            d.betti_count, direct.presentation_cardinality
        ));
    }

    // cat(S) = max μ(b) holds globally; at a single Betti element only
    // μ(b) ≤ cat(b) ≤ cat(S) (⟨4,10,15⟩ at 30: μ = 3, cat = 5).
    let mu_max = direct.per_element.iter().map(|e| e.mu).max().unwrap_or(0);
    if mu_max != direct.catenary {
        return Err(format!(
            "cat(S) = {} but max mu = {mu_max}",
            direct.catenary
        ));
    }
    for e in &direct.per_element {
        if e.mu > e.catenary || e.catenary > direct.catenary {
            return Err(format!(
                "at {}: mu = {}, cat = {}, cat(S) = {}",
                e.element, e.mu, e.catenary, direct.catenary
            ));
        }
        if e.class_count() < 2 {
            return Err(format!("Betti element {} has a connected graph", e.element));
        }
    }

    if d.betti_count == 1 {
        single_betti_checks(s, d)?;
    }

    if scan_betti {
        let scanned = betti::betti_elements_scan(s, default_scan_bound(s));
        if scanned != direct.betti_elements {
            return Err(format!(
                "scanned Betti elements {scanned:?} differ from {:?}",
                direct.betti_elements
            ));
        }
    }
    Ok(())
}

fn single_betti_checks(s: &NumericalSemigroup, d: &Dim3Data) -> std::result::Result<(), String> {
    let (p1, p2, p3) = dim3::single_betti_structure(s).map_err(|e| e.to_string())?;
    let (dm, cat, minimal) = dim3::single_betti_invariants(s).map_err(|e| e.to_string())?;
    if minimal || dm + 2 >= cat {
        return Err(format!(
            "single Betti element but max delta + 2 = {} and cat = {cat}",
            dm + 2
        ));
    }
    let h = d.c[0] * d.generators[0];
    let mut z = factorizations(s, h);
    z.sort();
    let expected = vec![
        Factorization::new(vec![0, 0, p3]),
        Factorization::new(vec![0, p2, 0]),
        Factorization::new(vec![p1, 0, 0]),
    ];
    if z != expected {
        return Err(format!(
            "Z({h}) is not the three pure factorizations: {z:?}"
        ));
    }
    Ok(())
}

/// Shift and parametrization invariance; `Ok(Some(msg))` reports a violation.
fn two_betti_checks(s: &NumericalSemigroup) -> Result<Option<String>> {
    let all = dim3::two_betti_parametrizations(s)?;
    let Some(first) = all.first() else {
        return Ok(Some("no proper parametrization".into()));
    };
    let expected = (
        dim3::two::two_betti_invariants(first),
        dim3::two::two_betti_minimal(first).0,
    );
    for p in &all {
        if p.generators() != *<&[i64; 3]>::try_from(s.generators()).expect("three generators") {
            return Ok(Some(format!("{p:?} does not generate {s}")));
        }
        let got = (
            dim3::two::two_betti_invariants(p),
            dim3::two::two_betti_minimal(p).0,
        );
        if got != expected {
            return Ok(Some(format!(
                "parametrizations disagree: {first:?} vs {p:?}"
            )));
        }
        let mut q = p.clone();
        while let Some(next) = q.shifted() {
            let shifted = (
                dim3::two::two_betti_invariants(&next),
                dim3::two::two_betti_minimal(&next).0,
            );
            if shifted != expected {
                return Ok(Some(format!(
                    "shift {p:?} -> {next:?} changes the invariants"
                )));
            }
            q = next;
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_enumeration() {
        assert_eq!(triples(5), vec![[3, 4, 5]]);
        let t = triples(12);
        assert!(t.contains(&[4, 5, 7]));
        // 9 = 3·3 is not minimal, gcd(4, 6, 8) = 2
        assert!(!t.contains(&[3, 4, 9]) && !t.contains(&[4, 6, 8]));
        assert!(t.windows(2).all(|w| w[0] < w[1]));
        let oracle: Vec<[i64; 3]> = (3..=12)
            .flat_map(|a| (a + 1..=12).flat_map(move |b| (b + 1..=12).map(move |c| [a, b, c])))
            .filter(|g| NumericalSemigroup::new(g).is_ok_and(|s| s.generators() == g))
            .collect();
        assert_eq!(t, oracle);
    }

    #[test]
    fn small_sweep_is_clean_and_parallel_agrees() {
        let seq = run(SweepOptions::new(16));
        assert!(seq.violations.is_empty(), "{:?}", seq.first_violation());
        let par = run(SweepOptions {
            parallel: 3,
            ..SweepOptions::new(16)
        });
        assert_eq!(seq.records.len(), par.records.len());
        for (a, b) in seq.records.iter().zip(&par.records) {
            assert_eq!(a.csv_row(), b.csv_row());
        }
        let r = seq
            .records
            .iter()
            .find(|r| r.generators == [4, 5, 7])
            .unwrap();
        assert!(r.minimal);
    }

    #[test]
    fn csv_layout() {
        let outcome = run(SweepOptions::new(7));
        let mut buf = Vec::new();
        write_csv(&mut buf, outcome.filtered(Filter::All)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("n1,n2,n3,betti_count,delta_max_cf,delta_max_direct,cat_cf,cat_direct,minimal,witness")
        );
        assert_eq!(lines.next(), Some("3,4,5,3,1,1,3,3,true,thm24.bullet2"));
    }

    #[test]
    fn minimal_filter() {
        let outcome = run(SweepOptions::new(14));
        assert!(outcome.filtered(Filter::Minimal).all(|r| r.minimal));
        assert!(outcome.filtered(Filter::Minimal).count() < outcome.records.len());
    }
}
