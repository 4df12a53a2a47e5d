//! Per-element factorization invariants, Betti elements, and the global
//! invariants max Δ(S) and cat(S) that are attained on Betti elements.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::dim3;
use crate::error::{Error, Result};
use crate::factorization::{Factorization, Factorizer};
use crate::semigroup::NumericalSemigroup;
use crate::union_find::DisjointSet;

/// Everything computed from the factorization set of one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementReport {
    pub element: i64,
    pub factorizations: Vec<Factorization>,
    pub length_set: Vec<i64>,
    pub delta: Vec<i64>,
    pub r_classes: Vec<Vec<Factorization>>,
    pub r_class_min_lengths: Vec<i64>,
    pub mu: i64,
    pub catenary: i64,
}

impl ElementReport {
    /// Builds the report from a complete factorization set of `element`.
    pub fn from_factorizations(element: i64, factorizations: Vec<Factorization>) -> Self {
        let length_set = length_set_of(&factorizations);
        let delta = delta_of_lengths(&length_set);
        let r_classes = r_classes_of(&factorizations);
        let r_class_min_lengths: Vec<i64> = r_classes
            .iter()
            .map(|class| class.iter().map(Factorization::length).min().unwrap_or(0))
            .collect();
        let mu = r_class_min_lengths.iter().copied().max().unwrap_or(0);
        let catenary = chain_catenary(&factorizations);
        Self {
            element,
            factorizations,
            length_set,
            delta,
            r_classes,
            r_class_min_lengths,
            mu,
            catenary,
        }
    }

    /// nc(∇_s)
    pub fn class_count(&self) -> usize {
        self.r_classes.len()
    }

    pub fn max_delta(&self) -> Option<i64> {
        self.delta.iter().copied().max()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub betti_elements: Vec<i64>,
    pub per_element: Vec<ElementReport>,
    pub delta_max: i64,
    pub catenary: i64,
    pub presentation_cardinality: usize,
}

pub fn element_report(semigroup: &NumericalSemigroup, element: i64) -> Result<ElementReport> {
    if !semigroup.contains(element) {
        return Err(Error::NotAMember(element));
    }
    let z = Factorizer::new(semigroup, element).factorizations(element);
    Ok(ElementReport::from_factorizations(element, z))
}

/// L(s), ascending.
pub fn length_set(semigroup: &NumericalSemigroup, element: i64) -> Result<Vec<i64>> {
    Ok(length_set_of(&member_factorizations(semigroup, element)?))
}

/// Δ(s): differences of consecutive lengths, as a sorted set.
pub fn delta_of_element(semigroup: &NumericalSemigroup, element: i64) -> Result<Vec<i64>> {
    Ok(delta_of_lengths(&length_set(semigroup, element)?))
}

/// R-classes of Z(s): connected components of ∇_s.
pub fn r_classes(semigroup: &NumericalSemigroup, element: i64) -> Result<Vec<Vec<Factorization>>> {
    Ok(r_classes_of(&member_factorizations(semigroup, element)?))
}

pub fn mu_of_element(semigroup: &NumericalSemigroup, element: i64) -> Result<i64> {
    Ok(element_report(semigroup, element)?.mu)
}

/// cat(s), computed from chains of factorizations.
pub fn catenary_of_element(semigroup: &NumericalSemigroup, element: i64) -> Result<i64> {
    Ok(chain_catenary(&member_factorizations(semigroup, element)?))
}

fn member_factorizations(
    semigroup: &NumericalSemigroup,
    element: i64,
) -> Result<Vec<Factorization>> {
    if !semigroup.contains(element) {
        return Err(Error::NotAMember(element));
    }
    Ok(Factorizer::new(semigroup, element).factorizations(element))
}

fn length_set_of(z: &[Factorization]) -> Vec<i64> {
    let lengths: BTreeSet<i64> = z.iter().map(Factorization::length).collect();
    lengths.into_iter().collect()
}

fn delta_of_lengths(lengths: &[i64]) -> Vec<i64> {
    let deltas: BTreeSet<i64> = lengths.windows(2).map(|w| w[1] - w[0]).collect();
    deltas.into_iter().collect()
}

/// Components of the graph joining factorizations with a common nonzero
/// coordinate. Every factorization with `x_i > 0` is linked to the first
/// such one, which yields the same components as testing every pair for a
/// nonzero dot product.
///
/// Members keep the input order; classes are ordered by their
/// lexicographically largest member, largest first.
pub(crate) fn r_classes_of(z: &[Factorization]) -> Vec<Vec<Factorization>> {
    if z.is_empty() {
        return Vec::new();
    }
    let p = z[0].dimension();
    let mut ds = DisjointSet::new(z.len());
    for i in 0..p {
        let mut anchor = None;
        for (k, x) in z.iter().enumerate() {
            if x.coords()[i] != 0 {
                match anchor {
                    None => anchor = Some(k),
                    Some(a) => ds.union(a, k),
                }
            }
        }
    }
    let mut slot_of_root = vec![usize::MAX; z.len()];
    let mut classes: Vec<Vec<Factorization>> = Vec::new();
    for (k, x) in z.iter().enumerate() {
        let root = ds.find(k);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot_of_root[root]].push(x.clone());
    }
    for class in &mut classes {
        class.sort_unstable_by(|a, b| b.cmp(a));
    }
    classes.sort_unstable_by(|a, b| b[0].cmp(&a[0]));
    classes
}

/// Least N such that any two factorizations are joined by an N-chain.
///
/// That N is the largest edge of a minimum bottleneck spanning tree of the
/// complete distance graph on `z`; Prim's algorithm builds one in O(|z|²).
pub(crate) fn chain_catenary(z: &[Factorization]) -> i64 {
    let n = z.len();
    if n <= 1 {
        return 0;
    }
    let lengths: Vec<i64> = z.iter().map(Factorization::length).collect();
    let dist = |a: usize, b: usize| -> i64 {
        let common: i64 = z[a]
            .coords()
            .iter()
            .zip(z[b].coords())
            .map(|(x, y)| *x.min(y))
            .sum();
        lengths[a].max(lengths[b]) - common
    };
    let mut in_tree = vec![false; n];
    let mut best = vec![i64::MAX; n];
    best[0] = 0;
    let mut bottleneck = 0;
    for _ in 0..n {
        let mut next = usize::MAX;
        for v in 0..n {
            if !in_tree[v] && (next == usize::MAX || best[v] < best[next]) {
                next = v;
            }
        }
        in_tree[next] = true;
        bottleneck = bottleneck.max(best[next]);
        for v in 0..n {
            if !in_tree[v] {
                let d = dist(next, v);
                if d < best[v] {
                    best[v] = d;
                }
            }
        }
    }
    bottleneck
}

/// Default Betti scan bound n_{p-1}·n_p.
pub fn default_scan_bound(semigroup: &NumericalSemigroup) -> i64 {
    let g = semigroup.generators();
    match g.len() {
        0 | 1 => 0,
        p => g[p - 2] * g[p - 1],
    }
}

/// Betti elements of S, ascending.
///
/// Embedding dimension three uses the closed form {c_1n_1, c_2n_2, c_3n_3};
/// any other dimension scans up to `scan_bound`
/// (default [`default_scan_bound`]).
pub fn betti_elements(semigroup: &NumericalSemigroup, scan_bound: Option<i64>) -> Result<Vec<i64>> {
    if semigroup.embedding_dimension() == 3 {
        return dim3::dim3_params(semigroup).map(|d| d.betti_values());
    }
    let bound = scan_bound.unwrap_or_else(|| default_scan_bound(semigroup));
    Ok(betti_elements_scan(semigroup, bound))
}

/// Elements s ≤ `bound` whose graph ∇_s is disconnected.
///
/// Only elements w + n_i with w in the Apéry set of n_1 and i ≥ 2 are tested.
/// For any other s, a factorization with x_i > 0 (i ≥ 2) shares coordinate i
/// with some factorization of s having x_1 > 0, and those form one clique,
/// so ∇_s is connected.
pub fn betti_elements_scan(semigroup: &NumericalSemigroup, bound: i64) -> Vec<i64> {
    if semigroup.is_whole_naturals() || bound <= 0 {
        return Vec::new();
    }
    let m = semigroup.multiplicity();
    let apery = semigroup.apery_set(m).expect("multiplicity is a member");
    let candidates: BTreeSet<i64> = apery
        .iter()
        .flat_map(|&w| semigroup.generators()[1..].iter().map(move |&n| w + n))
        .filter(|&s| s <= bound)
        .collect();
    let Some(&top) = candidates.last() else {
        return Vec::new();
    };
    let fz = Factorizer::new(semigroup, top);
    candidates
        .into_iter()
        .filter(|&s| r_classes_of(&fz.factorizations(s)).len() >= 2)
        .collect()
}

/// Reports for every Betti element plus the invariants they certify.
pub fn betti_report(
    semigroup: &NumericalSemigroup,
    scan_bound: Option<i64>,
) -> Result<BettiReport> {
    if semigroup.is_whole_naturals() {
        return Err(Error::TrivialSemigroup);
    }
    let betti = betti_elements(semigroup, scan_bound)?;
    let Some(&top) = betti.last() else {
        return Err(Error::Inconsistent(format!(
            "{semigroup} has no Betti elements"
        )));
    };
    let fz = Factorizer::new(semigroup, top);
    let per_element: Vec<ElementReport> = betti
        .iter()
        .map(|&b| ElementReport::from_factorizations(b, fz.factorizations(b)))
        .collect();

    let delta_max = per_element
        .iter()
        .filter_map(ElementReport::max_delta)
        .max()
        .ok_or_else(|| {
            Error::Inconsistent(format!("no Betti element of {semigroup} has two lengths"))
        })?;
    let catenary = per_element.iter().map(|r| r.catenary).max().unwrap_or(0);
    let mu = per_element.iter().map(|r| r.mu).max().unwrap_or(0);
    if catenary != mu {
        return Err(Error::Inconsistent(format!(
            "{semigroup}: chain catenary degree {catenary} differs from max mu {mu}"
        )));
    }
    let presentation_cardinality = per_element.iter().map(|r| r.class_count() - 1).sum();
    Ok(BettiReport {
        betti_elements: betti,
        per_element,
        delta_max,
        catenary,
        presentation_cardinality,
    })
}

/// max Δ(S), the maximum over Betti elements.
pub fn delta_max(semigroup: &NumericalSemigroup) -> Result<i64> {
    Ok(betti_report(semigroup, None)?.delta_max)
}

/// cat(S), the maximum of cat(b) over Betti elements (cross-checked against
/// the maximum of μ(b)).
pub fn catenary(semigroup: &NumericalSemigroup) -> Result<i64> {
    Ok(betti_report(semigroup, None)?.catenary)
}

/// Σ over Betti elements of (nc(∇_b) − 1).
pub fn presentation_cardinality(semigroup: &NumericalSemigroup) -> Result<usize> {
    if semigroup.is_whole_naturals() {
        return Ok(0);
    }
    Ok(betti_report(semigroup, None)?.presentation_cardinality)
}

/// Embedding dimension three only: a generic presentation exists iff S is
/// nonsymmetric.
pub fn is_generic_candidate(semigroup: &NumericalSemigroup) -> Result<bool> {
    Ok(dim3::dim3_params(semigroup)?.betti_count == 3)
}

/// Default stop for [`delta_set_scan`]: 2·n_{p-1}·n_p.
pub fn default_delta_stop(semigroup: &NumericalSemigroup) -> i64 {
    2 * default_scan_bound(semigroup)
}

/// Union of Δ(s) over s ≤ `stop`.
///
/// Fails with [`Error::ScanBoundTooSmall`] when the union has not yet reached
/// the max certified by the Betti elements.
pub fn delta_set_scan(semigroup: &NumericalSemigroup, stop: Option<i64>) -> Result<Vec<i64>> {
    let certified = delta_max(semigroup)?;
    let stop = stop.unwrap_or_else(|| default_delta_stop(semigroup));
    let mut seen = BTreeSet::new();
    for_each_length_set(semigroup, stop, |_, lengths| {
        let mut prev = None;
        for l in lengths.iter() {
            if let Some(p) = prev {
                seen.insert(l - p);
            }
            prev = Some(l);
        }
    });
    let scanned = seen.last().copied().unwrap_or(0);
    if scanned < certified {
        return Err(Error::ScanBoundTooSmall { scanned, certified });
    }
    Ok(seen.into_iter().collect())
}

/// Set of lengths as a bitset over 0..=s/n_1.
#[derive(Clone, Debug, Default)]
pub(crate) struct LengthBits(Vec<u64>);

impl LengthBits {
    pub(crate) fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros();
                bits &= bits - 1;
                Some((w * 64) as i64 + t as i64)
            })
        })
    }

    /// self |= other << 1
    fn or_shifted(&mut self, other: &LengthBits) {
        let mut carry = 0u64;
        for (k, &word) in other.0.iter().enumerate() {
            if k < self.0.len() {
                self.0[k] |= (word << 1) | carry;
            }
            carry = word >> 63;
        }
        let k = other.0.len();
        if carry != 0 && k < self.0.len() {
            self.0[k] |= carry;
        }
    }
}

/// Calls `visit(s, L(s))` for every s in 0..=stop, building length sets by
/// L(s) = ⋃_i (L(s − n_i) + 1) over a sliding window of n_p + 1 entries.
pub(crate) fn for_each_length_set(
    semigroup: &NumericalSemigroup,
    stop: i64,
    mut visit: impl FnMut(i64, &LengthBits),
) {
    let gens = semigroup.generators();
    let m = semigroup.multiplicity();
    let window = (*gens.last().expect("nonempty") + 1) as usize;
    let mut ring: Vec<LengthBits> = vec![LengthBits::default(); window];
    for s in 0..=stop.max(-1) {
        let words = (s / m) as usize / 64 + 1;
        let mut cur = LengthBits(vec![0; words]);
        if s == 0 {
            cur.0[0] = 1;
        } else {
            for &n in gens {
                if s >= n {
                    let prev = &ring[((s - n) as usize) % window];
                    cur.or_shifted(prev);
                }
            }
        }
        if cur.0.iter().any(|&w| w != 0) {
            visit(s, &cur);
        }
        ring[(s as usize) % window] = cur;
    }
}
