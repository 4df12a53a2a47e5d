//! Factorization invariants of numerical semigroups.
//!
//! * [`semigroup`]: construction, membership, Apéry sets, Frobenius number,
//!   genus, pseudo-Frobenius numbers, symmetry, gluing.
//! * [`factorization`] and [`betti`]: factorization sets, lengths, Delta
//!   sets, R-classes, catenary degree, Betti elements.
//! * [`dim3`], [`arithmetic`], [`classify`]: closed forms for max Δ(S) and
//!   cat(S) in embedding dimension three and for arithmetic sequences, and
//!   the criteria for max Δ(S) + 2 = cat(S).
//! * [`harness`]: fixture runner, exhaustive sweeps and report rendering
//!   behind the `nsg` binary.

pub mod arithmetic;
pub mod betti;
pub mod classify;
pub mod dim3;
pub mod error;
pub mod factorization;
pub mod harness;
pub mod semigroup;
mod union_find;

pub use betti::{BettiReport, ElementReport};
pub use classify::{characterize, CharacterizationResult, Regime};
pub use dim3::{Dim3Data, Witness};
pub use error::{Error, Result};
pub use factorization::{distance, Factorization};
pub use semigroup::{glue, ClassicalInvariants, NumericalSemigroup, SymmetryClass};
