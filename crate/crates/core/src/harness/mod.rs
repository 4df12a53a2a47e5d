//! Fixture runner, verification sweep and report builders behind the `nsg`
//! binary.

pub mod fixtures;
pub mod report;
pub mod sweep;

/// Every check passed.
pub const EXIT_OK: i32 = 0;
/// A mathematical violation or fixture mismatch.
pub const EXIT_VIOLATION: i32 = 1;
/// Bad arguments or input.
pub const EXIT_USAGE: i32 = 2;
