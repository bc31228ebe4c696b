//! Verification front end: reference Ψ₁ ratio tables,
//! error-scaling sweeps of the large-parameter expansions, cross-checks
//! between Ψ₁ representations and single-point evaluation.
//!
//! All outputs are CSV files with a version comment line, a header row and
//! floats printed with 17 significant digits.

// guards like `!(x > 0.0)` are written to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod crosscheck;
pub mod csv;
pub mod error;
pub mod evaluate;
pub mod oracle;
pub mod parse;
pub mod sweep;
pub mod table;

pub use error::{VerifyError, VerifyResult};
