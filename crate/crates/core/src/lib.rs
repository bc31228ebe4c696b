//! Numerical evaluation of the Humbert function Ψ₁ and of generalized
//! hypergeometric functions, including large-parameter asymptotic
//! expansions.
//!
//! Values that can reach magnitudes like `e^3000` are carried as
//! [`LogScaled`] numbers, so every evaluator works in ordinary `f64`
//! arithmetic.

// guards like `!(x > 0.0)` are written to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asym;
pub mod error;
pub mod eval;
pub mod gamma;
pub mod hyp;
pub mod psi1;
pub mod scaled;

pub use error::{Error, Result};
pub use eval::{EvalResult, Method, Psi1Method, SeriesControl};
pub use scaled::{LogScaled, C64};
