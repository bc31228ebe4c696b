//! Hypergeometric building blocks: the generic series, Kummer's and Gauss'
//! functions, the Stirling generating function and tanh-sinh quadrature.

pub mod f11;
pub mod f21;
pub mod pfq;
pub mod quad;
pub(crate) mod series;
pub mod stirling;

pub use f11::{f11, f11_asymptotic};
pub use f21::{f21, f21_connection, f21_series};
pub use pfq::{pfq, pfq_series, HypParams};
pub use quad::{tanh_sinh_integrate, tanh_sinh_interval};
pub use stirling::{phi_stirling, phi_stirling_scaled};
