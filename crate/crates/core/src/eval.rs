//! Truncation control and evaluation results shared by every evaluator.

use std::fmt;

use crate::error::{Error, Result};
use crate::scaled::LogScaled;

/// Truncation policy for series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// Relative size below which a term counts as negligible.
    pub rel_tol: f64,
    pub max_terms: usize,
    /// Number of consecutive negligible, non-increasing terms that end a sum.
    pub stagnation_window: usize,
    /// Largest `|z|` at which confluent functions are summed directly.
    pub z_direct: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-13,
            max_terms: 100_000,
            stagnation_window: 3,
            z_direct: 300.0,
        }
    }
}

impl SeriesControl {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::InvalidControl(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if self.max_terms < 1 {
            return Err(Error::InvalidControl("max_terms must be at least 1".into()));
        }
        if self.stagnation_window < 1 {
            return Err(Error::InvalidControl("stagnation_window must be at least 1".into()));
        }
        if !(self.z_direct > 0.0) {
            return Err(Error::InvalidControl(format!("z_direct must be positive, got {}", self.z_direct)));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }
}

/// The representation of Ψ₁ that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Psi1Method {
    DoubleSeries,
    SingleSeries,
    Integral,
    NearUnit,
    LargeX,
}

impl Psi1Method {
    pub const ALL: [Psi1Method; 5] = [
        Psi1Method::DoubleSeries,
        Psi1Method::SingleSeries,
        Psi1Method::Integral,
        Psi1Method::NearUnit,
        Psi1Method::LargeX,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Psi1Method::DoubleSeries => "DOUBLE_SERIES",
            Psi1Method::SingleSeries => "SINGLE_SERIES",
            Psi1Method::Integral => "INTEGRAL",
            Psi1Method::NearUnit => "NEAR_UNIT",
            Psi1Method::LargeX => "LARGE_X",
        }
    }

    /// Parses a tag case-insensitively, accepting `-` for `_`.
    pub fn from_tag(s: &str) -> Option<Psi1Method> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Psi1Method::ALL.into_iter().find(|m| m.tag() == norm || m.tag().replace('_', "") == norm)
    }
}

/// Identifies which representation produced an [`EvalResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    PfqSeries,
    F11Series,
    F11Asymptotic,
    F21Series,
    F21Connection,
    Quadrature,
    FieldsSeries,
    LukeSeries,
    StirlingSeries,
    Psi1(Psi1Method),
    Kummer(Psi1Method),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::PfqSeries => f.write_str("PFQ_SERIES"),
            Method::F11Series => f.write_str("F11_SERIES"),
            Method::F11Asymptotic => f.write_str("F11_ASYMPTOTIC"),
            Method::F21Series => f.write_str("F21_SERIES"),
            Method::F21Connection => f.write_str("F21_CONNECTION"),
            Method::Quadrature => f.write_str("QUADRATURE"),
            Method::FieldsSeries => f.write_str("FIELDS_SERIES"),
            Method::LukeSeries => f.write_str("LUKE_SERIES"),
            Method::StirlingSeries => f.write_str("STIRLING_SERIES"),
            Method::Psi1(m) => f.write_str(m.tag()),
            Method::Kummer(m) => write!(f, "KUMMER+{}", m.tag()),
        }
    }
}

/// A value together with an absolute error estimate and provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: LogScaled,
    /// Absolute error estimate, log-scaled like the value.
    pub abs_err: LogScaled,
    /// Series terms or quadrature nodes used.
    pub terms: usize,
    pub method: Method,
    pub converged: bool,
}

impl EvalResult {
    pub fn exact(value: LogScaled, terms: usize, method: Method) -> Self {
        EvalResult {
            value,
            abs_err: LogScaled::ZERO,
            terms,
            method,
            converged: true,
        }
    }

    /// `abs_err / |value|`; the plain absolute error when the value is zero.
    pub fn rel_err(&self) -> f64 {
        if self.value.is_zero() {
            self.abs_err.to_complex().re
        } else {
            self.abs_err.abs_ratio(&self.value)
        }
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    /// Multiplies the value and its error by a known factor.
    pub fn scaled(mut self, factor: LogScaled) -> Self {
        self.value = self.value * factor;
        self.abs_err = self.abs_err * factor.abs();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_control_is_valid() {
        assert!(SeriesControl::default().validate().is_ok());
        let bad = SeriesControl { rel_tol: 0.0, ..Default::default() };
        assert!(matches!(bad.validate(), Err(Error::InvalidControl(_))));
        let bad = SeriesControl { stagnation_window: 0, ..Default::default() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn method_tags() {
        assert_eq!(Method::Psi1(Psi1Method::Integral).to_string(), "INTEGRAL");
        assert_eq!(Method::Kummer(Psi1Method::DoubleSeries).to_string(), "KUMMER+DOUBLE_SERIES");
        assert_eq!(Psi1Method::from_tag("large-x"), Some(Psi1Method::LargeX));
        assert_eq!(Psi1Method::from_tag("nearunit"), Some(Psi1Method::NearUnit));
        assert_eq!(Psi1Method::from_tag("bogus"), None);
    }
}
