//! Direct summation of the generalized hypergeometric series.

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method, SeriesControl};
use crate::gamma::is_nonpositive_integer;
use crate::hyp::series::sum_by_ratio;
use crate::scaled::{LogScaled, C64};

/// Numerator and denominator parameters of a `pFq`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypParams {
    numerator: Vec<C64>,
    denominator: Vec<C64>,
}

impl HypParams {
    pub fn new(numerator: Vec<C64>, denominator: Vec<C64>) -> Result<Self> {
        if numerator.len() > denominator.len() + 1 {
            return Err(Error::ShapeViolation(format!(
                "p = {} exceeds q + 1 = {}",
                numerator.len(),
                denominator.len() + 1
            )));
        }
        if let Some(b) = denominator.iter().find(|b| is_nonpositive_integer(**b)) {
            return Err(Error::DenominatorPole(format!("{b}")));
        }
        Ok(HypParams { numerator, denominator })
    }

    pub fn numerator(&self) -> &[C64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[C64] {
        &self.denominator
    }

    pub fn p(&self) -> usize {
        self.numerator.len()
    }

    pub fn q(&self) -> usize {
        self.denominator.len()
    }

    /// True when some numerator parameter is a nonpositive integer, so the
    /// series is a polynomial.
    pub fn terminates(&self) -> bool {
        self.numerator.iter().any(|a| is_nonpositive_integer(*a))
    }
}

/// Sums `pFq[num; den; z]` term by term.
pub fn pfq_series(params: &HypParams, z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    ctrl.validate()?;
    if params.p() == params.q() + 1 && z.norm() >= 1.0 && !params.terminates() {
        return Err(Error::OutsideDisk(z.norm()));
    }
    pfq_unchecked(params.numerator(), params.denominator(), z, ctrl)
}

/// Series summation without shape or disk checks; denominators must be
/// valid.
pub(crate) fn pfq_unchecked(num: &[C64], den: &[C64], z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(EvalResult::exact(LogScaled::ONE, 1, Method::PfqSeries));
    }
    sum_by_ratio(
        LogScaled::ONE,
        |k| {
            let kf = k as f64;
            let mut r = z / (kf + 1.0);
            for a in num {
                r *= a + kf;
            }
            for b in den {
                r /= b + kf;
            }
            r
        },
        ctrl,
        Method::PfqSeries,
    )
}

/// Convenience wrapper that validates and sums in one call.
pub fn pfq(num: &[C64], den: &[C64], z: C64, ctrl: &SeriesControl) -> Result<EvalResult> {
    let params = HypParams::new(num.to_vec(), den.to_vec())?;
    pfq_series(&params, z, ctrl)
}
