//! Log-scaled complex numbers.
//!
//! A [`LogScaled`] holds `mantissa · e^exponent` with an integer-valued
//! exponent and `1 ≤ |mantissa| < e`, so values like `e^3001` survive
//! ordinary `f64` arithmetic. Zero is stored canonically as `(0, 0)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

pub type C64 = Complex64;

/// Largest step applied through a single `exp` call when rescaling.
const MAX_EXP_STEP: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScaled {
    mantissa: C64,
    exponent: f64,
}

fn scale_by_exp(m: C64, k: f64) -> C64 {
    let mut m = m;
    let mut k = k;
    while k.abs() > MAX_EXP_STEP {
        let step = MAX_EXP_STEP.copysign(k);
        m *= step.exp();
        k -= step;
    }
    m * k.exp()
}

impl LogScaled {
    pub const ZERO: LogScaled = LogScaled {
        mantissa: C64::new(0.0, 0.0),
        exponent: 0.0,
    };
    pub const ONE: LogScaled = LogScaled {
        mantissa: C64::new(1.0, 0.0),
        exponent: 0.0,
    };

    /// Builds `mantissa · e^exponent` and normalizes it.
    pub fn new(mantissa: C64, exponent: f64) -> Self {
        LogScaled { mantissa, exponent }.normalize()
    }

    pub fn from_complex(z: C64) -> Self {
        Self::new(z, 0.0)
    }

    pub fn from_real(x: f64) -> Self {
        Self::new(C64::new(x, 0.0), 0.0)
    }

    /// `e^z` without forming the (possibly overflowing) real exponential.
    pub fn exp(z: C64) -> Self {
        if !z.re.is_finite() || !z.im.is_finite() {
            return LogScaled {
                mantissa: C64::new(f64::NAN, f64::NAN),
                exponent: 0.0,
            };
        }
        let k = z.re.floor();
        let mantissa = C64::from_polar((z.re - k).exp(), z.im);
        Self::new(mantissa, k)
    }

    pub fn mantissa(&self) -> C64 {
        self.mantissa
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.re == 0.0 && self.mantissa.im == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.mantissa.re.is_finite() && self.mantissa.im.is_finite() && self.exponent.is_finite()
    }

    /// Re-establishes `1 ≤ |mantissa| < e` (or the canonical zero).
    pub fn normalize(self) -> Self {
        let m = self.mantissa;
        if m.re == 0.0 && m.im == 0.0 {
            return Self::ZERO;
        }
        if !self.is_finite() {
            return self;
        }
        let mut k = m.norm().ln().floor();
        let mut mantissa = scale_by_exp(m, -k);
        // ln/exp rounding can leave the mantissa a hair outside the band
        let r = mantissa.norm();
        if r >= std::f64::consts::E {
            mantissa /= std::f64::consts::E;
            k += 1.0;
        } else if r < 1.0 {
            mantissa *= std::f64::consts::E;
            k -= 1.0;
        }
        LogScaled {
            mantissa,
            exponent: self.exponent + k,
        }
    }

    /// Ordinary complex value; overflows to infinity or underflows to zero
    /// outside the `f64` range.
    pub fn to_complex(&self) -> C64 {
        scale_by_exp(self.mantissa, self.exponent)
    }

    /// Ordinary complex value when it is representable without overflow.
    pub fn to_complex_checked(&self) -> Option<C64> {
        let v = self.to_complex();
        (v.re.is_finite() && v.im.is_finite()).then_some(v)
    }

    /// Principal logarithm, `ln(mantissa) + exponent`.
    pub fn ln(&self) -> C64 {
        self.mantissa.ln() + self.exponent
    }

    /// `ln |value|`, `-inf` for zero.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.mantissa.norm().ln() + self.exponent
        }
    }

    pub fn abs(&self) -> LogScaled {
        LogScaled {
            mantissa: C64::new(self.mantissa.norm(), 0.0),
            exponent: self.exponent,
        }
    }

    pub fn conj(&self) -> LogScaled {
        LogScaled {
            mantissa: self.mantissa.conj(),
            exponent: self.exponent,
        }
    }

    pub fn scale(&self, z: C64) -> LogScaled {
        LogScaled::new(self.mantissa * z, self.exponent)
    }

    /// Principal-branch real power `value^p`.
    pub fn powf(&self, p: f64) -> LogScaled {
        self.powc(C64::new(p, 0.0))
    }

    /// Principal-branch complex power `exp(p · ln value)`.
    pub fn powc(&self, p: C64) -> LogScaled {
        if self.is_zero() {
            return if p.re > 0.0 { Self::ZERO } else { Self::exp(C64::new(f64::INFINITY, 0.0)) };
        }
        // split so the large exponent multiplies exactly before the mantissa log
        let lm = self.mantissa.ln();
        LogScaled::exp(p * lm + p * self.exponent)
    }

    /// `self / other` as an ordinary complex number.
    pub fn ratio(&self, other: &LogScaled) -> C64 {
        scale_by_exp(self.mantissa / other.mantissa, self.exponent - other.exponent)
    }

    /// `|self| / |other|` computed in log space.
    pub fn abs_ratio(&self, other: &LogScaled) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        (self.ln_abs() - other.ln_abs()).exp()
    }
}

impl Default for LogScaled {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<C64> for LogScaled {
    fn from(z: C64) -> Self {
        Self::from_complex(z)
    }
}

impl From<f64> for LogScaled {
    fn from(x: f64) -> Self {
        Self::from_real(x)
    }
}

impl Mul for LogScaled {
    type Output = LogScaled;

    fn mul(self, rhs: LogScaled) -> LogScaled {
        LogScaled::new(self.mantissa * rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl Mul<C64> for LogScaled {
    type Output = LogScaled;

    fn mul(self, rhs: C64) -> LogScaled {
        self.scale(rhs)
    }
}

impl Mul<f64> for LogScaled {
    type Output = LogScaled;

    fn mul(self, rhs: f64) -> LogScaled {
        self.scale(C64::new(rhs, 0.0))
    }
}

impl Div for LogScaled {
    type Output = LogScaled;

    fn div(self, rhs: LogScaled) -> LogScaled {
        LogScaled::new(self.mantissa / rhs.mantissa, self.exponent - rhs.exponent)
    }
}

impl Add for LogScaled {
    type Output = LogScaled;

    /// Aligns on the larger exponent, so operands thousands of e-folds apart
    /// never overflow.
    fn add(self, rhs: LogScaled) -> LogScaled {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exponent >= rhs.exponent {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shifted = scale_by_exp(small.mantissa, small.exponent - big.exponent);
        LogScaled::new(big.mantissa + shifted, big.exponent)
    }
}

impl Neg for LogScaled {
    type Output = LogScaled;

    fn neg(self) -> LogScaled {
        LogScaled {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Sub for LogScaled {
    type Output = LogScaled;

    fn sub(self, rhs: LogScaled) -> LogScaled {
        self + (-rhs)
    }
}

impl std::iter::Sum for LogScaled {
    fn sum<I: Iterator<Item = LogScaled>>(iter: I) -> LogScaled {
        iter.fold(LogScaled::ZERO, |acc, v| acc + v)
    }
}

impl fmt::Display for LogScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:e}{:+e}i)·e^{}",
            self.mantissa.re, self.mantissa.im, self.exponent
        )
    }
}

pub fn ls_normalize(v: LogScaled) -> LogScaled {
    v.normalize()
}

pub fn ls_mul(u: LogScaled, v: LogScaled) -> LogScaled {
    u * v
}

pub fn ls_add(u: LogScaled, v: LogScaled) -> LogScaled {
    u + v
}

pub fn ls_pow_real(u: LogScaled, p: f64) -> LogScaled {
    u.powf(p)
}

/// Running sum of a series whose terms share one floating log-scale.
///
/// Cheaper than accumulating [`LogScaled`] values term by term: the term and
/// the partial sum are plain complex numbers that get rescaled together when
/// either grows large.
#[derive(Debug, Clone)]
pub(crate) struct ScaledAccumulator {
    pub sum: C64,
    pub term: C64,
    pub abs_sum: f64,
    pub log_scale: f64,
}

const RESCALE_ABOVE: f64 = 1e200;

impl ScaledAccumulator {
    pub fn new(first: LogScaled) -> Self {
        let term = first.mantissa();
        ScaledAccumulator {
            sum: term,
            term,
            abs_sum: term.norm(),
            log_scale: first.exponent(),
        }
    }

    /// Multiplies the current term by `ratio` and adds it to the sum.
    pub fn push_ratio(&mut self, ratio: C64) {
        self.term *= ratio;
        self.sum += self.term;
        self.abs_sum += self.term.norm();
        let big = self.term.norm().max(self.sum.norm());
        if big > RESCALE_ABOVE && big.is_finite() {
            let inv = 1.0 / big;
            self.term *= inv;
            self.sum *= inv;
            self.abs_sum *= inv;
            self.log_scale += big.ln();
        }
    }

    pub fn term_abs(&self) -> f64 {
        self.term.norm()
    }

    pub fn sum_abs(&self) -> f64 {
        self.sum.norm()
    }

    pub fn value(&self) -> LogScaled {
        LogScaled::new(self.sum, self.log_scale)
    }

    /// Absolute error estimate: `tail` multiples of the last term plus a
    /// rounding allowance proportional to the sum of magnitudes.
    pub fn error(&self, tail: f64) -> LogScaled {
        let e = tail * self.term.norm() + 4.0 * f64::EPSILON * self.abs_sum;
        LogScaled::new(C64::new(e, 0.0), self.log_scale)
    }
}
