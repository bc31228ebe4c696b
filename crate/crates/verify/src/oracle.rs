//! Extended-precision reference values for `pFq` with real parameters.
//!
//! Terms are formed and summed in double-double arithmetic, about 32
//! significant digits, so the oracle error is negligible next to the
//! truncation errors being measured.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// An unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };

    pub fn new(hi: f64) -> Self {
        DoubleDouble { hi, lo: 0.0 }
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }
}

impl Add for DoubleDouble {
    type Output = DoubleDouble;
    fn add(self, o: DoubleDouble) -> DoubleDouble {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DoubleDouble { hi, lo }
    }
}

impl Neg for DoubleDouble {
    type Output = DoubleDouble;
    fn neg(self) -> DoubleDouble {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for DoubleDouble {
    type Output = DoubleDouble;
    fn sub(self, o: DoubleDouble) -> DoubleDouble {
        self + -o
    }
}

impl Mul for DoubleDouble {
    type Output = DoubleDouble;
    fn mul(self, o: DoubleDouble) -> DoubleDouble {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = DoubleDouble;
    fn div(self, o: DoubleDouble) -> DoubleDouble {
        let q1 = self.hi / o.hi;
        let r = self - o * DoubleDouble::new(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * DoubleDouble::new(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleDouble { hi, lo } + DoubleDouble::new(q3)
    }
}

/// Failure of the reference summation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("oracle denominator parameter {0} hits a nonpositive integer")]
    Pole(f64),
    #[error("oracle series did not converge within {0} terms")]
    NoConvergence(usize),
    #[error("oracle value is not representable as a float")]
    Overflow,
}

/// Summation limits of the oracle.
pub const ORACLE_MAX_TERMS: usize = 200_000;
const ORACLE_REL: f64 = 1e-32;

/// `pFq[num; den; z]` summed term by term in double-double arithmetic.
///
/// Intended for `p ≤ q` or `p = q + 1` with `|z| < 1`.
pub fn pfq_oracle(num: &[f64], den: &[f64], z: f64) -> Result<f64, OracleError> {
    let zz = DoubleDouble::new(z);
    let mut term = DoubleDouble::ONE;
    let mut sum = DoubleDouble::ONE;
    let mut small_run = 0;
    for k in 0..ORACLE_MAX_TERMS {
        let kk = DoubleDouble::new(k as f64);
        let mut ratio = zz / (kk + DoubleDouble::ONE);
        for a in num {
            ratio = ratio * (DoubleDouble::new(*a) + kk);
        }
        for b in den {
            let bk = DoubleDouble::new(*b) + kk;
            if bk.is_zero() {
                return Err(OracleError::Pole(*b));
            }
            ratio = ratio / bk;
        }
        if ratio.is_zero() {
            return finish(sum);
        }
        term = term * ratio;
        sum = sum + term;
        if !sum.hi.is_finite() {
            return Err(OracleError::Overflow);
        }
        if term.abs().hi <= ORACLE_REL * sum.abs().hi && ratio.abs().hi < 0.5 {
            small_run += 1;
            if small_run >= 3 {
                return finish(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(OracleError::NoConvergence(ORACLE_MAX_TERMS))
}

fn finish(sum: DoubleDouble) -> Result<f64, OracleError> {
    let v = sum.to_f64();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(OracleError::Overflow)
    }
}
