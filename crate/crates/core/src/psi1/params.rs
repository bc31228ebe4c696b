//! Parameters and evaluation points of Ψ₁.

use crate::error::{Error, Result};
use crate::gamma::{is_integer, is_nonpositive_integer};
use crate::scaled::C64;

/// The parameters `(a, b; c, c')` of `Ψ₁[a, b; c, c'; x, y]`, with the
/// applicability of each representation decided once at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Psi1Params {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub c_prime: C64,
    large_x_ok: bool,
    near_unit_ok: bool,
    integral_ok: bool,
    asym_ok: bool,
}

impl Psi1Params {
    pub fn new(a: C64, b: C64, c: C64, c_prime: C64) -> Result<Self> {
        for (name, v) in [("c", c), ("c'", c_prime)] {
            if is_nonpositive_integer(v) {
                return Err(Error::DenominatorPole(format!("{name} = {v}")));
            }
        }
        let large_x_ok = !is_integer(a - b) && !is_integer(a - c);
        Ok(Psi1Params {
            a,
            b,
            c,
            c_prime,
            large_x_ok,
            near_unit_ok: !is_integer(a + b - c),
            integral_ok: c.re > b.re && b.re > 0.0,
            asym_ok: large_x_ok && (c - b).re > 0.0,
        })
    }

    pub fn real(a: f64, b: f64, c: f64, c_prime: f64) -> Result<Self> {
        let r = |v: f64| C64::new(v, 0.0);
        Self::new(r(a), r(b), r(c), r(c_prime))
    }

    /// The Kummer transformation always applies.
    pub fn kummer_ok(&self) -> bool {
        true
    }

    /// `a - b` and `a - c` are not integers.
    pub fn large_x_ok(&self) -> bool {
        self.large_x_ok
    }

    /// `a + b - c` is not an integer.
    pub fn near_unit_ok(&self) -> bool {
        self.near_unit_ok
    }

    /// `Re c > Re b > 0`.
    pub fn integral_ok(&self) -> bool {
        self.integral_ok
    }

    /// Leading large-`(x, y)` behaviour is available.
    pub fn asym_ok(&self) -> bool {
        self.asym_ok
    }

    /// Parameters after the Kummer transformation, `(a, c - b; c, c')`.
    pub fn kummer_image(&self) -> Psi1Params {
        Psi1Params::new(self.a, self.c - self.b, self.c, self.c_prime)
            .expect("denominators are unchanged by the transformation")
    }
}

/// An evaluation point `(x, y)` with `x` off the cut `[1, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Psi1Point {
    pub x: C64,
    pub y: C64,
}

impl Psi1Point {
    pub fn new(x: C64, y: C64) -> Result<Self> {
        if !(x.re.is_finite() && x.im.is_finite() && y.re.is_finite() && y.im.is_finite()) {
            return Err(Error::OutsideDomain(format!("non-finite point ({x}, {y})")));
        }
        if x.im == 0.0 && x.re >= 1.0 {
            return Err(Error::BranchCut(format!("x = {x} lies on [1, ∞)")));
        }
        Ok(Psi1Point { x, y })
    }

    pub fn real(x: f64, y: f64) -> Result<Self> {
        Self::new(C64::new(x, 0.0), C64::new(y, 0.0))
    }

    pub fn one_minus_x(&self) -> C64 {
        C64::new(1.0, 0.0) - self.x
    }

    /// The point `(x/(x-1), y/(1-x))`.
    pub fn kummer_image(&self) -> Psi1Point {
        let omx = self.one_minus_x();
        Psi1Point {
            x: -self.x / omx,
            y: self.y / omx,
        }
    }
}

/// The ratio `γ = |y/(1-x)|` of a point together with the band it is
/// required to stay in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymRegime {
    pub gamma: f64,
    pub bounds: (f64, f64),
}

impl AsymRegime {
    pub fn new(pt: &Psi1Point, bounds: (f64, f64)) -> Result<Self> {
        let (lo, hi) = bounds;
        if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
            return Err(Error::ConstraintViolation(format!("invalid bounds ({lo}, {hi})")));
        }
        let gamma = (pt.y / pt.one_minus_x()).norm();
        if gamma < lo || gamma > hi {
            return Err(Error::ConstraintViolation(format!("γ = {gamma} outside [{lo}, {hi}]")));
        }
        Ok(AsymRegime { gamma, bounds })
    }
}
