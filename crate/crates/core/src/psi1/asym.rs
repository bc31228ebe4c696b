//! Leading behaviour of Ψ₁ as `x → ∞` and `y → +∞` with `|y/(1-x)|`
//! confined to a compact band.

use crate::error::{Error, Result};
use crate::gamma::log_gamma;
use crate::psi1::params::{Psi1Params, Psi1Point};
use crate::scaled::{LogScaled, C64};

/// `Γ(c)Γ(c')/(Γ(a)Γ(c-b)) (y/(1-x))^b y^{a-2b-c'} e^y`, assembled in log
/// space.
///
/// Only real positive `y` is accepted.
pub fn psi1_leading_asym(p: &Psi1Params, pt: &Psi1Point) -> Result<LogScaled> {
    if !p.asym_ok() {
        return Err(Error::ConstraintViolation(format!(
            "leading asymptotics need a - b, a - c outside the integers and Re(c - b) > 0; got ({}, {}, {}, {})",
            p.a, p.b, p.c, p.c_prime
        )));
    }
    if pt.y.im != 0.0 || !(pt.y.re > 0.0) {
        return Err(Error::ConstraintViolation(format!("y must be real and positive, got {}", pt.y)));
    }
    let ly = pt.y.re.ln();
    let ln_ratio = C64::new(ly, 0.0) - pt.one_minus_x().ln();
    let ln_ae = log_gamma(p.c)? + log_gamma(p.c_prime)? - log_gamma(p.a)? - log_gamma(p.c - p.b)?
        + p.b * ln_ratio
        + (p.a - 2.0 * p.b - p.c_prime) * ly
        + pt.y.re;
    Ok(LogScaled::exp(ln_ae))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_carries_y() {
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let pt = Psi1Point::real(-1000.0, 1001.0).unwrap();
        let ae = psi1_leading_asym(&p, &pt).unwrap();
        let lg = |v: f64| log_gamma(C64::new(v, 0.0)).unwrap().re;
        let algebraic = lg(2.5) + lg(3.0) - lg(3.0) - lg(1.0) + 1.5 * (1001f64 / 1001.0).ln() + (3.0 - 3.0 - 3.0) * 1001f64.ln();
        assert!((ae.ln_abs() - (1001.0 + algebraic)).abs() < 1e-11);
    }

    #[test]
    fn rejects_complex_or_degenerate() {
        let p = Psi1Params::real(3.0, 1.5, 2.5, 3.0).unwrap();
        let pt = Psi1Point::new(C64::new(-10.0, 0.0), C64::new(11.0, 1.0)).unwrap();
        assert!(matches!(psi1_leading_asym(&p, &pt), Err(Error::ConstraintViolation(_))));
        let q = Psi1Params::real(3.0, 2.0, 2.5, 3.0).unwrap();
        let pt = Psi1Point::real(-10.0, 11.0).unwrap();
        assert!(matches!(psi1_leading_asym(&q, &pt), Err(Error::ConstraintViolation(_))));
    }
}
