//! Log-gamma, reciprocal gamma and Pochhammer symbols for complex arguments.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scaled::{LogScaled, C64};

/// Real part beyond which the Stirling series is used directly.
const STIRLING_MIN_RE: f64 = 15.0;

/// Below this real part the reflection formula replaces upward shifting.
const REFLECT_BELOW: f64 = -10.0;

/// Largest `n` for which Pochhammer ratios use the direct product.
pub const POCHHAMMER_CROSSOVER: usize = 32;

/// `B_{2k} / (2k (2k-1))` for k = 1..=10.
const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

/// True when `z` is exactly 0, -1, -2, ...
pub fn is_nonpositive_integer(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// True when `z` is exactly an integer.
pub fn is_integer(z: C64) -> bool {
    z.im == 0.0 && z.re.is_finite() && z.re.fract() == 0.0
}

/// Distance from `z` to the nearest integer.
pub fn distance_to_integer(z: C64) -> f64 {
    (z - C64::new(z.re.round(), 0.0)).norm()
}

/// `ln(1 + z)` without cancellation for small `z`.
pub fn ln1p(z: C64) -> C64 {
    if z.norm() > 0.5 {
        return (C64::new(1.0, 0.0) + z).ln();
    }
    let (x, y) = (z.re, z.im);
    let re = 0.5 * (2.0 * x + x * x + y * y).ln_1p();
    C64::new(re, y.atan2(1.0 + x))
}

fn stirling_tail(w: C64) -> C64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut acc = C64::new(0.0, 0.0);
    for c in STIRLING_COEFFS.iter().rev() {
        acc = acc * inv2 + c;
    }
    acc * inv
}

fn stirling(w: C64) -> C64 {
    let half_ln_2pi = 0.5 * (2.0 * PI).ln();
    (w - 0.5) * w.ln() - w + half_ln_2pi + stirling_tail(w)
}

/// `ln Γ(w1) - ln Γ(w2)` for arguments with large real part, written so
/// nearly equal arguments do not cancel catastrophically.
fn stirling_diff(w1: C64, w2: C64) -> C64 {
    let d = w1 - w2;
    let lw2 = w2.ln();
    d * lw2 + (w1 - 0.5) * ln1p(d / w2) - d + stirling_tail(w1) - stirling_tail(w2)
}

/// Principal branch of `ln Γ(z)`, continuous on the plane cut along
/// `(-∞, 0]`.
pub fn log_gamma(z: C64) -> Result<C64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("{z}")));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite(z.re));
    }
    if z.re < REFLECT_BELOW {
        return Ok(reflected_log_gamma(z));
    }
    Ok(shifted_log_gamma(z))
}

fn shifted_log_gamma(z: C64) -> C64 {
    let mut w = z;
    let mut shift = C64::new(0.0, 0.0);
    while w.re < STIRLING_MIN_RE {
        shift += w.ln();
        w += 1.0;
    }
    stirling(w) - shift
}

/// Reflection with `ln sin(πz)` expanded so its branch follows `z`
/// continuously in each half-plane.
fn reflected_log_gamma(z: C64) -> C64 {
    if z.im < 0.0 {
        return reflected_log_gamma(z.conj()).conj();
    }
    let i = Complex64::i();
    let w = (2.0 * PI * i * z).exp();
    let ln_sin = C64::new(0.5f64.ln(), 0.5 * PI) - i * PI * z + ln1p(-w);
    C64::new(PI.ln(), 0.0) - ln_sin - shifted_log_gamma(C64::new(1.0, 0.0) - z)
}

/// `Γ(z)` in log-scaled form.
pub fn gamma_ls(z: C64) -> Result<LogScaled> {
    Ok(LogScaled::exp(log_gamma(z)?))
}

/// `1/Γ(z)` in log-scaled form; exactly zero at the poles of `Γ`.
pub fn rgamma_ls(z: C64) -> LogScaled {
    match log_gamma(z) {
        Ok(l) => LogScaled::exp(-l),
        Err(_) => LogScaled::ZERO,
    }
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer(a: C64, n: usize) -> C64 {
    let mut p = C64::new(1.0, 0.0);
    for k in 0..n {
        p *= a + k as f64;
    }
    p
}

/// Rising factorial in log-scaled form, safe for large `n`.
pub fn pochhammer_ls(a: C64, n: usize) -> LogScaled {
    if n <= POCHHAMMER_CROSSOVER || is_nonpositive_integer(a) {
        return product_ls(a, None, n);
    }
    match (log_gamma(a + n as f64), log_gamma(a)) {
        (Ok(l1), Ok(l0)) => LogScaled::exp(l1 - l0),
        _ => product_ls(a, None, n),
    }
}

/// Arguments of the Pochhammer ratio `(a)_n / (b)_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PochhammerQuery {
    pub a: C64,
    pub b: C64,
    pub n: usize,
}

fn product_ls(a: C64, b: Option<C64>, n: usize) -> LogScaled {
    let mut acc = LogScaled::ONE;
    let mut chunk = C64::new(1.0, 0.0);
    for k in 0..n {
        let kf = k as f64;
        chunk *= match b {
            Some(b) => (a + kf) / (b + kf),
            None => a + kf,
        };
        if k % 16 == 15 {
            acc = acc * LogScaled::from_complex(chunk);
            chunk = C64::new(1.0, 0.0);
        }
    }
    acc * LogScaled::from_complex(chunk)
}

/// `(a)_n / (b)_n`, by direct product for `n ≤ 32` and through log-gamma
/// differences beyond.
pub fn pochhammer_ratio(q: PochhammerQuery) -> Result<LogScaled> {
    let PochhammerQuery { a, b, n } = q;
    if is_nonpositive_integer(b) {
        return Err(Error::Pole(format!("denominator parameter {b}")));
    }
    if a == b {
        return Ok(LogScaled::ONE);
    }
    if is_nonpositive_integer(a) && (n as f64) > -a.re {
        return Ok(LogScaled::ZERO);
    }
    if n <= POCHHAMMER_CROSSOVER || is_nonpositive_integer(a) {
        return Ok(product_ls(a, Some(b), n));
    }
    Ok(LogScaled::exp(ln_pochhammer_ratio(a, b, n)?))
}

/// Logarithm of `(a)_n / (b)_n` by log-gamma differences.
fn ln_pochhammer_ratio(a: C64, b: C64, n: usize) -> Result<C64> {
    let nf = n as f64;
    let an = a + nf;
    let bn = b + nf;
    let top = if an.re >= STIRLING_MIN_RE && bn.re >= STIRLING_MIN_RE {
        stirling_diff(an, bn)
    } else {
        log_gamma(an)? - log_gamma(bn)?
    };
    Ok(top - log_gamma(a)? + log_gamma(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn log_gamma_small_values() {
        assert!(log_gamma(c(1.0)).unwrap().norm() < 1e-14);
        assert!((log_gamma(c(0.5)).unwrap().re - 0.572_364_942_924_700_1).abs() < 1e-14);
        assert!((log_gamma(c(5.0)).unwrap().re - 24f64.ln()).abs() < 1e-13);
        assert!(matches!(log_gamma(c(-3.0)), Err(Error::Pole(_))));
        assert!(matches!(log_gamma(c(0.0)), Err(Error::Pole(_))));
    }

    #[test]
    fn log_gamma_factorials() {
        let mut f = 1.0f64;
        for n in 1..40 {
            let v = log_gamma(c(n as f64 + 1.0)).unwrap();
            f *= n as f64;
            assert!((v.re - f.ln()).abs() <= 1e-13 * f.ln().max(1.0), "n = {n}");
            assert_eq!(v.im, 0.0);
        }
    }

    #[test]
    fn reflection_region() {
        // Γ(-10.5) = -2^11 √π / 21!!
        let mut dfact = 1.0f64;
        let mut k = 1.0;
        while k <= 21.0 {
            dfact *= k;
            k += 2.0;
        }
        let expected = -(2f64.powi(11)) * PI.sqrt() / dfact;
        let v = gamma_ls(c(-10.5)).unwrap().to_complex();
        assert!((v.re - expected).abs() < 1e-12 * expected.abs());
    }

    #[test]
    fn branch_continuity_across_reflection_switch() {
        for &im in &[0.3, -0.7, 4.0] {
            let l = log_gamma(C64::new(REFLECT_BELOW - 1e-9, im)).unwrap();
            let r = shifted_log_gamma(C64::new(REFLECT_BELOW - 1e-9, im));
            assert!((l - r).norm() < 1e-9, "im = {im}: {l} vs {r}");
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(c(3.0), 4), c(360.0));
        assert_eq!(pochhammer(c(-2.0), 5), c(0.0));
        assert_eq!(pochhammer(C64::new(0.3, 2.0), 0), c(1.0));
    }

    #[test]
    fn pochhammer_ratio_examples() {
        let r = pochhammer_ratio(PochhammerQuery { a: c(1.0), b: c(2.0), n: 9 }).unwrap();
        assert!((r.to_complex() - c(0.1)).norm() < 1e-15);
        let z = C64::new(0.7, 0.3);
        let r = pochhammer_ratio(PochhammerQuery { a: z, b: z, n: 1000 }).unwrap();
        assert_eq!(r.to_complex(), c(1.0));
        assert!(pochhammer_ratio(PochhammerQuery { a: c(1.0), b: c(-2.0), n: 3 }).is_err());
        let r = pochhammer_ratio(PochhammerQuery { a: c(-2.0), b: c(0.5), n: 100 }).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn pochhammer_branches_agree_at_crossover() {
        let pairs = [
            (C64::new(3.0, 0.0), C64::new(1.5, 0.0)),
            (C64::new(0.3, 1.2), C64::new(2.7, -0.4)),
            (C64::new(-4.5, 0.5), C64::new(1.1, 0.0)),
        ];
        for (a, b) in pairs {
            for n in [POCHHAMMER_CROSSOVER, POCHHAMMER_CROSSOVER + 1, 60] {
                let direct = product_ls(a, Some(b), n);
                let viagamma = LogScaled::exp(ln_pochhammer_ratio(a, b, n).unwrap());
                let rel = (direct.ratio(&viagamma) - 1.0).norm();
                assert!(rel < 1e-12, "a={a} b={b} n={n}: {rel:e}");
            }
        }
    }

    #[test]
    fn ln1p_small() {
        let z = C64::new(1e-12, -3e-13);
        assert!((ln1p(z) - (z - z * z / 2.0)).norm() < 1e-28);
    }
}
