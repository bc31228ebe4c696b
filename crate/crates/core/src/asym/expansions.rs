//! Truncated large-parameter expansions of `2F2` and `pFq`.
//!
//! Each expansion returns the partial sum of its first `N` terms together
//! with the magnitude of the first omitted term. Whenever the coefficients
//! vanish from some index on, the expansion is exact and flagged as such.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::eval::SeriesControl;
use crate::gamma::{distance_to_integer, is_integer, is_nonpositive_integer, log_gamma};
use crate::hyp::f11::f11;
use crate::hyp::pfq::pfq;
use crate::scaled::{LogScaled, C64};

/// Default margin `δ` of the sector `|arg(λ + d)| ≤ π - δ`.
pub const DEFAULT_SECTOR_DELTA: f64 = 0.1;

/// Inputs closer than this to an integer are flagged as near-degenerate.
pub const NEAR_INTEGER: f64 = 1e-9;

/// The available expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpansionVariant {
    /// `2F2[a, b+λ; c, d+λ; z]` as `λ → ∞`.
    LargeLambda,
    /// `2F2[a, b-n; c, d-n; z]` as `n → ∞`.
    MinusN,
    /// `pFq` with `p` numerator and `q` denominator parameters shifted by `-n`.
    PfqAllDown,
    /// `p+1Fp+1` with one numerator and one denominator shifted by `-n`.
    PfpOneDown,
    /// `2F2[a-n, b; c-n, d-n; z]`.
    F22ADown,
    /// `2F2[a-n, b-n; c-n, d-n; z]`.
    F22BothDown,
    /// Leading behaviour of `2F2[a, b+ν; c, d+ν; z]` as `z → ∞`.
    LargeZLeading,
}

impl ExpansionVariant {
    pub const SWEEPABLE: [ExpansionVariant; 6] = [
        ExpansionVariant::LargeLambda,
        ExpansionVariant::MinusN,
        ExpansionVariant::PfqAllDown,
        ExpansionVariant::PfpOneDown,
        ExpansionVariant::F22ADown,
        ExpansionVariant::F22BothDown,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ExpansionVariant::LargeLambda => "large-lambda",
            ExpansionVariant::MinusN => "minus-n",
            ExpansionVariant::PfqAllDown => "pfq-all-down",
            ExpansionVariant::PfpOneDown => "pfp-one-down",
            ExpansionVariant::F22ADown => "f22-a-down",
            ExpansionVariant::F22BothDown => "f22-both-down",
            ExpansionVariant::LargeZLeading => "large-z",
        }
    }

    pub fn from_name(s: &str) -> Option<ExpansionVariant> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        [
            ExpansionVariant::LargeLambda,
            ExpansionVariant::MinusN,
            ExpansionVariant::PfqAllDown,
            ExpansionVariant::PfpOneDown,
            ExpansionVariant::F22ADown,
            ExpansionVariant::F22BothDown,
            ExpansionVariant::LargeZLeading,
        ]
        .into_iter()
        .find(|v| v.name() == s)
    }
}

impl fmt::Display for ExpansionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Truncation order and large parameter of an expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionRequest {
    pub variant: ExpansionVariant,
    /// Number of retained terms `N`.
    pub order: usize,
    /// `λ` for the large-`λ` expansion, `n` for the shifted ones.
    pub scale: f64,
}

impl ExpansionRequest {
    pub fn new(variant: ExpansionVariant, order: usize, scale: f64) -> Result<Self> {
        if order < 1 {
            return Err(Error::ConstraintViolation("truncation order must be at least 1".into()));
        }
        let shifted = !matches!(variant, ExpansionVariant::LargeLambda | ExpansionVariant::LargeZLeading);
        if shifted && !(scale >= 1.0 && scale.fract() == 0.0) {
            return Err(Error::ConstraintViolation(format!("n must be a positive integer, got {scale}")));
        }
        Ok(ExpansionRequest { variant, order, scale })
    }
}

/// A truncated expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionResult {
    pub value: LogScaled,
    pub truncation_order: usize,
    /// Magnitude of the first omitted term.
    pub first_omitted_term: f64,
    /// The coefficients vanish beyond the retained terms.
    pub exact: bool,
    /// Some parameter lies within [`NEAR_INTEGER`] of a forbidden integer.
    pub near_degenerate: bool,
}

/// Tracks integer-degeneracy checks.
#[derive(Default)]
struct Degeneracy {
    near: bool,
}

impl Degeneracy {
    /// Rejects integers, remembers near-integers.
    fn not_integer(&mut self, name: &str, v: C64) -> Result<()> {
        if is_integer(v) {
            return Err(Error::IntegerDegeneracy(format!("{name} = {v} is an integer")));
        }
        if distance_to_integer(v) < NEAR_INTEGER {
            self.near = true;
        }
        Ok(())
    }

    /// Rejects nonpositive integers, remembers values close to them.
    fn not_pole(&mut self, name: &str, v: C64) -> Result<()> {
        if is_nonpositive_integer(v) {
            return Err(Error::DenominatorPole(format!("{name} = {v}")));
        }
        if v.re < 0.5 && distance_to_integer(v) < NEAR_INTEGER {
            self.near = true;
        }
        Ok(())
    }
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::ConstraintViolation(format!("{name} must be positive")));
    }
    Ok(())
}

/// Sums `Σ_{k<N} κ_k F_k` with `κ_0 = 1`, `κ_{k+1} = κ_k ratio(k)`, and
/// measures the term `k = N`.
fn truncated(
    order: usize,
    near_degenerate: bool,
    mut ratio: impl FnMut(f64) -> C64,
    mut inner: impl FnMut(f64) -> Result<LogScaled>,
) -> Result<ExpansionResult> {
    let mut coeff = LogScaled::ONE;
    let mut value = LogScaled::ZERO;
    let mut first_omitted = 0.0;
    let mut exact = false;
    for k in 0..=order {
        if k > 0 {
            coeff = coeff.scale(ratio((k - 1) as f64));
        }
        if coeff.is_zero() {
            exact = true;
            break;
        }
        let term = coeff * inner(k as f64)?;
        if k < order {
            value = value + term;
        } else {
            first_omitted = term.abs().to_complex().re;
        }
    }
    Ok(ExpansionResult {
        value,
        truncation_order: order,
        first_omitted_term: first_omitted,
        exact,
        near_degenerate,
    })
}

fn inner_f11(a: C64, c: C64, z: C64) -> Result<LogScaled> {
    Ok(f11(a, c, z, &SeriesControl::default())?.value)
}

/// `2F2[a, b+λ; c, d+λ; z] ≈ Σ_{k<N} (a)_k (d-b)_k / ((c)_k (d+λ)_k)
/// (-z)^k/k! 1F1[a+k; c+k; z]`, with remainder `O(λ^{-N})`.
pub fn asym_f22_large_lambda(a: C64, b: C64, c: C64, d: C64, z: C64, lambda: C64, order: usize) -> Result<ExpansionResult> {
    asym_f22_large_lambda_with(a, b, c, d, z, lambda, order, DEFAULT_SECTOR_DELTA)
}

/// [`asym_f22_large_lambda`] with an explicit sector margin `δ`.
#[allow(clippy::too_many_arguments)]
pub fn asym_f22_large_lambda_with(
    a: C64,
    b: C64,
    c: C64,
    d: C64,
    z: C64,
    lambda: C64,
    order: usize,
    delta: f64,
) -> Result<ExpansionResult> {
    positive("N", order)?;
    let mut deg = Degeneracy::default();
    deg.not_pole("c", c)?;
    let dl = d + lambda;
    deg.not_pole("d + λ", dl)?;
    if dl.arg().abs() > PI - delta {
        return Err(Error::SectorViolation(format!("|arg(λ + d)| = {} exceeds π - {delta}", dl.arg().abs())));
    }
    truncated(
        order,
        deg.near,
        |k| (a + k) * (d - b + k) / ((c + k) * (dl + k) * (k + 1.0)) * -z,
        |k| inner_f11(a + k, c + k, z),
    )
}

/// `2F2[a, b-n; c, d-n; z] ≈ Σ_{k<N} (a)_k (d-b)_k / ((c)_k (d-n)_k)
/// (-z)^k/k! 1F1[a+k; c+k; z]`, with remainder `O(n^{-N})`.
///
/// When `b - d` is a nonnegative integer the coefficients vanish for
/// `k > b - d` and `N ≥ b - d + 1` gives the exact value.
pub fn asym_f22_minus_n(a: C64, b: C64, c: C64, d: C64, z: C64, n: usize, order: usize) -> Result<ExpansionResult> {
    positive("N", order)?;
    positive("n", n)?;
    let mut deg = Degeneracy::default();
    deg.not_pole("c", c)?;
    deg.not_integer("d", d)?;
    let dn = d - n as f64;
    truncated(
        order,
        deg.near,
        |k| (a + k) * (d - b + k) / ((c + k) * (dn + k) * (k + 1.0)) * -z,
        |k| inner_f11(a + k, c + k, z),
    )
}

/// Plain partial sum of `p+rFq+s[a-n, b; c-n, d; z]` with the `p`
/// numerator and `q` denominator parameters shifted; remainder
/// `O(n^{(p-q)N})`.
pub fn asym_pfq_all_down(
    num_shift: &[C64],
    den_shift: &[C64],
    num_fix: &[C64],
    den_fix: &[C64],
    z: C64,
    n: usize,
    order: usize,
) -> Result<ExpansionResult> {
    positive("N", order)?;
    positive("n", n)?;
    let (p, q, r, s) = (num_shift.len(), den_shift.len(), num_fix.len(), den_fix.len());
    if q < p + 1 {
        return Err(Error::ShapeViolation(format!("need q ≥ p + 1, got p = {p}, q = {q}")));
    }
    if s + 1 < r {
        return Err(Error::ShapeViolation(format!("need s ≥ r - 1, got r = {r}, s = {s}")));
    }
    let mut deg = Degeneracy::default();
    for c in den_shift {
        deg.not_integer("shifted denominator", *c)?;
    }
    for d in den_fix {
        deg.not_pole("fixed denominator", *d)?;
    }
    let nf = n as f64;
    truncated(
        order,
        deg.near,
        |k| {
            let mut r = z / (k + 1.0);
            for a in num_shift {
                r *= a - nf + k;
            }
            for b in num_fix {
                r *= b + k;
            }
            for c in den_shift {
                r /= c - nf + k;
            }
            for d in den_fix {
                r /= d + k;
            }
            r
        },
        |_| Ok(LogScaled::ONE),
    )
}

/// `p+1Fp+1[a, b-n; c, d-n; z] ≈ Σ_{k<N} (a)_k (d-b)_k / ((c)_k (d-n)_k)
/// (-z)^k/k! pFp[a+k; c+k; z]` for parameter lists `a`, `c` of equal
/// length; remainder `O(n^{-N})`.
pub fn asym_pfp_one_down(num: &[C64], den: &[C64], b: C64, d: C64, z: C64, n: usize, order: usize) -> Result<ExpansionResult> {
    positive("N", order)?;
    positive("n", n)?;
    if num.len() != den.len() {
        return Err(Error::ShapeViolation(format!(
            "numerator and denominator lists differ in length: {} vs {}",
            num.len(),
            den.len()
        )));
    }
    let mut deg = Degeneracy::default();
    for c in den {
        deg.not_pole("denominator", *c)?;
    }
    deg.not_integer("b", b)?;
    deg.not_integer("d", d)?;
    let dn = d - n as f64;
    let ctrl = SeriesControl::default();
    truncated(
        order,
        deg.near,
        |k| {
            let mut r = (d - b + k) / ((dn + k) * (k + 1.0)) * -z;
            for a in num {
                r *= a + k;
            }
            for c in den {
                r /= c + k;
            }
            r
        },
        |k| {
            let shifted_num: Vec<C64> = num.iter().map(|a| a + k).collect();
            let shifted_den: Vec<C64> = den.iter().map(|c| c + k).collect();
            Ok(pfq(&shifted_num, &shifted_den, z, &ctrl)?.value)
        },
    )
}

/// `2F2[a-n, b; c-n, d-n; z] ≈ Σ_{k<N} (a-n)_k (b)_k / ((c-n)_k (d-n)_k)
/// z^k/k!`; remainder `O(n^{-N})`.
pub fn asym_f22_a_down(a: C64, b: C64, c: C64, d: C64, z: C64, n: usize, order: usize) -> Result<ExpansionResult> {
    positive("N", order)?;
    positive("n", n)?;
    let mut deg = Degeneracy::default();
    deg.not_integer("c", c)?;
    deg.not_integer("d", d)?;
    let nf = n as f64;
    truncated(
        order,
        deg.near,
        |k| (a - nf + k) * (b + k) / ((c - nf + k) * (d - nf + k) * (k + 1.0)) * z,
        |_| Ok(LogScaled::ONE),
    )
}

/// `2F2[a-n, b-n; c-n, d-n; z] ≈ e^z Σ_{k<N} (a-n)_k (d-b)_k /
/// ((c-n)_k (d-n)_k) (-z)^k/k! 1F1[c-a; c-n+k; -z]`; remainder
/// `O(n^{-N})`.
pub fn asym_f22_both_down(a: C64, b: C64, c: C64, d: C64, z: C64, n: usize, order: usize) -> Result<ExpansionResult> {
    positive("N", order)?;
    positive("n", n)?;
    let mut deg = Degeneracy::default();
    for (name, v) in [("a", a), ("b", b), ("c", c), ("d", d)] {
        deg.not_integer(name, v)?;
    }
    let nf = n as f64;
    let mut r = truncated(
        order,
        deg.near,
        |k| (a - nf + k) * (d - b + k) / ((c - nf + k) * (d - nf + k) * (k + 1.0)) * -z,
        |k| inner_f11(c - a, c - nf + k, -z),
    )?;
    let ez = LogScaled::exp(z);
    r.value = r.value * ez;
    r.first_omitted_term *= ez.abs().to_complex().re;
    Ok(r)
}

/// Leading behaviour `Γ(c)Γ(d+ν)/(Γ(a)Γ(b+ν)) z^{a+b-c-d} e^z` of
/// `2F2[a, b+ν; c, d+ν; z]` for `|arg z| < π/2`.
pub fn asym_f22_large_z(a: C64, b: C64, c: C64, d: C64, nu: usize, z: C64) -> Result<LogScaled> {
    if !(z.re > 0.0) {
        return Err(Error::SectorViolation(format!("need |arg z| < π/2, got z = {z}")));
    }
    let nf = nu as f64;
    for (name, v) in [("a", a), ("b + ν", b + nf), ("c", c), ("d + ν", d + nf)] {
        if is_nonpositive_integer(v) {
            return Err(Error::GammaPole(format!("{name} = {v}")));
        }
    }
    let ln = log_gamma(c)? + log_gamma(d + nf)? - log_gamma(a)? - log_gamma(b + nf)? + (a + b - c - d) * z.ln() + z;
    Ok(LogScaled::exp(ln))
}
