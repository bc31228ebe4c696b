//! Error-scaling sweeps of the large-parameter expansions against
//! extended-precision direct sums.

use std::io::Write;

use humbert_core::asym::{
    asym_f22_a_down, asym_f22_both_down, asym_f22_large_lambda, asym_f22_minus_n, asym_pfp_one_down,
    asym_pfq_all_down, ExpansionResult, ExpansionVariant,
};
use humbert_core::C64;
use rayon::prelude::*;

use crate::csv::{float, write_header, write_record};
use crate::error::{VerifyError, VerifyResult};
use crate::oracle::pfq_oracle;

/// Allowed deviation of a fitted slope from its target.
pub const SLOPE_TOLERANCE: f64 = 0.5;
/// Errors at or below this mark a sweep as exact.
pub const EXACT_LEVEL: f64 = 1e-12;

/// Real parameters of an expansion.
///
/// `a`, `c` are the shifted (or, for the one-down form, the unshifted)
/// numerator and denominator groups; `b`, `d` the remaining ones. The
/// `2F2` forms use one entry per group.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepParams {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
    pub d: Vec<f64>,
    pub z: f64,
}

impl SweepParams {
    pub fn f22(a: f64, b: f64, c: f64, d: f64, z: f64) -> Self {
        SweepParams {
            a: vec![a],
            b: vec![b],
            c: vec![c],
            d: vec![d],
            z,
        }
    }

    /// A nondegenerate parameter set for each expansion.
    pub fn default_for(target: ExpansionVariant) -> Self {
        match target {
            ExpansionVariant::LargeLambda | ExpansionVariant::MinusN | ExpansionVariant::LargeZLeading => {
                Self::f22(1.2, 0.3, 2.1, 0.7, 2.0)
            }
            ExpansionVariant::PfqAllDown => SweepParams {
                a: vec![1.3],
                b: vec![0.7],
                c: vec![0.4, 2.6],
                d: vec![1.9],
                z: 2.0,
            },
            ExpansionVariant::PfpOneDown => Self::f22(1.1, 0.4, 1.9, 0.8, 1.5),
            ExpansionVariant::F22ADown => Self::f22(3.2, 0.6, 1.4, 0.8, 2.0),
            ExpansionVariant::F22BothDown => Self::f22(1.3, 0.6, 2.4, 0.9, 1.5),
        }
    }

    fn single(&self, name: &str, v: &[f64]) -> VerifyResult<f64> {
        match v {
            [x] => Ok(*x),
            _ => Err(VerifyError::Usage(format!("this expansion takes exactly one '{name}' parameter"))),
        }
    }

    fn f22_parts(&self) -> VerifyResult<(f64, f64, f64, f64)> {
        Ok((
            self.single("a", &self.a)?,
            self.single("b", &self.b)?,
            self.single("c", &self.c)?,
            self.single("d", &self.d)?,
        ))
    }
}

/// Expansion, parameters, scale points and truncation orders of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub target: ExpansionVariant,
    pub params: SweepParams,
    pub scale_points: Vec<f64>,
    pub orders: Vec<usize>,
}

impl SweepSpec {
    pub fn new(target: ExpansionVariant, params: SweepParams, scale_points: Vec<f64>, orders: Vec<usize>) -> VerifyResult<Self> {
        if target == ExpansionVariant::LargeZLeading {
            return Err(VerifyError::Usage("the large-z leading term has no truncation order to sweep".into()));
        }
        if scale_points.len() < 2 {
            return Err(VerifyError::Usage("a sweep needs at least two scale points".into()));
        }
        if scale_points.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(VerifyError::Usage("scale points must be strictly increasing".into()));
        }
        if orders.is_empty() || orders.contains(&0) {
            return Err(VerifyError::Usage("orders must be positive".into()));
        }
        Ok(SweepSpec {
            target,
            params,
            scale_points,
            orders,
        })
    }

    /// Slope of `ln error` against `ln scale` predicted for order `n`.
    pub fn slope_target(&self, n: usize) -> f64 {
        match self.target {
            ExpansionVariant::PfqAllDown => (self.params.a.len() as f64 - self.params.c.len() as f64) * n as f64,
            _ => -(n as f64),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub scale: f64,
    pub order: usize,
    pub expansion_value: f64,
    pub oracle_value: f64,
    pub abs_error: f64,
    pub exact: bool,
    pub near_degenerate: bool,
}

/// Fitted slope per order, or `None` when every error is at rounding
/// level.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepFit {
    pub order: usize,
    pub target: f64,
    pub slope: Option<f64>,
}

impl SweepFit {
    pub fn passes(&self) -> bool {
        match self.slope {
            None => true,
            Some(s) => (s - self.target).abs() <= SLOPE_TOLERANCE,
        }
    }
}

fn r(v: f64) -> C64 {
    C64::new(v, 0.0)
}

fn rs(v: &[f64]) -> Vec<C64> {
    v.iter().map(|x| r(*x)).collect()
}

fn shifted(v: &[f64], by: f64) -> Vec<f64> {
    v.iter().map(|x| x + by).collect()
}

fn as_index(scale: f64) -> VerifyResult<usize> {
    if scale >= 1.0 && scale.fract() == 0.0 {
        Ok(scale as usize)
    } else {
        Err(VerifyError::Usage(format!("n must be a positive integer, got {scale}")))
    }
}

/// The truncated expansion at one scale point.
pub fn expansion_at(target: ExpansionVariant, p: &SweepParams, scale: f64, order: usize) -> VerifyResult<ExpansionResult> {
    let z = r(p.z);
    let res = match target {
        ExpansionVariant::LargeLambda => {
            let (a, b, c, d) = p.f22_parts()?;
            asym_f22_large_lambda(r(a), r(b), r(c), r(d), z, r(scale), order)?
        }
        ExpansionVariant::MinusN => {
            let (a, b, c, d) = p.f22_parts()?;
            asym_f22_minus_n(r(a), r(b), r(c), r(d), z, as_index(scale)?, order)?
        }
        ExpansionVariant::PfqAllDown => asym_pfq_all_down(&rs(&p.a), &rs(&p.c), &rs(&p.b), &rs(&p.d), z, as_index(scale)?, order)?,
        ExpansionVariant::PfpOneDown => {
            let b = p.single("b", &p.b)?;
            let d = p.single("d", &p.d)?;
            asym_pfp_one_down(&rs(&p.a), &rs(&p.c), r(b), r(d), z, as_index(scale)?, order)?
        }
        ExpansionVariant::F22ADown => {
            let (a, b, c, d) = p.f22_parts()?;
            asym_f22_a_down(r(a), r(b), r(c), r(d), z, as_index(scale)?, order)?
        }
        ExpansionVariant::F22BothDown => {
            let (a, b, c, d) = p.f22_parts()?;
            asym_f22_both_down(r(a), r(b), r(c), r(d), z, as_index(scale)?, order)?
        }
        ExpansionVariant::LargeZLeading => {
            return Err(VerifyError::Usage("the large-z leading term is not a truncated expansion".into()))
        }
    };
    Ok(res)
}

/// Parameters `(numerator, denominator)` of the function being expanded.
pub fn oracle_parameters(target: ExpansionVariant, p: &SweepParams, scale: f64) -> (Vec<f64>, Vec<f64>) {
    let n = scale;
    let cat = |u: Vec<f64>, v: Vec<f64>| [u, v].concat();
    match target {
        ExpansionVariant::LargeLambda | ExpansionVariant::LargeZLeading => {
            (cat(p.a.clone(), shifted(&p.b, n)), cat(p.c.clone(), shifted(&p.d, n)))
        }
        ExpansionVariant::MinusN | ExpansionVariant::PfpOneDown => {
            (cat(p.a.clone(), shifted(&p.b, -n)), cat(p.c.clone(), shifted(&p.d, -n)))
        }
        ExpansionVariant::PfqAllDown => (cat(shifted(&p.a, -n), p.b.clone()), cat(shifted(&p.c, -n), p.d.clone())),
        ExpansionVariant::F22ADown => (cat(shifted(&p.a, -n), p.b.clone()), cat(shifted(&p.c, -n), shifted(&p.d, -n))),
        ExpansionVariant::F22BothDown => {
            (cat(shifted(&p.a, -n), shifted(&p.b, -n)), cat(shifted(&p.c, -n), shifted(&p.d, -n)))
        }
    }
}

/// Reference value of the function being expanded.
pub fn oracle_at(target: ExpansionVariant, p: &SweepParams, scale: f64) -> VerifyResult<f64> {
    let (num, den) = oracle_parameters(target, p, scale);
    Ok(pfq_oracle(&num, &den, p.z)?)
}

fn sweep_row(spec: &SweepSpec, scale: f64, order: usize) -> VerifyResult<SweepRow> {
    let e = expansion_at(spec.target, &spec.params, scale, order)?;
    let oracle = oracle_at(spec.target, &spec.params, scale)?;
    let value = e.value.to_complex();
    Ok(SweepRow {
        scale,
        order,
        expansion_value: value.re,
        oracle_value: oracle,
        abs_error: (value - oracle).norm(),
        exact: e.exact,
        near_degenerate: e.near_degenerate,
    })
}

/// Evaluates all `(order, scale)` rows in parallel, ordered by order and
/// then by scale.
pub fn run_sweep(spec: &SweepSpec) -> VerifyResult<Vec<SweepRow>> {
    let jobs: Vec<(usize, f64)> = spec
        .orders
        .iter()
        .flat_map(|&n| spec.scale_points.iter().map(move |&s| (n, s)))
        .collect();
    jobs.par_iter().map(|&(n, s)| sweep_row(spec, s, n)).collect()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let m = points.len() as f64;
    let lx: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / m;
    let my = ly.iter().sum::<f64>() / m;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Fits one slope per order. Orders whose errors are all at rounding level
/// relative to the oracle are reported as exact.
pub fn fit(spec: &SweepSpec, rows: &[SweepRow]) -> Vec<SweepFit> {
    spec.orders
        .iter()
        .map(|&n| {
            let mine: Vec<&SweepRow> = rows.iter().filter(|r| r.order == n).collect();
            let exact = mine
                .iter()
                .all(|r| r.abs_error <= EXACT_LEVEL * r.oracle_value.abs().max(1.0));
            let slope = (!exact).then(|| {
                let pts: Vec<(f64, f64)> = mine.iter().map(|r| (r.scale, r.abs_error.max(f64::MIN_POSITIVE))).collect();
                loglog_slope(&pts)
            });
            SweepFit {
                order: n,
                target: spec.slope_target(n),
                slope,
            }
        })
        .collect()
}

pub const SWEEP_COLUMNS: [&str; 7] = ["scale", "N", "expansion_value", "oracle_value", "abs_error", "fitted_slope", "method"];

pub fn write_sweep<W: Write>(out: &mut W, spec: &SweepSpec, rows: &[SweepRow], fits: &[SweepFit]) -> VerifyResult<()> {
    write_header(out, &SWEEP_COLUMNS)?;
    for r in rows {
        let f = fits.iter().find(|f| f.order == r.order).expect("every order is fitted");
        let slope = match f.slope {
            Some(s) => float(s),
            None => "exact".to_string(),
        };
        write_record(
            out,
            &[
                float(r.scale),
                r.order.to_string(),
                float(r.expansion_value),
                float(r.oracle_value),
                float(r.abs_error),
                slope,
                spec.target.name().to_string(),
            ],
        )?;
    }
    Ok(())
}

/// Runs a sweep, writes it, and checks each fitted slope.
pub fn cmd_sweep<W: Write>(spec: &SweepSpec, out: &mut W) -> VerifyResult<Vec<SweepFit>> {
    let rows = run_sweep(spec)?;
    let fits = fit(spec, &rows);
    write_sweep(out, spec, &rows, &fits)?;
    let bad: Vec<String> = fits
        .iter()
        .filter(|f| !f.passes())
        .map(|f| format!("N = {}: slope {:.3} vs {}", f.order, f.slope.unwrap_or(f64::NAN), f.target))
        .collect();
    if bad.is_empty() {
        Ok(fits)
    } else {
        Err(VerifyError::Acceptance(bad.join("; ")))
    }
}
