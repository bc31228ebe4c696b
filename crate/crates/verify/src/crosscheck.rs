//! Pairwise agreement of the Ψ₁ representations on random draws.
//!
//! Parameters `a, b, c, c'` are uniform on `[0.2, 4]`, redrawn while any of
//! `a - b`, `a - c`, `a + b - c` lies within 0.05 of an integer. Points
//! cycle through five regions:
//!
//! | draw mod 5 | `x`                                   | `y`        |
//! |------------|---------------------------------------|------------|
//! | 0          | uniform on `(-0.6, 0.6)`              | `(0, 2)`   |
//! | 1          | `1 - r`, `r` uniform on `(0.1, 0.6)`  | `(0, 2)`   |
//! | 2          | uniform on `(-12, -2)`                | `(0, 4)`   |
//! | 3          | uniform on `(-8, 0.5)`                | `(0, 8)`   |
//! | 4          | `(-3, 0.9) + i (-2, 2)`               | `(0, 2)`   |
//!
//! Region 4 redraws `x` within [`EXCLUDED_RADIUS`] of `e^{±iπ/3}`, where no
//! Gauss-function representation converges quickly.

use std::io::Write;

use humbert_core::eval::Psi1Method;
use humbert_core::gamma::distance_to_integer;
use humbert_core::psi1::{candidate_methods, evaluate_with, Psi1Config, Psi1Params, Psi1Point};
use humbert_core::{LogScaled, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::csv::{float, write_header, write_record};
use crate::error::{VerifyError, VerifyResult};

/// Largest accepted relative discrepancy between two representations.
pub const MAX_DISCREPANCY: f64 = 1e-8;
/// Results whose own relative error estimate exceeds this are reported but
/// left out of the comparison.
pub const MAX_SELF_ERROR: f64 = 1e-9;
const PARAM_RANGE: (f64, f64) = (0.2, 4.0);
const INTEGER_MARGIN: f64 = 0.05;
/// Radius of the discs about `e^{±iπ/3}` kept free of region-4 points.
pub const EXCLUDED_RADIUS: f64 = 0.25;

fn near_sixth_root(x: C64) -> bool {
    let root = C64::new(0.5, 0.75f64.sqrt());
    (x - root).norm() < EXCLUDED_RADIUS || (x - root.conj()).norm() < EXCLUDED_RADIUS
}

/// One random parameter/point combination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Draw {
    pub index: usize,
    pub region: usize,
    pub params: Psi1Params,
    pub point: Psi1Point,
}

fn draw_params(rng: &mut ChaCha8Rng) -> Psi1Params {
    loop {
        let mut v = [0.0; 4];
        for slot in &mut v {
            *slot = rng.gen_range(PARAM_RANGE.0..PARAM_RANGE.1);
        }
        let [a, b, c, cp] = v;
        let clear = [a - b, a - c, a + b - c]
            .iter()
            .all(|d| distance_to_integer(C64::new(*d, 0.0)) >= INTEGER_MARGIN);
        if clear {
            return Psi1Params::real(a, b, c, cp).expect("denominators are positive");
        }
    }
}

fn draw_point(rng: &mut ChaCha8Rng, region: usize) -> Psi1Point {
    let (x, y) = match region {
        0 => (C64::new(rng.gen_range(-0.6..0.6), 0.0), rng.gen_range(0.0..2.0)),
        1 => (C64::new(1.0 - rng.gen_range(0.1..0.6), 0.0), rng.gen_range(0.0..2.0)),
        2 => (C64::new(rng.gen_range(-12.0..-2.0), 0.0), rng.gen_range(0.0..4.0)),
        3 => (C64::new(rng.gen_range(-8.0..0.5), 0.0), rng.gen_range(0.0..8.0)),
        _ => loop {
            let x = C64::new(rng.gen_range(-3.0..0.9), rng.gen_range(-2.0..2.0));
            let y = rng.gen_range(0.0..2.0);
            if !near_sixth_root(x) {
                break (x, y);
            }
        },
    };
    Psi1Point::new(x, C64::new(y, 0.0)).expect("points avoid the cut")
}

/// The deterministic sequence of draws for `seed`.
pub fn draws(seed: u64, count: usize) -> Vec<Draw> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|index| {
            let region = index % 5;
            let params = draw_params(&mut rng);
            let point = draw_point(&mut rng, region);
            Draw {
                index,
                region,
                params,
                point,
            }
        })
        .collect()
}

/// `|u - v| / max(|u|, |v|)`.
pub fn discrepancy(u: &LogScaled, v: &LogScaled) -> f64 {
    let scale = if u.abs_ratio(v) >= 1.0 { *u } else { *v };
    if scale.is_zero() {
        return 0.0;
    }
    let d = (*u - *v).abs_ratio(&scale);
    if d.is_nan() {
        f64::INFINITY
    } else {
        d
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossRow {
    pub draw: Draw,
    pub methods: Vec<Psi1Method>,
    /// Methods excluded by [`MAX_SELF_ERROR`].
    pub skipped: Vec<Psi1Method>,
    pub value: C64,
    pub max_discrepancy: f64,
    pub worst_pair: Option<(Psi1Method, Psi1Method)>,
}

/// Evaluates every applicable representation at one draw and compares
/// those that claim an accuracy of at least [`MAX_SELF_ERROR`].
pub fn check_draw(d: &Draw, cfg: &Psi1Config) -> VerifyResult<CrossRow> {
    let methods = candidate_methods(&d.params, &d.point, cfg);
    let mut kept = Vec::with_capacity(methods.len());
    let mut skipped = Vec::new();
    for m in &methods {
        let r = evaluate_with(*m, &d.params, &d.point, cfg).map_err(|source| VerifyError::Evaluator {
            context: format!("draw {} by {}", d.index, m.tag()),
            source,
        })?;
        if r.rel_err() <= MAX_SELF_ERROR {
            kept.push((*m, r.value));
        } else {
            skipped.push(*m);
        }
    }
    let mut max = 0.0;
    let mut worst = None;
    for i in 0..kept.len() {
        for j in i + 1..kept.len() {
            let dis = discrepancy(&kept[i].1, &kept[j].1);
            if dis > max || worst.is_none() {
                max = dis;
                worst = Some((kept[i].0, kept[j].0));
            }
        }
    }
    let value = kept.first().map_or(C64::new(f64::NAN, 0.0), |(_, v)| v.to_complex());
    Ok(CrossRow {
        draw: *d,
        methods,
        skipped,
        value,
        max_discrepancy: if kept.is_empty() { f64::INFINITY } else { max },
        worst_pair: worst,
    })
}

pub fn run_crosscheck(seed: u64, count: usize, cfg: &Psi1Config) -> VerifyResult<Vec<CrossRow>> {
    draws(seed, count).par_iter().map(|d| check_draw(d, cfg)).collect()
}

pub const CROSS_COLUMNS: [&str; 14] = [
    "index",
    "region",
    "a",
    "b",
    "c",
    "c_prime",
    "x_re",
    "x_im",
    "y",
    "methods",
    "skipped",
    "value_re",
    "max_discrepancy",
    "worst_pair",
];

pub fn write_crosscheck<W: Write>(out: &mut W, rows: &[CrossRow]) -> VerifyResult<()> {
    write_header(out, &CROSS_COLUMNS)?;
    for r in rows {
        let p = &r.draw.params;
        let methods: Vec<&str> = r.methods.iter().map(|m| m.tag()).collect();
        let skipped: Vec<&str> = r.skipped.iter().map(|m| m.tag()).collect();
        let worst = match r.worst_pair {
            Some((u, v)) => format!("{}|{}", u.tag(), v.tag()),
            None => String::new(),
        };
        write_record(
            out,
            &[
                r.draw.index.to_string(),
                r.draw.region.to_string(),
                float(p.a.re),
                float(p.b.re),
                float(p.c.re),
                float(p.c_prime.re),
                float(r.draw.point.x.re),
                float(r.draw.point.x.im),
                float(r.draw.point.y.re),
                methods.join("|"),
                skipped.join("|"),
                float(r.value.re),
                float(r.max_discrepancy),
                worst,
            ],
        )?;
    }
    Ok(())
}

/// Runs the check, writes the rows, and fails when any pair disagrees.
pub fn cmd_crosscheck<W: Write>(seed: u64, count: usize, cfg: &Psi1Config, out: &mut W) -> VerifyResult<Vec<CrossRow>> {
    let rows = run_crosscheck(seed, count, cfg)?;
    write_crosscheck(out, &rows)?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !(r.max_discrepancy <= MAX_DISCREPANCY))
        .map(|r| format!("draw {}: {:e}", r.draw.index, r.max_discrepancy))
        .collect();
    if bad.is_empty() {
        Ok(rows)
    } else {
        Err(VerifyError::Acceptance(format!("discrepancies above {MAX_DISCREPANCY:e}: {}", bad.join("; "))))
    }
}
