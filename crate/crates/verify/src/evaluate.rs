//! Single-point evaluation for the `eval` subcommand.

use humbert_core::eval::{EvalResult, Psi1Method};
use humbert_core::hyp::{f11, f21, pfq};
use humbert_core::psi1::{evaluate_with, psi1_auto, psi1_kummer, Psi1Config, Psi1Params, Psi1Point};
use humbert_core::{LogScaled, C64};

use crate::error::{VerifyError, VerifyResult};

/// How Ψ₁ is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Psi1Route {
    Auto,
    Direct(Psi1Method),
    Kummer(Psi1Method),
}

impl Psi1Route {
    /// Accepts `auto`, a method tag such as `integral`, or `kummer+<tag>`.
    pub fn parse(s: &str) -> VerifyResult<Psi1Route> {
        let t = s.trim().to_ascii_lowercase();
        if t == "auto" {
            return Ok(Psi1Route::Auto);
        }
        let unknown = || VerifyError::Usage(format!("unknown method '{s}'"));
        match t.strip_prefix("kummer+") {
            Some(inner) => Psi1Method::from_tag(inner).map(Psi1Route::Kummer).ok_or_else(unknown),
            None => Psi1Method::from_tag(&t).map(Psi1Route::Direct).ok_or_else(unknown),
        }
    }
}

pub fn eval_psi1(params: [C64; 4], x: C64, y: C64, route: Psi1Route, cfg: &Psi1Config) -> VerifyResult<EvalResult> {
    let p = Psi1Params::new(params[0], params[1], params[2], params[3])?;
    let pt = Psi1Point::new(x, y)?;
    let r = match route {
        Psi1Route::Auto => psi1_auto(&p, &pt, cfg)?,
        Psi1Route::Direct(m) => evaluate_with(m, &p, &pt, cfg)?,
        Psi1Route::Kummer(m) => psi1_kummer(&p, &pt, m, cfg)?,
    };
    Ok(r)
}

/// `pFq[num; den; z]`, continued analytically for `1F1` and `2F1`.
pub fn eval_pfq(num: &[C64], den: &[C64], z: C64, cfg: &Psi1Config) -> VerifyResult<EvalResult> {
    let s = &cfg.series;
    let r = match (num, den) {
        ([a], [c]) => f11(*a, *c, z, s)?,
        ([a, b], [c]) => f21(*a, *b, *c, z, s)?,
        _ => pfq(num, den, z, s)?,
    };
    Ok(r)
}

fn complex(z: C64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.16e}{sign}{:.16e}i", z.re, z.im.abs())
}

/// `method=… mantissa=… exponent=… value=… rel_err=…`; the value reads
/// `unrepresentable` when it under- or overflows a float.
pub fn format_result(r: &EvalResult) -> String {
    let v: LogScaled = r.value;
    let plain = match v.to_complex_checked() {
        Some(z) => complex(z),
        None => "unrepresentable".to_string(),
    };
    format!(
        "method={} mantissa={} exponent={} value={} rel_err={:.3e}",
        r.method,
        complex(v.mantissa()),
        v.exponent(),
        plain,
        r.rel_err()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: f64) -> C64 {
        C64::new(v, 0.0)
    }

    #[test]
    fn routes() {
        assert_eq!(Psi1Route::parse("auto").unwrap(), Psi1Route::Auto);
        assert_eq!(Psi1Route::parse("Integral").unwrap(), Psi1Route::Direct(Psi1Method::Integral));
        assert_eq!(
            Psi1Route::parse("kummer+double_series").unwrap(),
            Psi1Route::Kummer(Psi1Method::DoubleSeries)
        );
        assert!(matches!(Psi1Route::parse("magic"), Err(VerifyError::Usage(_))));
    }

    #[test]
    fn normalization_line() {
        let cfg = Psi1Config::default();
        let v = eval_psi1([r(3.0), r(1.5), r(2.5), r(3.0)], r(0.0), r(0.0), Psi1Route::Auto, &cfg).unwrap();
        let line = format_result(&v);
        assert!(line.contains("value=1.0000000000000000e0+0.0000000000000000e0i"), "{line}");
    }

    #[test]
    fn gauss_log() {
        let cfg = Psi1Config::default();
        let v = eval_pfq(&[r(1.0), r(1.0)], &[r(2.0)], r(0.5), &cfg).unwrap();
        assert!((v.value.to_complex().re - 4f64.ln()).abs() < 1e-13);
    }
}
