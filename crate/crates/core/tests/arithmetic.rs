//! Log-scaled arithmetic, log-gamma and Pochhammer ratios.

mod common;

use humbert_core::gamma::{log_gamma, pochhammer_ratio, PochhammerQuery};
use humbert_core::{LogScaled, C64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn complex() -> impl Strategy<Value = C64> {
    let part = prop_oneof![-1e100..1e100f64, -1e3..1e3f64, -1.0..1.0f64];
    (part.clone(), part).prop_map(|(re, im)| C64::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn product_matches_float(u in complex(), v in complex()) {
        let p = u * v;
        prop_assume!(p.norm().is_finite() && p.norm() > 1e-290);
        let got = (LogScaled::from_complex(u) * LogScaled::from_complex(v)).to_complex();
        prop_assert!((got - p).norm() <= 1e-14 * p.norm(), "{got} vs {p}");
    }

    #[test]
    fn sum_matches_float(u in complex(), v in complex()) {
        let s = u + v;
        prop_assume!(s.norm().is_finite());
        let got = (LogScaled::from_complex(u) + LogScaled::from_complex(v)).to_complex();
        // rounding of the operands bounds the error of a cancelling sum
        prop_assert!((got - s).norm() <= 1e-14 * (u.norm() + v.norm()), "{got} vs {s}");
    }

    #[test]
    fn round_trip_through_exponent(u in complex(), shift in -500.0..500.0f64) {
        prop_assume!(u.norm() > 0.0);
        let scaled = LogScaled::from_complex(u) * LogScaled::exp(C64::new(shift, 0.0));
        let back = scaled * LogScaled::exp(C64::new(-shift, 0.0));
        prop_assert!((back.to_complex() - u).norm() <= 1e-13 * u.norm());
    }
}

#[test]
fn log_gamma_recurrence() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let z = C64::new(rng.gen_range(0.05..40.0), rng.gen_range(-40.0..40.0));
        let d = log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap() - z.ln();
        assert!(d.norm() < 1e-12, "z = {z}: {d}");
    }
}

#[test]
fn pochhammer_ratio_examples() {
    let r = |a: C64, b: C64, n| pochhammer_ratio(PochhammerQuery { a, b, n }).unwrap();
    let one = C64::new(1.0, 0.0);
    assert!((r(one, C64::new(2.0, 0.0), 9).to_complex().re - 0.1).abs() < 1e-15);
    let a = C64::new(0.7, 0.3);
    assert_eq!(r(a, a, 1000).to_complex(), one);
    // the product in double-double arithmetic is the reference
    let got = r(C64::new(3.0, 0.0), C64::new(1.5, 0.0), 10_000).to_complex().re;
    let want = common::pochhammer_ratio_dd(3.0, 1.5, 10_000).to_f64();
    assert!((got / want - 1.0).abs() < 1e-12, "{got} vs {want}");
}

#[test]
fn pochhammer_ratio_power_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..20 {
        let a = C64::new(rng.gen_range(0.5..3.0), rng.gen_range(-1.0..1.0));
        let b = C64::new(rng.gen_range(0.5..3.0), rng.gen_range(-1.0..1.0));
        let limit = (log_gamma(b).unwrap() - log_gamma(a).unwrap()).re.exp();
        let seq: Vec<f64> = [10usize, 100, 1000, 10_000]
            .iter()
            .map(|&n| {
                let r = pochhammer_ratio(PochhammerQuery { a, b, n }).unwrap();
                (r.ln_abs() + (b - a).re * (n as f64).ln()).exp()
            })
            .collect();
        let last = seq[3];
        for (k, s) in seq.iter().enumerate() {
            assert!(*s <= 2.0 * last, "a = {a}, b = {b}: term {k} = {s}, last = {last}");
        }
        let gaps: Vec<f64> = seq.iter().map(|s| (s / limit - 1.0).abs()).collect();
        for w in gaps.windows(2) {
            assert!(w[1] <= w[0], "a = {a}, b = {b}: {gaps:?}");
        }
        assert!(gaps[3] < 1e-2, "a = {a}, b = {b}: {gaps:?}");
    }
}
