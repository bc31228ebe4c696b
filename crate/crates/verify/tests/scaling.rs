//! Per-doubling error reduction of every truncated expansion against the
//! double-double oracle.

use humbert_core::asym::ExpansionVariant;
use humbert_verify::sweep::{run_sweep, SweepParams, SweepSpec};

/// Allowed factor between the observed and the ideal reduction per doubling.
const FACTOR: f64 = 2.5;

fn scales(target: ExpansionVariant) -> Vec<f64> {
    if target == ExpansionVariant::LargeLambda {
        vec![25.0, 50.0, 100.0, 200.0]
    } else {
        vec![20.0, 40.0, 80.0, 160.0]
    }
}

#[test]
fn error_halves_per_order_on_each_doubling() {
    for target in ExpansionVariant::SWEEPABLE {
        let spec = SweepSpec::new(target, SweepParams::default_for(target), scales(target), vec![1, 2, 3]).unwrap();
        let rows = run_sweep(&spec).unwrap();
        for order in 1..=3 {
            let ideal = 2f64.powf(spec.slope_target(order));
            let errs: Vec<f64> = rows.iter().filter(|r| r.order == order).map(|r| r.abs_error).collect();
            assert_eq!(errs.len(), 4);
            for w in errs.windows(2) {
                let ratio = w[1] / w[0];
                assert!(
                    ratio >= ideal / FACTOR && ratio <= ideal * FACTOR,
                    "{target}, N = {order}: ratio {ratio:e}, ideal {ideal:e}, errors {errs:?}"
                );
            }
        }
    }
}
