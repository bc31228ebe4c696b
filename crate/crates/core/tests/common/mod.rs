//! Double-double reference arithmetic for integration tests.

#![allow(dead_code)]

use std::ops::{Add, Div, Mul, Sub};

/// `hi + lo` with `|lo| ≤ ulp(hi)/2`, about 32 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
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

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from(v: f64) -> Dd {
        Dd { hi: v, lo: 0.0 }
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            Dd { hi: -self.hi, lo: -self.lo }
        } else {
            self
        }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + Dd { hi: -o.hi, lo: -o.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * o.lo + self.lo * o.hi));
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * Dd::from(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Dd::from(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from(q3)
    }
}

/// `(a)_n / (b)_n` for real parameters, as a running double-double product.
pub fn pochhammer_ratio_dd(a: f64, b: f64, n: usize) -> Dd {
    let mut acc = Dd::ONE;
    for k in 0..n {
        let k = Dd::from(k as f64);
        acc = acc * ((Dd::from(a) + k) / (Dd::from(b) + k));
    }
    acc
}

/// `pFq[num; den; z]` for real arguments by the direct series in
/// double-double, stopped once three successive terms fall below `1e-32`
/// of the partial sum.
pub fn pfq_dd(num: &[f64], den: &[f64], z: f64) -> f64 {
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut small = 0;
    for k in 0..200_000usize {
        let kf = k as f64;
        let mut r = Dd::from(z) / Dd::from(kf + 1.0);
        for a in num {
            r = r * (Dd::from(*a) + Dd::from(kf));
        }
        for b in den {
            r = r / (Dd::from(*b) + Dd::from(kf));
        }
        term = term * r;
        sum = sum + term;
        if term.hi == 0.0 {
            return sum.to_f64();
        }
        if term.abs().hi <= 1e-32 * sum.abs().hi {
            small += 1;
            if small == 3 {
                return sum.to_f64();
            }
        } else {
            small = 0;
        }
    }
    panic!("reference series did not converge");
}
