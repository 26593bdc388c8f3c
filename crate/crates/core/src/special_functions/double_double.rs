//! Minimal double-double (~106-bit) real and complex arithmetic for series
//! that cancel heavily in f64.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd::new(x)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::new(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::new(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct ComplexDd {
    pub re: Dd,
    pub im: Dd,
}

impl ComplexDd {
    pub fn new(re: Dd, im: Dd) -> Self {
        ComplexDd { re, im }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// |re| + |im| in f64; adequate for convergence and error bookkeeping.
    pub fn l1_norm(self) -> f64 {
        self.re.hi.abs() + self.im.hi.abs()
    }

    pub fn div_real(self, s: Dd) -> ComplexDd {
        ComplexDd::new(self.re / s, self.im / s)
    }
}

impl From<Complex64> for ComplexDd {
    fn from(z: Complex64) -> Self {
        ComplexDd::new(Dd::new(z.re), Dd::new(z.im))
    }
}

impl Add for ComplexDd {
    type Output = ComplexDd;
    fn add(self, b: ComplexDd) -> ComplexDd {
        ComplexDd::new(self.re + b.re, self.im + b.im)
    }
}

impl Mul for ComplexDd {
    type Output = ComplexDd;
    fn mul(self, b: ComplexDd) -> ComplexDd {
        ComplexDd::new(
            self.re * b.re - self.im * b.im,
            self.re * b.im + self.im * b.re,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_bits_lost_in_f64() {
        let a = Dd::new(1.0) + Dd::new(1e-20);
        let b = a - Dd::new(1.0);
        assert_eq!(b.to_f64(), 1e-20);
    }

    #[test]
    fn division_round_trip() {
        let x = Dd::new(1.0) / Dd::new(3.0);
        let back = x * Dd::new(3.0) - Dd::new(1.0);
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn complex_product() {
        let z = ComplexDd::from(Complex64::new(1.0, 2.0));
        let w = ComplexDd::from(Complex64::new(3.0, -1.0));
        assert_eq!((z * w).to_c64(), Complex64::new(5.0, 5.0));
    }
}
