//! Complex arithmetic over double-double components.
//!
//! Multiplication uses the plain four-product form; operands here never
//! approach the overflow/underflow thresholds where the compensated
//! complex product would matter.

use num_complex::Complex64;

use super::dd::{DoubleDouble, DD_ONE, DD_ZERO};

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DdComplex {
    pub re: DoubleDouble,
    pub im: DoubleDouble,
}

pub const CDD_ZERO: DdComplex = DdComplex { re: DD_ZERO, im: DD_ZERO };
pub const CDD_ONE: DdComplex = DdComplex { re: DD_ONE, im: DD_ZERO };

impl DdComplex {
    #[inline]
    pub fn new(re: DoubleDouble, im: DoubleDouble) -> Self {
        Self { re, im }
    }

    #[inline]
    pub fn from_c64(z: Complex64) -> Self {
        Self { re: DoubleDouble::from_f64(z.re), im: DoubleDouble::from_f64(z.im) }
    }

    #[inline]
    pub fn from_re(re: DoubleDouble) -> Self {
        Self { re, im: DD_ZERO }
    }

    #[inline]
    pub fn from_f64s(re: f64, im: f64) -> Self {
        Self { re: DoubleDouble::from_f64(re), im: DoubleDouble::from_f64(im) }
    }

    #[inline]
    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self { re: self.re, im: self.im.neg() }
    }

    #[inline]
    pub fn neg(self) -> Self {
        Self { re: self.re.neg(), im: self.im.neg() }
    }

    #[inline]
    pub fn add(self, o: Self) -> Self {
        Self { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Self {
        Self { re: self.re.add_f64(x), im: self.im }
    }

    #[inline]
    pub fn sub(self, o: Self) -> Self {
        Self { re: self.re.sub(o.re), im: self.im.sub(o.im) }
    }

    #[inline]
    pub fn mul(self, o: Self) -> Self {
        Self {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub fn mul_dd(self, x: DoubleDouble) -> Self {
        Self { re: self.re.mul(x), im: self.im.mul(x) }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Self {
        Self { re: self.re.mul_f64(x), im: self.im.mul_f64(x) }
    }

    /// Multiplication by i (exact component swap).
    #[inline]
    pub fn mul_i(self) -> Self {
        Self { re: self.im.neg(), im: self.re }
    }

    #[inline]
    pub fn div_dd(self, x: DoubleDouble) -> Self {
        Self { re: self.re.div(x), im: self.im.div(x) }
    }

    #[inline]
    pub fn div(self, o: Self) -> Self {
        let n2 = o.norm_sqr();
        let num = self.mul(o.conj());
        Self { re: num.re.div(n2), im: num.im.div(n2) }
    }

    #[inline]
    pub fn norm_sqr(self) -> DoubleDouble {
        self.re.mul(self.re).add(self.im.mul(self.im))
    }

    #[inline]
    pub fn abs(self) -> DoubleDouble {
        self.norm_sqr().sqrt()
    }

    /// Cheap magnitude estimate from the leading components only.
    #[inline]
    pub fn abs_estimate(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Self { re: m.mul(c), im: m.mul(s) }
    }

    /// Principal natural logarithm.
    pub fn ln(self) -> Self {
        let r = self.norm_sqr().ln().mul_f64(0.5);
        let th = DoubleDouble::atan2(self.im, self.re);
        Self { re: r, im: th }
    }

    /// Principal square root via exp(ln/2).
    pub fn sqrt(self) -> Self {
        if self.re.hi == 0.0 && self.re.lo == 0.0 && self.im.hi == 0.0 && self.im.lo == 0.0 {
            return CDD_ZERO;
        }
        self.ln().mul_f64(0.5).exp()
    }

    /// Principal power with real double-double exponent.
    pub fn powf_dd(self, e: DoubleDouble) -> Self {
        self.ln().mul_dd(e).exp()
    }

    /// Principal power with complex exponent.
    pub fn powc(self, e: Self) -> Self {
        self.ln().mul(e).exp()
    }

    /// Complex sine: sin(x+iy) = sin x cosh y + i cos x sinh y.
    pub fn sin(self) -> Self {
        let (s, c) = self.re.sin_cos();
        Self { re: s.mul(self.im.cosh()), im: c.mul(self.im.sinh()) }
    }

    /// sin(pi z) with integer reduction of the real part.
    pub fn sin_pi(self) -> Self {
        let n = self.re.hi.round();
        let fr = self.re.sub_f64(n);
        let arg = Self { re: super::dd::DD_PI.mul(fr), im: super::dd::DD_PI.mul(self.im) };
        let s = arg.sin();
        if (n as i64) % 2 == 0 {
            s
        } else {
            s.neg()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: DdComplex, re: (f64, f64), im: (f64, f64), tol: f64) {
        let want = DdComplex::new(DoubleDouble::new(re.0, re.1), DoubleDouble::new(im.0, im.1));
        let d = a.sub(want).abs().to_f64();
        let scale = want.abs().to_f64().max(1e-300);
        assert!(d <= tol * scale, "cdd mismatch: rel diff {:e}", d / scale);
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = DdComplex::from_f64s(1.7, -2.3);
        let b = DdComplex::from_f64s(-0.4, 0.9);
        let c = a.mul(b).div(b);
        assert!(c.sub(a).abs().to_f64() < 1e-30);
    }

    #[test]
    fn exp_ln_roundtrip() {
        let z = DdComplex::from_f64s(0.3, -2.2);
        let w = z.exp().ln();
        assert!(w.sub(z).abs().to_f64() < 1e-30);
    }

    #[test]
    fn sqrt_squares_back() {
        for &(re, im) in &[(2.0, 1.0), (-3.0, 0.5), (-1.0, -4.0), (0.0, 2.6)] {
            let z = DdComplex::from_f64s(re, im);
            let s = z.sqrt();
            assert!(s.mul(s).sub(z).abs().to_f64() < 1e-29 * z.abs().to_f64());
            // principal branch: Re(sqrt) >= 0
            assert!(s.re.hi >= 0.0 || s.re.hi.abs() < 1e-30);
        }
    }

    #[test]
    fn powf_matches_f64_for_easy_cases() {
        let z = DdComplex::from_f64s(0.0, 2.0); // 2i
        let p = z.powf_dd(DoubleDouble::from_f64(2.0));
        // (2i)^2 = -4
        assert!((p.re.to_f64() + 4.0).abs() < 1e-29);
        assert!(p.im.to_f64().abs() < 1e-29);
    }

    #[test]
    fn sin_pi_at_integers() {
        for n in -3..=3 {
            let s = DdComplex::from_f64s(n as f64, 0.0).sin_pi();
            assert!(s.abs().to_f64() < 1e-32);
        }
    }
}
