//! Double-double ("unevaluated pair") arithmetic.
//!
//! A [`DoubleDouble`] stores a value as an unevaluated sum `hi + lo` of two
//! f64 components with `|lo| <= ulp(hi)`, giving roughly 32 significant
//! decimal digits. All core operations are built from the classical
//! error-free transformations (Knuth two-sum, FMA two-product); the
//! algorithms follow the QD library of Hida, Li and Bailey.
//!
//! The pair format is what lets series with ~1e24 of internal cancellation
//! (Bessel series at large argument) or golden-table comparisons at the
//! 1e-12 absolute level come out clean in the f64 results returned to
//! callers.

use num_complex::Complex64;

use crate::error::{Result, SpecialError};

/// Knuth two-sum: `a + b = s + e` exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

/// Fast two-sum, valid when `|a| >= |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Exact product via FMA: `a * b = p + e`.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = f64::mul_add(a, b, -p);
    (p, e)
}

/// Double-double value: the unevaluated sum `hi + lo`, `|lo| <= ulp(hi)`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

/// Running extended-precision accumulator; alias kept for call sites that
/// read as summation rather than arithmetic.
pub type ExtendedAccumulator = DoubleDouble;

pub const DD_ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
pub const DD_ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };

/// pi to double-double precision.
pub const DD_PI: DoubleDouble = DoubleDouble {
    hi: std::f64::consts::PI,
    lo: 1.2246467991473532e-16,
};
/// pi/2.
pub const DD_FRAC_PI_2: DoubleDouble = DoubleDouble {
    hi: std::f64::consts::FRAC_PI_2,
    lo: 6.123233995736766e-17,
};
/// 2 pi.
pub const DD_TWO_PI: DoubleDouble = DoubleDouble {
    hi: std::f64::consts::TAU,
    lo: 2.4492935982947064e-16,
};
/// ln 2.
pub const DD_LN2: DoubleDouble = DoubleDouble {
    hi: std::f64::consts::LN_2,
    lo: 2.3190468138462996e-17,
};
/// sqrt(2 pi).
pub const DD_SQRT_2PI: DoubleDouble = DoubleDouble {
    hi: 2.5066282746310007,
    lo: -1.8328579980459167e-16,
};

impl DoubleDouble {
    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Exact sum of two f64 values.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Self { hi, lo }
    }

    /// Exact product of two f64 values.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Self { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    #[inline]
    pub fn add(self, o: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Self { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, x);
        let s2 = s2 + self.lo;
        let (hi, lo) = quick_two_sum(s1, s2);
        Self { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    #[inline]
    pub fn sub_f64(self, x: f64) -> Self {
        self.add_f64(-x)
    }

    #[inline]
    pub fn mul(self, o: Self) -> Self {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Self {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }

    /// Accurate division (three quotient corrections).
    #[inline]
    pub fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Self { hi: s, lo: e }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, x: f64) -> Self {
        self.div(Self::from_f64(x))
    }

    #[inline]
    pub fn recip(self) -> Self {
        DD_ONE.div(self)
    }

    /// Exact scaling by 2^k.
    #[inline]
    pub fn ldexp(self, k: i32) -> Self {
        let f = 2.0f64.powi(k);
        Self { hi: self.hi * f, lo: self.lo * f }
    }

    #[inline]
    pub fn lt(self, o: Self) -> bool {
        self.hi < o.hi || (self.hi == o.hi && self.lo < o.lo)
    }

    /// Square root by one Newton step from the f64 estimate.
    pub fn sqrt(self) -> Self {
        if self.hi == 0.0 && self.lo == 0.0 {
            return DD_ZERO;
        }
        debug_assert!(self.hi > 0.0, "dd sqrt of negative value");
        let y = Self::from_f64(self.hi.sqrt());
        y.add(self.div(y)).mul_f64(0.5)
    }

    /// Exponential. Returns 0 for arguments below the f64 underflow range
    /// and +inf above the overflow range.
    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Self::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return DD_ZERO;
        }
        let k = (self.hi / DD_LN2.hi).round();
        let r = self.sub(DD_LN2.mul_f64(k)).ldexp(-9);
        // expm1 Taylor on |r| <= ln2/1024
        let mut term = r;
        let mut s = r;
        let mut j = 2.0;
        while term.hi.abs() > 1e-35 && j < 24.0 {
            term = term.mul(r).div_f64(j);
            s = s.add(term);
            j += 1.0;
        }
        // square back: (1+s)^2 = 1 + s(2+s), nine times
        for _ in 0..9 {
            s = s.mul(s.add_f64(2.0));
        }
        s.add_f64(1.0).ldexp(k as i32)
    }

    /// Natural logarithm of a positive value, by Newton iteration on exp.
    pub fn ln(self) -> Self {
        debug_assert!(self.hi > 0.0, "dd ln of non-positive value");
        let mut y = Self::from_f64(self.hi.ln());
        for _ in 0..2 {
            // y += x e^{-y} - 1
            y = y.add(self.mul(y.neg().exp()).sub_f64(1.0));
        }
        y
    }

    /// `self^e` for positive `self`.
    pub fn pow(self, e: Self) -> Self {
        self.ln().mul(e).exp()
    }

    /// Simultaneous sine and cosine. Argument reduction against pi/2 keeps
    /// full precision for the |x| <= ~1e3 range used here.
    pub fn sin_cos(self) -> (Self, Self) {
        let k = (self.hi / DD_FRAC_PI_2.hi).round();
        let r = self.sub(DD_FRAC_PI_2.mul_f64(k));
        let (s, c) = sin_cos_taylor(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        }
    }

    pub fn sin(self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(self) -> Self {
        self.sin_cos().1
    }

    /// sin(pi x) with the integer part split off first, so arguments near
    /// integers keep full relative accuracy.
    pub fn sin_pi(self) -> Self {
        let n = self.hi.round();
        let r = self.sub_f64(n);
        let s = DD_PI.mul(r).sin();
        if (n as i64) % 2 == 0 {
            s
        } else {
            s.neg()
        }
    }

    /// Four-quadrant arctangent, Newton-refined from the f64 seed.
    pub fn atan2(y: Self, x: Self) -> Self {
        if y.hi == 0.0 && y.lo == 0.0 && x.hi == 0.0 && x.lo == 0.0 {
            return DD_ZERO;
        }
        let mut th = Self::from_f64(y.hi.atan2(x.hi));
        for _ in 0..2 {
            let (s, c) = th.sin_cos();
            let num = y.mul(c).sub(x.mul(s));
            let den = x.mul(c).add(y.mul(s));
            th = th.add(num.div(den));
        }
        th
    }

    pub fn sinh(self) -> Self {
        let e = self.exp();
        e.sub(e.recip()).mul_f64(0.5)
    }

    pub fn cosh(self) -> Self {
        let e = self.exp();
        e.add(e.recip()).mul_f64(0.5)
    }
}

/// Taylor sine and cosine on |r| <= pi/4 + eps.
fn sin_cos_taylor(r: DoubleDouble) -> (DoubleDouble, DoubleDouble) {
    let r2 = r.mul(r);
    let mut s = r;
    let mut term = r;
    let mut k = 1.0;
    while term.hi.abs() > 1e-35 && k < 40.0 {
        term = term.mul(r2).div_f64(-((k + 1.0) * (k + 2.0)));
        s = s.add(term);
        k += 2.0;
    }
    let mut c = DD_ONE;
    let mut term = DD_ONE;
    let mut k = 0.0;
    while term.hi.abs() > 1e-35 && k < 40.0 {
        term = term.mul(r2).div_f64(-((k + 1.0) * (k + 2.0)));
        c = c.add(term);
        k += 2.0;
    }
    (s, c)
}

/// Adds one f64 to a running extended accumulator, error-free up to
/// double-double precision.
pub fn extended_add(acc: ExtendedAccumulator, x: f64) -> Result<ExtendedAccumulator> {
    if !acc.is_finite() || !x.is_finite() {
        return Err(SpecialError::InvalidInput("extended_add requires finite inputs"));
    }
    let out = acc.add_f64(x);
    if !out.is_finite() {
        return Err(SpecialError::Range("extended_add overflowed"));
    }
    Ok(out)
}

/// Sum of complex terms with double-double accumulation; error is O(1) ulp
/// of the exact sum independent of term count at these lengths.
pub fn compensated_sum(terms: &[Complex64]) -> Result<Complex64> {
    let mut re = DD_ZERO;
    let mut im = DD_ZERO;
    for t in terms {
        if !t.re.is_finite() || !t.im.is_finite() {
            return Err(SpecialError::InvalidInput("compensated_sum requires finite terms"));
        }
        re = re.add_f64(t.re);
        im = im.add_f64(t.im);
    }
    Ok(Complex64::new(re.to_f64(), im.to_f64()))
}
