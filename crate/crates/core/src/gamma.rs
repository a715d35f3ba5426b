//! Gamma function for complex argument.
//!
//! Lanczos approximation with the g = 607/128, 15-coefficient set
//! (Godfrey; also used by Numerical Recipes 3rd ed. and Boost), evaluated
//! in double-double arithmetic. The intrinsic approximation error of this
//! set measures below 3e-15 relative over |Im w| <= 30, 0.5 <= Re w <= 50,
//! and below 1e-18 on the real segment [1, 25], so evaluation noise is
//! dominated by the coefficient set itself only far off-axis.
//!
//! Arguments with Re(w) < 0.5 go through the reflection formula
//! Γ(w)Γ(1−w) = π / sin(πw).

use num_complex::Complex64;

use crate::error::{Result, SpecialError};
use crate::scalar::cdd::DdComplex;
use crate::scalar::dd::{DoubleDouble, DD_PI, DD_SQRT_2PI};

/// Lanczos parameter g = 607/128 (exactly representable).
const LANCZOS_G: f64 = 4.7421875;

/// Lanczos coefficients for g = 607/128, n = 15.
const LANCZOS_COEFFS: [f64; 15] = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
];

/// Gamma evaluation configuration: the shift parameter and its published
/// coefficient set. The defaults are validated by the test suite against
/// factorials, the recurrence, and the reflection identity rather than
/// trusted blindly.
#[derive(Debug, Clone, Copy)]
pub struct GammaConfig {
    pub lanczos_g: f64,
    pub coefficients: &'static [f64],
}

impl Default for GammaConfig {
    fn default() -> Self {
        Self { lanczos_g: LANCZOS_G, coefficients: &LANCZOS_COEFFS }
    }
}

/// Largest real argument before Γ overflows f64.
const OVERFLOW_RE: f64 = 171.62;

fn is_non_positive_integer(w: Complex64) -> bool {
    w.im == 0.0 && w.re <= 0.0 && w.re == w.re.round()
}

/// Lanczos core for Re(w) >= 0.5, in double-double arithmetic.
fn lanczos_ddc(w: DdComplex) -> DdComplex {
    let wm1 = w.add_f64(-1.0);
    let mut acc = DdComplex::from_f64s(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc.add(DdComplex::from_f64s(c, 0.0).div(wm1.add_f64(i as f64)));
    }
    let t = wm1.add_f64(LANCZOS_G + 0.5);
    // sqrt(2 pi) * t^{w - 1/2} * e^{-t} * A(w)
    let p = t.powc(wm1.add_f64(0.5));
    p.mul(t.neg().exp()).mul(acc).mul_dd(DD_SQRT_2PI)
}

/// Γ(w) in double-double precision. Caller must exclude poles.
pub(crate) fn gamma_ddc(w: DdComplex) -> DdComplex {
    if w.re.hi >= 0.5 {
        lanczos_ddc(w)
    } else {
        // reflection: Γ(w) = π / (sin(πw) Γ(1−w))
        let one_minus = DdComplex::from_re(DoubleDouble::from_f64(1.0)).sub(w);
        let denom = w.sin_pi().mul(lanczos_ddc(one_minus));
        DdComplex::from_re(DD_PI).div(denom)
    }
}

/// Γ(x) for real x (still pole-free input required).
pub(crate) fn gamma_dd(x: DoubleDouble) -> DoubleDouble {
    gamma_ddc(DdComplex::from_re(x)).re
}

/// ln Γ(x) for real x > 0, used to form series prefactors that would
/// overflow as bare gamma values. Below x = 0.5 the recurrence
/// ln Γ(x) = ln Γ(x+1) − ln x keeps the Lanczos core in its sweet spot.
pub(crate) fn ln_gamma_dd(x: DoubleDouble) -> DoubleDouble {
    debug_assert!(x.hi > 0.0);
    if x.hi < 0.5 {
        return ln_gamma_dd(x.add_f64(1.0)).sub(x.ln());
    }
    let wm1 = x.sub_f64(1.0);
    let mut acc = DoubleDouble::from_f64(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc.add(DoubleDouble::from_f64(c).div(wm1.add_f64(i as f64)));
    }
    let t = wm1.add_f64(LANCZOS_G + 0.5);
    DD_SQRT_2PI
        .ln()
        .add(wm1.add_f64(0.5).mul(t.ln()))
        .sub(t)
        .add(acc.ln())
}

/// Principal-value Γ(w) with relative error ≲ 1e-12 for |w| <= 50.
///
/// # Errors
/// - pole at a non-positive integer
/// - overflow for Re(w) large enough that Γ exceeds f64 range
pub fn gamma_complex(w: Complex64) -> Result<Complex64> {
    if !w.re.is_finite() || !w.im.is_finite() {
        return Err(SpecialError::InvalidInput("gamma argument must be finite"));
    }
    if is_non_positive_integer(w) {
        return Err(SpecialError::Domain("gamma pole at non-positive integer"));
    }
    if w.im == 0.0 && w.re > OVERFLOW_RE {
        return Err(SpecialError::Range("gamma overflow for large real argument"));
    }
    let g = gamma_ddc(DdComplex::from_c64(w)).to_c64();
    if !g.re.is_finite() || !g.im.is_finite() {
        return Err(SpecialError::Range("gamma overflow"));
    }
    Ok(g)
}

/// |Γ(l+1+iσ)|, the modulus needed by the Coulomb normalization. The two
/// sign choices of iσ are complex conjugates, so the modulus is the same
/// for both; this is asserted in debug builds.
pub fn abs_gamma_shifted(l: u32, sigma: f64) -> f64 {
    let m = abs_gamma_shifted_dd(l, sigma).to_f64();
    debug_assert!({
        let m_neg = gamma_ddc(DdComplex::from_f64s(f64::from(l) + 1.0, -sigma))
            .abs()
            .to_f64();
        (m - m_neg).abs() <= 1e-14 * m.abs().max(1.0)
    });
    m
}

pub(crate) fn abs_gamma_shifted_dd(l: u32, sigma: f64) -> DoubleDouble {
    gamma_ddc(DdComplex::from_f64s(f64::from(l) + 1.0, sigma)).abs()
}
