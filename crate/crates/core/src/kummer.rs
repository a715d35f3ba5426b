//! Reference evaluation of the confluent hypergeometric function.
//!
//! The oracle sums the defining Kummer series
//!
//! ```text
//! ₁F₁(a; b; z) = Σ_n (a)_n / (b)_n · zⁿ / n!
//! ```
//!
//! with double-double accumulation and term ratios built from exact
//! two-sum shifts of the parameters, so each term carries ~1e-31 relative
//! error. For Re(z) < 0 the Kummer transformation
//! `₁F₁(a;b;z) = e^z ₁F₁(b−a;b;−z)` is applied first so the summed series
//! has no leading-digit cancellation.
//!
//! This module is deliberately independent of the Bessel-expansion
//! evaluators in [`crate::expansion`]; it shares no code path with them
//! beyond scalar arithmetic, which is what makes the equivalence tests
//! between the two meaningful.

use num_complex::Complex64;

use crate::error::{Result, SpecialError};
use crate::scalar::cdd::{DdComplex, CDD_ONE};

/// Default relative tolerance for the oracle; leaves ≥ 6 guard digits on
/// top of the 1e-12 absolute comparisons the golden tables need.
pub const DEFAULT_TOL: f64 = 1e-20;
/// Default term budget.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Parameter triple (a, b, z) for ₁F₁.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    pub a: Complex64,
    pub b: Complex64,
    pub z: Complex64,
}

impl HypergeometricParams {
    /// Validates that b is not a non-positive integer (series pole).
    pub fn new(a: Complex64, b: Complex64, z: Complex64) -> Result<Self> {
        if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()
            && z.re.is_finite() && z.im.is_finite())
        {
            return Err(SpecialError::InvalidInput("hypergeometric parameters must be finite"));
        }
        if b_is_pole(b) {
            return Err(SpecialError::Domain("b must not be a non-positive integer"));
        }
        Ok(Self { a, b, z })
    }

    pub fn real(a: f64, b: f64, z: f64) -> Result<Self> {
        Self::new(Complex64::new(a, 0.0), Complex64::new(b, 0.0), Complex64::new(z, 0.0))
    }
}

pub(crate) fn b_is_pole(b: Complex64) -> bool {
    b.im == 0.0 && b.re <= 0.0 && b.re == b.re.round()
}

/// Truncated-series outcome: the value, how many terms were summed, the
/// magnitude of the last included term, and whether the stopping rule
/// (three consecutive sub-tolerance terms) was met.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub last_term_magnitude: f64,
    pub converged: bool,
}

/// Raw Kummer sum, no transformation. Returns (sum, terms, last |t|, converged).
pub(crate) fn kummer_series_ddc(
    a: DdComplex,
    b: DdComplex,
    z: DdComplex,
    tol: f64,
    max_terms: usize,
) -> (DdComplex, usize, f64, bool) {
    let mut term = CDD_ONE;
    let mut sum = CDD_ONE;
    let mut quiet = 0usize;
    let mut n = 0usize;
    let mut last = 1.0f64;
    while n + 1 < max_terms {
        let nf = n as f64;
        // t_{n+1} = t_n (a+n)/(b+n) z/(n+1)
        term = term
            .mul(a.add_f64(nf))
            .div(b.add_f64(nf))
            .mul(z)
            .div_dd(crate::scalar::dd::DoubleDouble::from_f64(nf + 1.0));
        sum = sum.add(term);
        n += 1;
        last = term.abs_estimate();
        if last <= tol * sum.abs_estimate().max(f64::MIN_POSITIVE) {
            quiet += 1;
            if quiet >= 3 {
                return (sum, n + 1, last, true);
            }
        } else {
            quiet = 0;
        }
    }
    (sum, n + 1, last, false)
}

/// Oracle core in double-double precision, Kummer-transformed for
/// Re(z) < 0. Used directly by modules that keep the extended precision.
pub(crate) fn hyp1f1_ddc(
    a: DdComplex,
    b: DdComplex,
    z: DdComplex,
    tol: f64,
    max_terms: usize,
) -> Result<(DdComplex, usize, f64)> {
    let (value, terms, last, converged) = if z.re.hi < 0.0 {
        let (s, n, l, c) = kummer_series_ddc(b.sub(a), b, z.neg(), tol, max_terms);
        (z.exp().mul(s), n, l, c)
    } else {
        kummer_series_ddc(a, b, z, tol, max_terms)
    };
    if !converged {
        return Err(SpecialError::Convergence("kummer series exhausted its term budget"));
    }
    if !value.is_finite() {
        return Err(SpecialError::Range("kummer series overflowed"));
    }
    Ok((value, terms, last))
}

/// High-accuracy ₁F₁(a; b; z).
///
/// # Errors
/// - domain error if b is a non-positive integer
/// - invalid input for tolerances below 1e-25 or term budgets above 10⁴
/// - convergence error if the stopping rule is not met within `max_terms`
pub fn hyp1f1_oracle(p: &HypergeometricParams, tol: f64, max_terms: usize) -> Result<SeriesResult> {
    if b_is_pole(p.b) {
        return Err(SpecialError::Domain("b must not be a non-positive integer"));
    }
    if !(tol >= 1e-25) {
        return Err(SpecialError::InvalidInput("oracle tolerance must be >= 1e-25"));
    }
    if max_terms == 0 || max_terms > DEFAULT_MAX_TERMS {
        return Err(SpecialError::InvalidInput("oracle term budget must be in 1..=10000"));
    }
    let (value, terms_used, last_term_magnitude) = hyp1f1_ddc(
        DdComplex::from_c64(p.a),
        DdComplex::from_c64(p.b),
        DdComplex::from_c64(p.z),
        tol,
        max_terms,
    )?;
    Ok(SeriesResult {
        value: value.to_c64(),
        terms_used,
        last_term_magnitude,
        converged: true,
    })
}

/// Oracle with the default tolerance and term budget.
pub fn hyp1f1(p: &HypergeometricParams) -> Result<SeriesResult> {
    hyp1f1_oracle(p, DEFAULT_TOL, DEFAULT_MAX_TERMS)
}

/// Relative difference between the direct summation and the
/// Kummer-transformed route `e^z ₁F₁(b−a; b; −z)`; a self-consistency
/// probe of the oracle.
pub fn kummer_transform_residual(p: &HypergeometricParams) -> Result<f64> {
    if b_is_pole(p.b) {
        return Err(SpecialError::Domain("b must not be a non-positive integer"));
    }
    let a = DdComplex::from_c64(p.a);
    let b = DdComplex::from_c64(p.b);
    let z = DdComplex::from_c64(p.z);
    let (direct, _, _, c1) = kummer_series_ddc(a, b, z, DEFAULT_TOL, DEFAULT_MAX_TERMS);
    let (trans, _, _, c2) = kummer_series_ddc(b.sub(a), b, z.neg(), DEFAULT_TOL, DEFAULT_MAX_TERMS);
    if !c1 || !c2 {
        return Err(SpecialError::Convergence("kummer series exhausted its term budget"));
    }
    let trans = z.exp().mul(trans);
    let num = direct.sub(trans).abs().to_f64();
    let den = direct.abs().to_f64().max(trans.abs().to_f64());
    if den == 0.0 {
        return Err(SpecialError::DegenerateDenominator("both kummer routes returned zero"));
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle(a: f64, b: f64, z: f64) -> Complex64 {
        hyp1f1(&HypergeometricParams::real(a, b, z).unwrap()).unwrap().value
    }

    #[test]
    fn unit_at_zero_argument() {
        for a in [-3.0, 0.4, 7.7] {
            let v = oracle(a, 3.7, 0.0);
            assert_eq!(v, Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn equal_parameters_give_exponential() {
        let v = oracle(1.0, 1.0, 1.0);
        assert!((v.re - std::f64::consts::E).abs() < 1e-15);
        assert!(v.im.abs() < 1e-18);
    }

    #[test]
    fn golden_table_spot_values() {
        // 12-decimal reference values for a=2.5, b=3.7
        let v1 = oracle(2.5, 3.7, 1.0);
        assert!((v1.re - 2.009719470686).abs() <= 5e-13, "x=1: {}", v1.re);
        let v10 = oracle(2.5, 3.7, 10.0);
        assert!((v10.re - 3621.413368129457).abs() <= 2e-12 * 36.21, "x=10: {}", v10.re);
    }

    #[test]
    fn negative_argument_uses_transform_cleanly() {
        // Reference from a 50-digit evaluation.
        let v = oracle(2.5, 3.7, -5.0);
        assert!((v.re - 0.06550575808409952).abs() < 1e-16, "got {}", v.re);
    }

    // Reference values computed with mpmath at 50 significant digits.
    #[test]
    fn complex_reference_values() {
        let p = HypergeometricParams::new(
            Complex64::new(1.0, 1.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, -4.0),
        )
        .unwrap();
        let v = hyp1f1(&p).unwrap().value;
        let want = Complex64::new(-1.27002371187552, -2.775052437735373);
        assert!((v - want).norm() <= 1e-14 * want.norm());

        let p = HypergeometricParams::new(
            Complex64::new(1.2, -0.8),
            Complex64::new(2.6, 0.0),
            Complex64::new(1.5, 2.5),
        )
        .unwrap();
        let v = hyp1f1(&p).unwrap().value;
        let want = Complex64::new(1.9945614610387368, 3.046666658081745);
        assert!((v - want).norm() <= 1e-14 * want.norm());
    }

    #[test]
    fn transform_residual_examples() {
        let r = kummer_transform_residual(&HypergeometricParams::real(2.5, 3.7, 5.0).unwrap()).unwrap();
        assert!(r <= 1e-12, "residual {r:e}");
        let r = kummer_transform_residual(&HypergeometricParams::real(1.0, 1.0, -3.0).unwrap()).unwrap();
        assert!(r <= 1e-12, "residual {r:e}");
        // complex Coulomb-style parameters: a = l+1+iσ, b = 2l+2, z = −2ikr
        let p = HypergeometricParams::new(
            Complex64::new(1.0, 1.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, -4.0),
        )
        .unwrap();
        let r = kummer_transform_residual(&p).unwrap();
        assert!(r <= 1e-10, "complex residual {r:e}");
    }

    #[test]
    fn contiguous_relation() {
        // b F(a) − b F(a−1) − z F(a; b+1) = 0
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let a = rng.gen_range(-4.0..6.0);
            let b = rng.gen_range(0.3..9.0);
            let z = rng.gen_range(-8.0..9.0);
            let f = |aa: f64, bb: f64| oracle(aa, bb, z).re;
            let lhs = b * f(a, b) - b * f(a - 1.0, b) - z * f(a, b + 1.0);
            let scale = (b * f(a, b)).abs().max(1.0);
            assert!(lhs.abs() <= 1e-10 * scale, "contiguous relation at a={a}, b={b}, z={z}");
        }
    }

    #[test]
    fn derivative_is_shifted_function() {
        // d/dz F = (a/b) F(a+1; b+1; z) against central differences
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(22);
        let h = 1e-6;
        for _ in 0..25 {
            let a = rng.gen_range(0.3..5.0);
            let b = rng.gen_range(1.2..8.0);
            let z = rng.gen_range(0.1..8.0);
            let fd = (oracle(a, b, z + h).re - oracle(a, b, z - h).re) / (2.0 * h);
            let want = a / b * oracle(a + 1.0, b + 1.0, z).re;
            assert!((fd - want).abs() <= 1e-6 * want.abs().max(1.0));
        }
    }

    #[test]
    fn pole_and_budget_errors() {
        assert!(HypergeometricParams::real(1.0, 0.0, 1.0).is_err());
        assert!(HypergeometricParams::real(1.0, -2.0, 1.0).is_err());
        let p = HypergeometricParams::real(2.5, 3.7, 10.0).unwrap();
        assert!(matches!(
            hyp1f1_oracle(&p, 1e-20, 8),
            Err(SpecialError::Convergence(_))
        ));
        assert!(matches!(
            hyp1f1_oracle(&p, 1e-30, 100),
            Err(SpecialError::InvalidInput(_))
        ));
    }

    #[test]
    fn series_result_reports_convergence_metadata() {
        let p = HypergeometricParams::real(2.5, 3.7, 1.0).unwrap();
        let r = hyp1f1(&p).unwrap();
        assert!(r.converged);
        assert!(r.terms_used > 10 && r.terms_used < 200);
        assert!(r.last_term_magnitude <= 1e-20 * r.value.norm());
    }
}
