//! Bessel-series representations of ₁F₁ and their coefficient recursions.
//!
//! Two expansions of the same function are implemented side by side.
//!
//! The tridiagonal-recursion form,
//!
//! ```text
//! ₁F₁(a;b;z) = 2^ν Γ(ν+1) e^{z/2} (iz/2)^{−ν} Σ_n P_n(y) J_{n+ν}(iz/2),
//! ν = (b−1)/2,  y = 2i(b−2a),
//! y P_n = c⁺_n P_{n+1} + c⁻_n P_{n−1},   P_0 = 1, P_{−1} = 0,
//! ```
//!
//! and the classical form (Magnus-Oberhettinger-Soni p. 284),
//!
//! ```text
//! ₁F₁(a;b;z) = 2^{b−1} Γ(b) e^{z/2} (2μz)^{(1−b)/2}
//!              Σ_n R_n (2μz)^{n/2} J_{n+b−1}(√(2μz)),   μ = b − 2a,
//! 4μ²(n+1) R_{n+1} = (n+b−1) R_{n−1} − ½ R_{n−2}.
//! ```
//!
//! The recursion coefficients are evaluated in the factored form
//! `c⁺_n = 2(n+1)(n+b)/(2n+b+1)`, `c⁻_n = 2(n−1)(n+b−2)/(2n+b−3)`, which
//! is algebraically identical to the defining differences but makes
//! `c⁻_1 = 0` exact in floating point; together with the zero seed this
//! yields the Kronecker-delta collapse `P_n(0) = δ_{n0}` as exact zeros.
//!
//! Every fractional power takes the principal branch, and the `(2μz)^{n/2}`
//! ladder in the classical form is built by repeated multiplication with
//! the one principal square root that also feeds the Bessel argument, so
//! the two can never land on different sheets. Branch correctness overall
//! is certified by the oracle-equivalence tests rather than symbolically.

use num_complex::Complex64;

use crate::bessel::{bessel_i_dd, bessel_j_ddc};
use crate::error::{Result, SpecialError};
use crate::gamma::ln_gamma_dd;
use crate::kummer::{self, HypergeometricParams, SeriesResult};
use crate::scalar::cdd::{DdComplex, CDD_ONE, CDD_ZERO};
use crate::scalar::dd::{DoubleDouble, DD_LN2};

/// Cap on coefficient/recursion length and series truncation order.
pub const MAX_N: usize = 500;

/// Largest |z| the evaluators accept; keeps Bessel arguments inside the
/// range where extended accumulation retains full accuracy.
const MAX_Z: f64 = 50.0;

/// Relative level under which trailing terms mark a truncation as
/// converged in the reported metadata.
const REP_CONV_TOL: f64 = 1e-14;

/// Which representation a deviation measurement refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepMethod {
    Rep18,
    Rep19,
}

// ---------------------------------------------------------------------------
// coefficient recursions
// ---------------------------------------------------------------------------

/// Forward coefficient c⁺_n = 2(n+1)(n+b)/(2n+b+1) in factored form.
fn c_plus(n: usize, b: f64) -> DoubleDouble {
    let nf = n as f64;
    let num = DoubleDouble::from_sum(b, nf).mul_f64(2.0 * (nf + 1.0));
    num.div(DoubleDouble::from_sum(b, 2.0 * nf + 1.0))
}

/// Backward coefficient c⁻_n = 2(n−1)(n+b−2)/(2n+b−3); exactly zero at
/// n = 1. Only called for n >= 1.
fn c_minus(n: usize, b: f64) -> DoubleDouble {
    let nf = n as f64;
    let num = DoubleDouble::from_sum(b, nf - 2.0).mul_f64(2.0 * (nf - 1.0));
    num.div(DoubleDouble::from_sum(b, 2.0 * nf - 3.0))
}

fn check_p_domain(b: f64, n_max: usize) -> Result<()> {
    if !b.is_finite() {
        return Err(SpecialError::InvalidInput("b must be finite"));
    }
    if b <= 0.0 || b == 1.0 {
        return Err(SpecialError::Domain("P recursion requires b > 0 with b != 1"));
    }
    if n_max > MAX_N {
        return Err(SpecialError::Domain("coefficient order above n_max = 500"));
    }
    Ok(())
}

fn p_step(b: f64, y: DdComplex, values: &mut Vec<DdComplex>) -> Result<()> {
    let n = values.len() - 1;
    let cp = c_plus(n, b);
    if cp.hi == 0.0 {
        return Err(SpecialError::Internal("P recursion forward coefficient vanished"));
    }
    let back = if n == 0 { CDD_ZERO } else { values[n - 1].mul_dd(c_minus(n, b)) };
    let next = y.mul(values[n]).sub(back).div_dd(cp);
    values.push(next);
    Ok(())
}

/// Expansion coefficients P_0 … P_N for argument y, with the recursion
/// carried in double-double precision.
#[derive(Debug, Clone)]
pub struct PCoefficients {
    pub b: f64,
    pub y: Complex64,
    pub values: Vec<Complex64>,
    dd: Vec<DdComplex>,
}

impl PCoefficients {
    /// Highest computed index N.
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// Append-only extension to a larger N; existing prefixes are reused,
    /// never recomputed.
    pub fn extend_to(&mut self, n_max: usize) -> Result<()> {
        if n_max > MAX_N {
            return Err(SpecialError::Domain("coefficient order above n_max = 500"));
        }
        let y = DdComplex::from_c64(self.y);
        while self.dd.len() <= n_max {
            p_step(self.b, y, &mut self.dd)?;
            self.values.push(self.dd[self.dd.len() - 1].to_c64());
        }
        Ok(())
    }

}

/// Solves the P recursion forward from P_0 = 1, P_{−1} = 0.
///
/// At n = 0 the backward term multiplies P_{−1} = 0 and is taken as an
/// exact zero without evaluating its coefficient, so b = 3 (where that
/// coefficient's denominator vanishes) is fine.
pub fn p_coefficients(b: f64, y: Complex64, n_max: usize) -> Result<PCoefficients> {
    check_p_domain(b, n_max)?;
    if !y.re.is_finite() || !y.im.is_finite() {
        return Err(SpecialError::InvalidInput("y must be finite"));
    }
    let dd = p_coeffs_ddc(b, DdComplex::from_c64(y), n_max)?;
    Ok(PCoefficients {
        b,
        y,
        values: dd.iter().map(|v| v.to_c64()).collect(),
        dd,
    })
}

pub(crate) fn p_coeffs_ddc(b: f64, y: DdComplex, n_max: usize) -> Result<Vec<DdComplex>> {
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(CDD_ONE);
    while values.len() <= n_max {
        p_step(b, y, &mut values)?;
    }
    Ok(values)
}

/// Real-valued P recursion (used on the Coulomb line where y = 4σ).
pub(crate) fn p_coeffs_dd_real(b: f64, y: DoubleDouble, n_max: usize) -> Result<Vec<DoubleDouble>> {
    let mut values: Vec<DoubleDouble> = Vec::with_capacity(n_max + 1);
    values.push(DoubleDouble::from_f64(1.0));
    for n in 0..n_max {
        let cp = c_plus(n, b);
        let back = if n == 0 {
            DoubleDouble::from_f64(0.0)
        } else {
            values[n - 1].mul(c_minus(n, b))
        };
        values.push(y.mul(values[n]).sub(back).div(cp));
    }
    Ok(values)
}

/// Phase-eliminated real coefficients q_n = P_n(y)/iⁿ for purely imaginary
/// y = i t: the recursion `t q_n = c⁺_n q_{n+1} − c⁻_n q_{n−1}` stays real.
fn q_coeffs_dd_real(b: f64, t: DoubleDouble, n_max: usize) -> Vec<DoubleDouble> {
    let mut values: Vec<DoubleDouble> = Vec::with_capacity(n_max + 1);
    values.push(DoubleDouble::from_f64(1.0));
    for n in 0..n_max {
        let cp = c_plus(n, b);
        let back = if n == 0 {
            DoubleDouble::from_f64(0.0)
        } else {
            values[n - 1].mul(c_minus(n, b))
        };
        values.push(t.mul(values[n]).add(back).div(cp));
    }
    values
}

/// Coefficients R_0 … R_N of the classical expansion.
#[derive(Debug, Clone)]
pub struct RCoefficients {
    pub b: f64,
    /// μ = b − 2a of the classical form (named to avoid collision with the
    /// basis exponent μ used elsewhere in the domain literature).
    pub mu19: Complex64,
    pub values: Vec<Complex64>,
}

impl RCoefficients {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }
}

/// Solves the R recursion forward from R_0 = 1, R_{−1} = R_{−2} = 0.
pub fn r_coefficients(b: f64, mu19: Complex64, n_max: usize) -> Result<RCoefficients> {
    if !b.is_finite() || !mu19.re.is_finite() || !mu19.im.is_finite() {
        return Err(SpecialError::InvalidInput("R recursion parameters must be finite"));
    }
    if mu19 == Complex64::new(0.0, 0.0) {
        return Err(SpecialError::Domain("R recursion requires mu = b - 2a != 0"));
    }
    if n_max > MAX_N {
        return Err(SpecialError::Domain("coefficient order above n_max = 500"));
    }
    let dd = r_coeffs_ddc(b, DdComplex::from_c64(mu19), n_max);
    Ok(RCoefficients {
        b,
        mu19,
        values: dd.iter().map(|v| v.to_c64()).collect(),
    })
}

pub(crate) fn r_coeffs_ddc(b: f64, mu: DdComplex, n_max: usize) -> Vec<DdComplex> {
    let mu2_4 = mu.mul(mu).mul_f64(4.0);
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(CDD_ONE);
    for n in 0..n_max {
        let rm1 = if n >= 1 { values[n - 1] } else { CDD_ZERO };
        let rm2 = if n >= 2 { values[n - 2] } else { CDD_ZERO };
        let num = rm1.mul_dd(DoubleDouble::from_sum(b, n as f64 - 1.0)).sub(rm2.mul_f64(0.5));
        values.push(num.div(mu2_4.mul_f64(n as f64 + 1.0)));
    }
    values
}

// ---------------------------------------------------------------------------
// series evaluators
// ---------------------------------------------------------------------------

fn require_real_b(p: &HypergeometricParams) -> Result<f64> {
    if p.b.im != 0.0 {
        return Err(SpecialError::Domain("representation evaluators require real b"));
    }
    Ok(p.b.re)
}

fn check_eval_common(z: Complex64, n_terms: usize) -> Result<()> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(SpecialError::Domain(
            "z = 0 is a removable singularity of the expansions; the limit is 1",
        ));
    }
    if z.norm() > MAX_Z {
        return Err(SpecialError::Domain("|z| above supported maximum 50"));
    }
    if n_terms > MAX_N {
        return Err(SpecialError::Domain("truncation order above N = 500"));
    }
    Ok(())
}

/// Truncation bookkeeping shared by the fixed-N evaluators: trailing-term
/// magnitudes decide the reported convergence flag.
struct TailWatch {
    last3: [f64; 3],
}

impl TailWatch {
    fn new() -> Self {
        Self { last3: [f64::INFINITY; 3] }
    }
    fn push(&mut self, mag: f64) {
        self.last3.rotate_left(1);
        self.last3[2] = mag;
    }
    fn converged(&self, sum_mag: f64) -> bool {
        self.last3.iter().all(|m| *m <= REP_CONV_TOL * sum_mag.max(f64::MIN_POSITIVE))
    }
}

pub(crate) struct RepEval {
    pub value: DdComplex,
    pub last_term_magnitude: f64,
    pub converged: bool,
}

/// Core of the tridiagonal-recursion representation for complex a, z.
pub(crate) fn eval_rep18_ddc(
    a: DdComplex,
    b: f64,
    z: DdComplex,
    n_terms: usize,
) -> Result<RepEval> {
    let b_dd = DoubleDouble::from_f64(b);
    let nu = b_dd.add_f64(-1.0).mul_f64(0.5);
    // y = 2i(b − 2a)
    let y = DdComplex::from_re(b_dd).sub(a.mul_f64(2.0)).mul_f64(2.0).mul_i();
    let coeffs = p_coeffs_ddc(b, y, n_terms)?;
    let w = z.mul_i().mul_f64(0.5); // iz/2
    let mut sum = CDD_ZERO;
    let mut watch = TailWatch::new();
    let mut last = 0.0;
    for (n, pn) in coeffs.iter().enumerate() {
        let jn = bessel_j_ddc(nu.add_f64(n as f64), w)?;
        let term = pn.mul(jn);
        sum = sum.add(term);
        last = term.abs_estimate();
        watch.push(last);
    }
    // prefactor 2^ν Γ((b+1)/2) e^{z/2} (iz/2)^{−ν}, assembled in log space
    let half_b1 = b_dd.add_f64(1.0).mul_f64(0.5);
    let ln_pref = DdComplex::from_re(nu.mul(DD_LN2).add(ln_gamma_dd(half_b1)))
        .add(z.mul_f64(0.5))
        .add(w.ln().mul_dd(nu).neg());
    let pref = ln_pref.exp();
    let scale = pref.abs_estimate();
    Ok(RepEval {
        value: pref.mul(sum),
        last_term_magnitude: last * scale,
        converged: watch.converged(sum.abs_estimate()),
    })
}

/// ₁F₁ as the Bessel sum of the tridiagonal recursion, truncated after
/// term n = `n_terms` (inclusive). Requires real b > 1 and z ≠ 0.
pub fn eval_rep18(p: &HypergeometricParams, n_terms: usize) -> Result<SeriesResult> {
    let b = require_real_b(p)?;
    if !(b > 1.0) {
        return Err(SpecialError::Domain("rep18 requires real b > 1 (basis order must be positive)"));
    }
    check_eval_common(p.z, n_terms)?;
    let ev = eval_rep18_ddc(DdComplex::from_c64(p.a), b, DdComplex::from_c64(p.z), n_terms)?;
    Ok(SeriesResult {
        value: ev.value.to_c64(),
        terms_used: n_terms + 1,
        last_term_magnitude: ev.last_term_magnitude,
        converged: ev.converged,
    })
}

/// Phase-eliminated form of [`eval_rep18`] for real parameters:
///
/// ```text
/// ₁F₁(a;b;x) = 2^ν Γ((b+1)/2) e^{x/2} (x/2)^{−ν} Σ (−1)ⁿ qₙ I_{n+ν}(x/2)
/// ```
///
/// with qₙ = P_n(y)/iⁿ real. Serves as the all-real dual route against the
/// complex-path evaluator.
pub fn eval_rep18_real_path(a: f64, b: f64, x: f64, n_terms: usize) -> Result<f64> {
    if !a.is_finite() || !b.is_finite() || !x.is_finite() {
        return Err(SpecialError::InvalidInput("real-path arguments must be finite"));
    }
    if !(b > 1.0) {
        return Err(SpecialError::Domain("rep18 requires real b > 1 (basis order must be positive)"));
    }
    if x <= 0.0 {
        return Err(SpecialError::Domain("real path requires x > 0"));
    }
    check_eval_common(Complex64::new(x, 0.0), n_terms)?;
    let b_dd = DoubleDouble::from_f64(b);
    let nu = b_dd.add_f64(-1.0).mul_f64(0.5);
    // y = i t with t = 2(b − 2a)
    let t = DoubleDouble::from_sum(b, -2.0 * a).mul_f64(2.0);
    let q = q_coeffs_dd_real(b, t, n_terms);
    let half = DoubleDouble::from_f64(x).mul_f64(0.5);
    let mut sum = DoubleDouble::from_f64(0.0);
    for (n, qn) in q.iter().enumerate() {
        let inx = bessel_i_dd(nu.add_f64(n as f64), half)?;
        let term = qn.mul(inx);
        sum = if n % 2 == 0 { sum.add(term) } else { sum.sub(term) };
    }
    let half_b1 = b_dd.add_f64(1.0).mul_f64(0.5);
    let ln_pref = nu
        .mul(DD_LN2)
        .add(ln_gamma_dd(half_b1))
        .add(half)
        .sub(nu.mul(half.ln()));
    Ok(ln_pref.exp().mul(sum).to_f64())
}

/// Core of the classical representation for complex a, z.
pub(crate) fn eval_rep19_ddc(
    a: DdComplex,
    b: f64,
    z: DdComplex,
    n_terms: usize,
) -> Result<RepEval> {
    let b_dd = DoubleDouble::from_f64(b);
    let mu = DdComplex::from_re(b_dd).sub(a.mul_f64(2.0));
    if mu.abs_estimate() == 0.0 {
        return Err(SpecialError::Domain("rep19 degenerates at b = 2a (mu = 0)"));
    }
    let coeffs = r_coeffs_ddc(b, mu, n_terms);
    let u = mu.mul(z).mul_f64(2.0); // 2μz
    let ln_u = u.ln();
    let root = ln_u.mul_f64(0.5).exp(); // the one principal sqrt(2μz)
    let bm1 = b_dd.add_f64(-1.0);
    let mut sum = CDD_ZERO;
    let mut pow = CDD_ONE; // (2μz)^{n/2} as root^n
    let mut watch = TailWatch::new();
    let mut last = 0.0;
    for (n, rn) in coeffs.iter().enumerate() {
        let jn = bessel_j_ddc(bm1.add_f64(n as f64), root)?;
        let term = rn.mul(pow).mul(jn);
        sum = sum.add(term);
        last = term.abs_estimate();
        watch.push(last);
        pow = pow.mul(root);
    }
    let ln_pref = DdComplex::from_re(bm1.mul(DD_LN2).add(ln_gamma_dd(b_dd)))
        .add(z.mul_f64(0.5))
        .add(ln_u.mul_dd(bm1.mul_f64(0.5)).neg());
    let pref = ln_pref.exp();
    Ok(RepEval {
        value: pref.mul(sum),
        last_term_magnitude: last * pref.abs_estimate(),
        converged: watch.converged(sum.abs_estimate()),
    })
}

/// ₁F₁ as the classical Bessel sum, truncated after term n = `n_terms`
/// (inclusive). Requires real b > 0, b ≠ 2a, z ≠ 0.
pub fn eval_rep19(p: &HypergeometricParams, n_terms: usize) -> Result<SeriesResult> {
    let b = require_real_b(p)?;
    if !(b > 0.0) {
        return Err(SpecialError::Domain("rep19 requires real b > 0"));
    }
    check_eval_common(p.z, n_terms)?;
    let mu = Complex64::new(b, 0.0) - 2.0 * p.a;
    if (2.0 * mu * p.z).norm() > 3600.0 {
        return Err(SpecialError::Domain("|2 mu z| above supported maximum 3600"));
    }
    let ev = eval_rep19_ddc(DdComplex::from_c64(p.a), b, DdComplex::from_c64(p.z), n_terms)?;
    Ok(SeriesResult {
        value: ev.value.to_c64(),
        terms_used: n_terms + 1,
        last_term_magnitude: ev.last_term_magnitude,
        converged: ev.converged,
    })
}

/// Signed relative deviation Δ(x) = (₁F₁ − F) / (₁F₁ + F) between the
/// oracle and a truncated representation, for real parameters.
pub fn relative_deviation(
    a: f64,
    b: f64,
    x: f64,
    n_terms: usize,
    method: RepMethod,
) -> Result<f64> {
    let p = HypergeometricParams::real(a, b, x)?;
    let (oracle, _, _) = kummer::hyp1f1_ddc(
        DdComplex::from_f64s(a, 0.0),
        DdComplex::from_f64s(b, 0.0),
        DdComplex::from_f64s(x, 0.0),
        kummer::DEFAULT_TOL,
        kummer::DEFAULT_MAX_TERMS,
    )?;
    let b_real = require_real_b(&p)?;
    check_eval_common(p.z, n_terms)?;
    let f = match method {
        RepMethod::Rep18 => {
            if !(b_real > 1.0) {
                return Err(SpecialError::Domain("rep18 requires real b > 1 (basis order must be positive)"));
            }
            eval_rep18_ddc(DdComplex::from_c64(p.a), b_real, DdComplex::from_c64(p.z), n_terms)?.value
        }
        RepMethod::Rep19 => eval_rep19_ddc(DdComplex::from_c64(p.a), b_real, DdComplex::from_c64(p.z), n_terms)?.value,
    };
    let num = oracle.sub(f);
    let den = oracle.add(f);
    if den.abs_estimate() == 0.0 {
        return Err(SpecialError::DegenerateDenominator("1F1 + F vanished in the deviation measure"));
    }
    let delta = num.div(den);
    if !delta.is_finite() {
        return Err(SpecialError::DegenerateDenominator("deviation measure is not finite"));
    }
    Ok(delta.re.to_f64())
}

/// Relative residual between the two representations' series (with their
/// prefactor ratio), at truncation N:
///
/// ```text
/// Σ P_n J_{n+(b−1)/2}(iz/2)
///   =? Γ(b)/Γ((b+1)/2) (−2iμ)^{(1−b)/2} Σ R_n (2μz)^{n/2} J_{n+b−1}(√(2μz))
/// ```
///
/// Both sides use principal branches; the identity closes on the positive
/// real z axis (where both representations are validated against the
/// oracle) and the residual is returned untouched elsewhere.
pub fn eq20_residual(a: Complex64, b: f64, z: Complex64, n_terms: usize) -> Result<f64> {
    if !(b > 1.0) {
        return Err(SpecialError::Domain("residual requires real b > 1"));
    }
    let mu_c = Complex64::new(b, 0.0) - 2.0 * a;
    if mu_c == Complex64::new(0.0, 0.0) {
        return Err(SpecialError::Domain("residual degenerates at b = 2a (mu = 0)"));
    }
    check_eval_common(z, n_terms)?;
    let b_dd = DoubleDouble::from_f64(b);
    let a_dd = DdComplex::from_c64(a);
    let z_dd = DdComplex::from_c64(z);
    let mu = DdComplex::from_re(b_dd).sub(a_dd.mul_f64(2.0));
    let nu = b_dd.add_f64(-1.0).mul_f64(0.5);

    let y = mu.mul_f64(2.0).mul_i();
    let pc = p_coeffs_ddc(b, y, n_terms)?;
    let w = z_dd.mul_i().mul_f64(0.5);
    let mut lhs = CDD_ZERO;
    for (n, pn) in pc.iter().enumerate() {
        lhs = lhs.add(pn.mul(bessel_j_ddc(nu.add_f64(n as f64), w)?));
    }

    let rc = r_coeffs_ddc(b, mu, n_terms);
    let u = mu.mul(z_dd).mul_f64(2.0);
    let ln_u = u.ln();
    let root = ln_u.mul_f64(0.5).exp();
    let bm1 = b_dd.add_f64(-1.0);
    let mut s = CDD_ZERO;
    let mut pow = CDD_ONE;
    for (n, rn) in rc.iter().enumerate() {
        s = s.add(rn.mul(pow).mul(bessel_j_ddc(bm1.add_f64(n as f64), root)?));
        pow = pow.mul(root);
    }
    let half_b1 = b_dd.add_f64(1.0).mul_f64(0.5);
    let factor = DdComplex::from_re(ln_gamma_dd(b_dd).sub(ln_gamma_dd(half_b1)))
        .add(mu.mul_i().mul_f64(-2.0).ln().mul_dd(bm1.mul_f64(0.5)).neg())
        .exp();
    let rhs = factor.mul(s);

    let num = lhs.sub(rhs).abs().to_f64();
    let den = lhs.abs().to_f64().max(rhs.abs().to_f64());
    if den == 0.0 {
        return Err(SpecialError::DegenerateDenominator("both sides of the residual vanished"));
    }
    Ok(num / den)
}
