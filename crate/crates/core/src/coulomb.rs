//! Continuum Coulomb scattering wavefunctions.
//!
//! The radial Schrödinger equation (atomic units)
//!
//! ```text
//! [ −½ d²/dr² + ℓ(ℓ+1)/2r² + Z/r ] ψ(r) = E ψ(r),   E > 0,
//! ```
//!
//! is solved two ways and cross-checked:
//!
//! - [`coulomb_wave_tra`]: the Bessel-basis series
//!   `ψ(r) = f₀(E) √(kr) Σ_n P_n(4σ) J_{n+ℓ+½}(kr)` whose coefficients
//!   satisfy the same three-term recursion as the expansion module with
//!   b = 2ℓ+2, y = 4σ (here the recursion argument is real, so every
//!   P_n is real);
//! - [`coulomb_wave_exact`]: the closed form
//!   `ψ(r) = [2^ℓ e^{−πσ/2}/Γ(2ℓ+2)] |Γ(ℓ+1+iσ)| (kr)^{ℓ+1}
//!           Re[e^{ikr} ₁F₁(ℓ+1+iσ; 2ℓ+2; −2ikr)]`
//!   (Abramowitz-Stegun 14.1; the two sign choices inside are complex
//!   conjugates, so the product is real up to roundoff — asserted, then
//!   the real part is returned).
//!
//! [`schrodinger_residual`] plugs the closed form back into the wave
//! equation through a 5-point finite-difference stencil.

use crate::bessel::bessel_j_dd_real;
use crate::error::{Result, SpecialError};
use crate::expansion::p_coeffs_dd_real;
use crate::gamma::{abs_gamma_shifted_dd, gamma_dd, gamma_ddc};
use crate::kummer;
use crate::scalar::cdd::DdComplex;
use crate::scalar::dd::{DoubleDouble, DD_PI, DD_ZERO};

/// Largest kr accepted (the Bessel kernel's desk-scale bound).
const MAX_KR: f64 = 60.0;
/// Cap on the Bessel-basis truncation order.
const MAX_TRA_TERMS: usize = 200;

/// Scattering-state parameters: charge Z, energy E > 0, angular momentum ℓ
/// (atomic units), with the derived wavenumber k = √(2E) and Sommerfeld
/// parameter σ = Z/k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombParams {
    charge: f64,
    energy: f64,
    l: u32,
}

impl CoulombParams {
    pub fn new(charge: f64, energy: f64, l: u32) -> Result<Self> {
        if !charge.is_finite() || !energy.is_finite() {
            return Err(SpecialError::InvalidInput("coulomb parameters must be finite"));
        }
        if energy <= 0.0 {
            return Err(SpecialError::Domain("continuum scattering requires E > 0"));
        }
        if l > 50 {
            return Err(SpecialError::Domain("angular momentum above supported maximum l = 50"));
        }
        Ok(Self { charge, energy, l })
    }

    pub fn charge(&self) -> f64 {
        self.charge
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Wavenumber k = √(2E).
    pub fn k(&self) -> f64 {
        self.k_dd().to_f64()
    }

    /// Sommerfeld parameter σ = Z/k.
    pub fn sigma(&self) -> f64 {
        self.sigma_dd().to_f64()
    }

    fn k_dd(&self) -> DoubleDouble {
        DoubleDouble::from_f64(2.0 * self.energy).sqrt()
    }

    fn sigma_dd(&self) -> DoubleDouble {
        DoubleDouble::from_f64(self.charge).div(self.k_dd())
    }
}

/// Which route produced a wavefunction sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveMethod {
    Tra,
    Exact,
}

/// One sampled wavefunction value ψ(r).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSample {
    pub r: f64,
    pub psi: f64,
    pub method: WaveMethod,
}

/// Recursion inputs of the Bessel-basis solution: αₙ = −4σ and
/// γₙ = (n+ν) − (ℓ+½)²/(n+ν) with ν = ℓ+½. Exists to let tests verify
/// that the generic three-term machinery reproduces exactly this
/// recursion at b = 2ℓ+2, y = 4σ.
pub fn tra_coefficients(n: u32, l: u32, sigma: f64) -> (f64, f64) {
    let alpha = -4.0 * sigma;
    let nu = f64::from(l) + 0.5;
    let n_nu = f64::from(n) + nu;
    let gamma = n_nu - nu * nu / n_nu;
    (alpha, gamma)
}

/// Energy normalization f₀(E) = √(π/2)/Γ(ℓ+1) · e^{−πσ/2} · |Γ(ℓ+1+iσ)|.
pub fn f0_norm(p: &CoulombParams) -> f64 {
    f0_norm_dd(p).to_f64()
}

fn f0_norm_dd(p: &CoulombParams) -> DoubleDouble {
    let sigma = p.sigma_dd();
    let l1 = f64::from(p.l) + 1.0;
    let front = DD_PI.mul_f64(0.5).sqrt().div(gamma_dd(DoubleDouble::from_f64(l1)));
    let damp = DD_PI.mul(sigma).mul_f64(-0.5).exp();
    let modulus = gamma_ddc(DdComplex::new(DoubleDouble::from_f64(l1), sigma)).abs();
    front.mul(damp).mul(modulus)
}

fn check_radius(p: &CoulombParams, r: f64) -> Result<DoubleDouble> {
    if !r.is_finite() || r <= 0.0 {
        return Err(SpecialError::Domain("radial coordinate must satisfy r > 0"));
    }
    let kr = p.k_dd().mul_f64(r);
    if kr.hi > MAX_KR {
        return Err(SpecialError::Domain("kr above desk-scale maximum 60"));
    }
    Ok(kr)
}

/// Truncation heuristic for the Bessel-basis series: N ≈ max(40, 2kr + 20).
pub fn recommended_n_terms(p: &CoulombParams, r: f64) -> usize {
    let kr = p.k() * r;
    (2.0 * kr + 20.0).ceil().max(40.0) as usize
}

/// ψ(r) by the Bessel-basis series, truncated after n = `n_terms`.
pub fn coulomb_wave_tra(p: &CoulombParams, r: f64, n_terms: usize) -> Result<WaveSample> {
    let kr = check_radius(p, r)?;
    if n_terms > MAX_TRA_TERMS {
        return Err(SpecialError::Domain("Bessel-basis truncation above N = 200"));
    }
    let b = 2.0 * f64::from(p.l) + 2.0;
    let y = p.sigma_dd().mul_f64(4.0);
    let coeffs = p_coeffs_dd_real(b, y, n_terms)?;
    let nu0 = DoubleDouble::from_f64(f64::from(p.l) + 0.5);
    let mut sum = DD_ZERO;
    for (n, pn) in coeffs.iter().enumerate() {
        let jn = bessel_j_dd_real(nu0.add_f64(n as f64), kr)?;
        sum = sum.add(pn.mul(jn));
    }
    let psi = f0_norm_dd(p).mul(kr.sqrt()).mul(sum).to_f64();
    if !psi.is_finite() {
        return Err(SpecialError::Range("Bessel-basis wavefunction overflowed"));
    }
    Ok(WaveSample { r, psi, method: WaveMethod::Tra })
}

/// ψ(r) by the closed form in terms of ₁F₁.
pub fn coulomb_wave_exact(p: &CoulombParams, r: f64) -> Result<WaveSample> {
    let kr = check_radius(p, r)?;
    let sigma = p.sigma_dd();
    let l1 = f64::from(p.l) + 1.0;
    let a = DdComplex::new(DoubleDouble::from_f64(l1), sigma);
    let b = DdComplex::from_f64s(2.0 * f64::from(p.l) + 2.0, 0.0);
    let z = DdComplex::new(DD_ZERO, kr.mul_f64(-2.0));
    let (f, _, _) = kummer::hyp1f1_ddc(a, b, z, kummer::DEFAULT_TOL, kummer::DEFAULT_MAX_TERMS)?;
    // e^{ikr} · ₁F₁(...): the two sign choices are conjugates, so this
    // product must be real; assert and discard the imaginary part.
    let bracket = DdComplex::new(DD_ZERO, kr).exp().mul(f);
    let mag = bracket.abs().to_f64();
    if bracket.im.to_f64().abs() > 1e-10 * mag.max(f64::MIN_POSITIVE) {
        return Err(SpecialError::Internal(
            "closed-form bracket acquired a non-negligible imaginary part",
        ));
    }
    let pref = DoubleDouble::from_f64(2.0f64.powi(p.l as i32))
        .div(gamma_dd(DoubleDouble::from_f64(2.0 * f64::from(p.l) + 2.0)))
        .mul(DD_PI.mul(sigma).mul_f64(-0.5).exp())
        .mul(abs_gamma_shifted_dd(p.l, sigma.to_f64()))
        .mul(kr.pow(DoubleDouble::from_f64(l1)));
    let psi = pref.mul(bracket.re).to_f64();
    if !psi.is_finite() {
        return Err(SpecialError::Range("closed-form wavefunction overflowed"));
    }
    Ok(WaveSample { r, psi, method: WaveMethod::Exact })
}

/// Normalized wave-equation residual
/// `|−½ψ″ + (ℓ(ℓ+1)/2r² + Z/r − E)ψ| / max(1, |Eψ|)` with ψ″ from a
/// 5-point central stencil over [`coulomb_wave_exact`].
pub fn schrodinger_residual(p: &CoulombParams, r: f64, h: f64) -> Result<f64> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(SpecialError::InvalidInput("stencil step must be positive"));
    }
    if r - 2.0 * h <= 0.0 {
        return Err(SpecialError::Domain("stencil requires r - 2h > 0"));
    }
    let psi = |rr: f64| coulomb_wave_exact(p, rr).map(|s| s.psi);
    let (fm2, fm1, f0, fp1, fp2) = (
        psi(r - 2.0 * h)?,
        psi(r - h)?,
        psi(r)?,
        psi(r + h)?,
        psi(r + 2.0 * h)?,
    );
    let d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    let l = f64::from(p.l);
    let potential = l * (l + 1.0) / (2.0 * r * r) + p.charge / r - p.energy;
    let residual = (-0.5 * d2 + potential * f0).abs();
    Ok(residual / (p.energy * f0).abs().max(1.0))
}
