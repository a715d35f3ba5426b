//! Special-function library centered on the confluent hypergeometric
//! function ₁F₁(a; b; z).
//!
//! Three independent evaluation routes are provided and cross-checked:
//!
//! - [`kummer::hyp1f1_oracle`] — the defining power series with extended
//!   (double-double) accumulation and the Kummer transformation for
//!   Re(z) < 0; the reference every other route is measured against.
//! - [`expansion::eval_rep18`] — ₁F₁ as an infinite sum of Bessel
//!   functions J_{n+(b-1)/2}(iz/2) with coefficients P_n from a
//!   three-term recursion.
//! - [`expansion::eval_rep19`] — the classical Bessel-series expansion
//!   with coefficients R_n (see e.g. Magnus-Oberhettinger-Soni, p. 284).
//!
//! The [`coulomb`] module applies the same expansion machinery to the
//! continuum Coulomb scattering wavefunction and verifies it against the
//! closed form in terms of ₁F₁.
//!
//! Supporting kernels: [`scalar`] (double-double arithmetic and
//! compensated summation), [`gamma`] (complex gamma via Lanczos),
//! [`bessel`] (J_ν and I_ν by ascending series with extended
//! accumulation, plus a Miller-type backward-recurrence cross-check).

pub mod bessel;
pub mod coulomb;
pub mod error;
pub mod expansion;
pub mod gamma;
pub mod kummer;
pub mod scalar;

pub use error::{Result, SpecialError};

pub use num_complex::Complex64;
