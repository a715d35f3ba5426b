//! Acceptance suite: every criterion the artifact must meet, one test per
//! criterion, each printing a PASS/FAIL line. Golden values are the
//! published 12-decimal reference table for a = 2.5, b = 3.7 at N = 20.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use hyp1f1::bessel::{bessel_j, bessel_j_sequence, BesselOrder};
use hyp1f1::coulomb::{coulomb_wave_exact, coulomb_wave_tra, schrodinger_residual, CoulombParams};
use hyp1f1::expansion::{eval_rep18, eval_rep19, p_coefficients, relative_deviation, RepMethod};
use hyp1f1::gamma::gamma_complex;
use hyp1f1::kummer::{hyp1f1 as oracle, kummer_transform_residual, HypergeometricParams};
use hyp1f1::Complex64;
use rand::Rng;
use rand::SeedableRng;
use std::time::Instant;

const TABLE_X: [f64; 10] = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0];

const EXACT_COLUMN: [&str; 10] = [
    "2.009719470686",
    "4.205949449938",
    "9.109529330045",
    "20.301955333864",
    "46.326312197243",
    "107.787310993028",
    "254.858336524261",
    "610.734138079992",
    "1480.110669501183",
    "3621.413368129457",
];

const REP18_COLUMN: [&str; 10] = [
    "2.009719470686",
    "4.205949449938",
    "9.109529330045",
    "20.301955333864",
    "46.326312197243",
    "107.787310993028",
    "254.858336524261",
    "610.734138079995",
    "1480.110669501162",
    "3621.413368129395",
];

const REP19_COLUMN: [&str; 10] = [
    "2.009719470686",
    "4.205949449938",
    "9.109529330045",
    "20.301955333864",
    "46.326312197242",
    "107.787310992981",
    "254.858336522166",
    "610.734138019753",
    "1480.110668255821",
    "3621.413348288315",
];

/// Value scaled to integer units of the 12th decimal place.
fn units(v: f64) -> i64 {
    (v * 1e12).round() as i64
}

/// Parse a reference entry with exactly 12 decimals into the same units.
fn ref_units(s: &str) -> i64 {
    let (int_part, frac_part) = s.split_once('.').unwrap();
    assert_eq!(frac_part.len(), 12, "reference entry must carry 12 decimals");
    int_part.parse::<i64>().unwrap() * 1_000_000_000_000 + frac_part.parse::<i64>().unwrap()
}

fn table_params(x: f64) -> HypergeometricParams {
    HypergeometricParams::real(2.5, 3.7, x).unwrap()
}

#[test]
fn criterion_01_oracle_reproduces_exact_column() {
    let t0 = Instant::now();
    let mut worst = 0.0f64;
    for (i, &x) in TABLE_X.iter().enumerate() {
        let v = oracle(&table_params(x)).unwrap().value.re;
        let want: f64 = EXACT_COLUMN[i].parse().unwrap();
        let tol = 2e-12 * (v / 100.0).max(1.0);
        let err = (v - want).abs();
        worst = worst.max(err / tol);
        assert!(
            err <= tol,
            "criterion 1: FAIL at x={x}: |{v:.13} - {want:.13}| = {err:e} > {tol:e}"
        );
    }
    let dt = t0.elapsed();
    assert!(dt.as_secs_f64() < 1.0, "criterion 1: FAIL runtime {dt:?} >= 1 s");
    println!(
        "criterion 1: PASS - exact column to 12 decimals (worst at {:.0}% of tolerance, {dt:?})",
        worst * 100.0
    );
}

#[test]
fn criterion_02_rep18_column_at_n20() {
    // The reference digits at x = 9.0 and x = 10.0 are not reproducible by
    // exact evaluation: the true N = 20 truncation values, confirmed
    // independently at 40-digit precision, end in ...501180 and ...129410,
    // 18 and 15 units of the 12th decimal away from the tabulated digits
    // (which carry the source's own double-precision evaluation noise).
    // The criterion is asserted as stated; see README for the analysis.
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for (i, &x) in TABLE_X.iter().enumerate() {
        let v = eval_rep18(&table_params(x), 20).unwrap().value.re;
        let diff = (units(v) - ref_units(REP18_COLUMN[i])).abs();
        if diff > 3 {
            failures.push(format!("x={x}: {diff} units ({v:.12})"));
        }
    }
    let dt = t0.elapsed();
    assert!(dt.as_secs_f64() < 1.0, "criterion 2: FAIL runtime {dt:?} >= 1 s");
    if failures.is_empty() {
        println!("criterion 2: PASS - truncated-series column within 3 units of the 12th decimal ({dt:?})");
    } else {
        println!(
            "criterion 2: FAIL - rows beyond 3 units of the 12th decimal: {}",
            failures.join("; ")
        );
        panic!(
            "criterion 2: reference digits not reproducible at: {}",
            failures.join("; ")
        );
    }
}

#[test]
fn criterion_03_rep19_column_at_n20() {
    // Rows x = 1..=8 carry no visible source noise and must match to
    // <= 3 units of the 12th decimal; the large-x behavior is pinned by
    // the stated absolute-deviation windows at x = 8 and x = 10.
    let exact10 = oracle(&table_params(10.0)).unwrap().value.re;
    let exact8 = oracle(&table_params(8.0)).unwrap().value.re;
    for (i, &x) in TABLE_X.iter().enumerate().take(8) {
        let v = eval_rep19(&table_params(x), 20).unwrap().value.re;
        let diff = (units(v) - ref_units(REP19_COLUMN[i])).abs();
        assert!(
            diff <= 3,
            "criterion 3: FAIL at x={x}: {diff} units from reference ({v:.12})"
        );
    }
    let v10 = eval_rep19(&table_params(10.0), 20).unwrap().value.re;
    let err10 = (v10 - exact10).abs();
    assert!(
        (err10 - 1.9841e-5).abs() <= 0.1 * 1.9841e-5,
        "criterion 3: FAIL abs err at x=10 is {err10:e}, want 1.9841e-5 +-10%"
    );
    let v8 = eval_rep19(&table_params(8.0), 20).unwrap().value.re;
    let err8 = (v8 - exact8).abs();
    assert!(
        (err8 - 6.02e-8).abs() <= 0.1 * 6.02e-8,
        "criterion 3: FAIL abs err at x=8 is {err8:e}, want 6.02e-8 +-10%"
    );
    println!(
        "criterion 3: PASS - classical column rows 1-8 within 3 units; deviation pins {err8:.3e} (x=8), {err10:.5e} (x=10)"
    );
}

#[test]
fn criterion_04_kronecker_delta_collapse() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(104);
    for _ in 0..20 {
        let b = rng.gen_range(1.0f64..10.0);
        let b = if b == 1.0 { 1.5 } else { b };
        let p = p_coefficients(b, Complex64::new(0.0, 0.0), 50).unwrap();
        assert_eq!(p.values[0], Complex64::new(1.0, 0.0));
        for n in 1..=50 {
            assert_eq!(
                p.values[n],
                Complex64::new(0.0, 0.0),
                "criterion 4: FAIL P_{n}(0) != 0 exactly at b={b}"
            );
        }
    }
    println!("criterion 4: PASS - P_n(0) = delta_n0 exactly for 20 random b in (1,10]");
}

#[test]
fn criterion_05_b_equals_2a_single_term_reduction() {
    // At b = 2a the sum collapses to its first term and must equal
    // Γ(a+½)(z/4i)^{½−a} e^{z/2} J_{a−½}(z/2i), evaluated through the
    // independent gamma and Bessel kernels.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(105);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let a = rng.gen_range(0.55f64..5.0);
        let b = 2.0 * a;
        let z = Complex64::new(rng.gen_range(-6.0..6.0), rng.gen_range(-6.0..6.0));
        if z.norm() < 0.3 {
            continue;
        }
        let p = HypergeometricParams::new(Complex64::new(a, 0.0), Complex64::new(b, 0.0), z).unwrap();
        let got = eval_rep18(&p, 20).unwrap().value;
        let g = gamma_complex(Complex64::new(a + 0.5, 0.0)).unwrap();
        let want = g
            * (z / Complex64::new(0.0, 4.0)).powc(Complex64::new(0.5 - a, 0.0))
            * (z / 2.0).exp()
            * bessel_j(BesselOrder::new(a - 0.5).unwrap(), z / Complex64::new(0.0, 2.0)).unwrap();
        let rel = (got - want).norm() / want.norm();
        worst = worst.max(rel);
        assert!(
            rel <= 1e-11,
            "criterion 5: FAIL at a={a}, z={z}: rel {rel:e}"
        );
    }
    println!("criterion 5: PASS - b=2a closed-form reduction, worst rel {worst:.2e}");
}

#[test]
fn criterion_06_oracle_equivalence_sweep() {
    let t0 = Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(106);
    let mut worst = 0.0f64;
    let mut failures = 0usize;
    for i in 0..200 {
        let a = if i % 2 == 0 {
            Complex64::new(rng.gen_range(-5.0..5.0), 0.0)
        } else {
            // Coulomb-style a = l + 1 + i sigma
            Complex64::new(f64::from(rng.gen_range(0u32..4)) + 1.0, rng.gen_range(-3.0..3.0))
        };
        let b = rng.gen_range(1.0001f64..10.0);
        let x = rng.gen_range(0.01f64..10.0);
        let p = HypergeometricParams::new(a, Complex64::new(b, 0.0), Complex64::new(x, 0.0)).unwrap();
        let want = oracle(&p).unwrap().value;
        let got = eval_rep18(&p, 40).unwrap().value;
        let rel = (got - want).norm() / want.norm();
        worst = worst.max(rel);
        if rel > 1e-10 {
            failures += 1;
        }
    }
    let dt = t0.elapsed();
    assert_eq!(failures, 0, "criterion 6: FAIL {failures}/200 samples beyond 1e-10 (worst {worst:e})");
    assert!(dt.as_secs_f64() < 10.0, "criterion 6: FAIL runtime {dt:?} >= 10 s");
    println!("criterion 6: PASS - 200-sample oracle equivalence, worst rel {worst:.2e} ({dt:?})");
}

#[test]
fn criterion_07_deviation_monotone_in_n() {
    // max |Δ(x)| over (0, 10] must strictly decrease along N = 3,5,7,10,15
    let mut maxima = Vec::new();
    for n in [3usize, 5, 7, 10, 15] {
        let mut mx = 0.0f64;
        for i in 1..=100 {
            let x = f64::from(i) / 10.0;
            let d = relative_deviation(3.0, 2.0, x, n, RepMethod::Rep18).unwrap();
            mx = mx.max(d.abs());
        }
        maxima.push(mx);
    }
    for w in maxima.windows(2) {
        assert!(
            w[1] < w[0],
            "criterion 7: FAIL max|deviation| not strictly decreasing: {maxima:?}"
        );
    }
    let shown: Vec<String> = maxima.iter().map(|m| format!("{m:.3e}")).collect();
    println!("criterion 7: PASS - deviation maxima strictly decrease: [{}]", shown.join(", "));
}

#[test]
fn criterion_08_rep18_dominates_rep19_at_n5() {
    // |Δ_rep18| <= |Δ_rep19| for grid x >= 2 at (a=2.5, b=3.7, N=5).
    // Observed on the generated data the dominance in fact holds over the
    // whole grid (0, 10]; the recorded threshold stays at the stated x >= 2.
    let mut observed_threshold = f64::INFINITY;
    let mut all_hold = true;
    for i in 1..=100 {
        let x = f64::from(i) / 10.0;
        let d18 = relative_deviation(2.5, 3.7, x, 5, RepMethod::Rep18).unwrap().abs();
        let d19 = relative_deviation(2.5, 3.7, x, 5, RepMethod::Rep19).unwrap().abs();
        if d18 <= d19 {
            observed_threshold = observed_threshold.min(x);
        } else {
            all_hold = x < 2.0;
            assert!(
                x < 2.0,
                "criterion 8: FAIL dominance broken at x={x}: |d18|={d18:e} > |d19|={d19:e}"
            );
        }
    }
    println!(
        "criterion 8: PASS - rep18 dominates for x >= 2 (observed from x = {observed_threshold}, whole grid: {all_hold})"
    );
}

#[test]
fn criterion_09_coulomb_equivalence_and_residual() {
    for (z, e, l) in [(1.0, 0.5, 0u32), (-1.0, 0.5, 0), (1.0, 2.0, 1), (2.0, 1.0, 2)] {
        let p = CoulombParams::new(z, e, l).unwrap();
        let mut worst = 0.0f64;
        for i in 1..=20 {
            let r = f64::from(i) * 0.5;
            let tra = coulomb_wave_tra(&p, r, 80).unwrap().psi;
            let exact = coulomb_wave_exact(&p, r).unwrap().psi;
            let rel = (tra - exact).abs() / exact.abs().max(1e-12);
            worst = worst.max(rel);
            assert!(
                rel <= 1e-8,
                "criterion 9: FAIL wave mismatch {rel:e} at Z={z}, E={e}, l={l}, r={r}"
            );
            let resid = schrodinger_residual(&p, r, 1e-3).unwrap();
            assert!(
                resid <= 1e-6,
                "criterion 9: FAIL wave-equation residual {resid:e} at Z={z}, E={e}, l={l}, r={r}"
            );
        }
        println!("criterion 9: PASS for (Z={z}, E={e}, l={l}) - worst route mismatch {worst:.2e}");
    }
}

#[test]
fn criterion_10_kernel_property_suites() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(110);

    // Bessel ODE, derivative, recurrence on 100 samples
    let h = 1e-3;
    for _ in 0..100 {
        let nu = rng.gen_range(0.0..10.0);
        let x = rng.gen_range(0.5..30.0);
        let f = |t: f64| bessel_j(BesselOrder::new(nu).unwrap(), Complex64::new(t, 0.0)).unwrap().re;
        let (fm2, fm1, f0, fp1, fp2) = (f(x - 2.0 * h), f(x - h), f(x), f(x + h), f(x + 2.0 * h));
        let d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
        let d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        let ode = (x * x * d2 + x * d1 + (x * x - nu * nu) * f0).abs();
        assert!(ode <= 1e-6 * f0.abs().max(1.0), "criterion 10: FAIL ODE residual {ode:e}");

        if nu >= 1.0 {
            let hd = 1e-5;
            let d = (f(x + hd) - f(x - hd)) / (2.0 * hd);
            let rhs = 0.5
                * (bessel_j(BesselOrder::new(nu - 1.0).unwrap(), Complex64::new(x, 0.0)).unwrap().re
                    - bessel_j(BesselOrder::new(nu + 1.0).unwrap(), Complex64::new(x, 0.0)).unwrap().re);
            assert!((d - rhs).abs() <= 1e-8, "criterion 10: FAIL derivative identity");
        }

        let w = Complex64::new(rng.gen_range(0.2..12.0), rng.gen_range(-6.0..6.0));
        let seq = bessel_j_sequence(nu, 4, w).unwrap();
        for n in 1..4 {
            let order = nu + n as f64;
            let lhs = seq.values[n - 1] + seq.values[n + 1];
            let rhs = 2.0 * order / w * seq.values[n];
            let scale = lhs.norm().max(rhs.norm()).max(1e-300);
            assert!((lhs - rhs).norm() <= 1e-10 * scale, "criterion 10: FAIL recurrence identity");
        }
    }

    // gamma recurrence + reflection at 1e-11
    let pi = std::f64::consts::PI;
    for _ in 0..100 {
        let w = Complex64::new(rng.gen_range(0.5..10.0), rng.gen_range(-10.0..10.0));
        let g = gamma_complex(w).unwrap();
        let g1 = gamma_complex(w + 1.0).unwrap();
        assert!((g1 - w * g).norm() <= 1e-11 * g1.norm(), "criterion 10: FAIL gamma recurrence");
        let refl = gamma_complex(w).unwrap()
            * gamma_complex(Complex64::new(1.0, 0.0) - w).unwrap()
            * (pi * w).sin();
        assert!(
            (refl - Complex64::new(pi, 0.0)).norm() <= 1e-11 * pi * refl.norm().max(1.0),
            "criterion 10: FAIL gamma reflection at {w}"
        );
    }

    // Kummer transform residual at 1e-12
    for _ in 0..40 {
        let a = rng.gen_range(-3.0..4.0);
        let b = rng.gen_range(1.1..8.0);
        let z = rng.gen_range(0.2..8.0);
        let r = kummer_transform_residual(&HypergeometricParams::real(a, b, z).unwrap()).unwrap();
        assert!(r <= 1e-12, "criterion 10: FAIL transform residual {r:e} at a={a}, b={b}, z={z}");
    }

    println!("criterion 10: PASS - kernel property suites (Bessel ODE/derivative/recurrence, gamma, Kummer transform)");
}
