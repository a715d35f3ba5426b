//! Command implementations.

use hyp1f1::coulomb::{coulomb_wave_exact, coulomb_wave_tra, schrodinger_residual, CoulombParams};
use hyp1f1::expansion::{eval_rep18, eval_rep19, relative_deviation, RepMethod};
use hyp1f1::kummer::{hyp1f1_oracle, HypergeometricParams, SeriesResult, DEFAULT_MAX_TERMS, DEFAULT_TOL};
use num_complex::Complex64;

use crate::args::{CoulombArgs, DeviationArgs, EvalArgs, Method, Table1Args};
use crate::fmt::{fmt_g15, rounded15};
use crate::output::{path_with_n_suffix, Table};
use crate::AppError;

fn fmt_value(v: Complex64) -> String {
    if v.im == 0.0 {
        fmt_g15(v.re)
    } else if v.im < 0.0 {
        format!("{}-{}i", fmt_g15(v.re), fmt_g15(-v.im))
    } else {
        format!("{}+{}i", fmt_g15(v.re), fmt_g15(v.im))
    }
}

fn real_a(a: Complex64, command: &str) -> Result<f64, AppError> {
    if a.im != 0.0 {
        return Err(AppError::Usage(format!("{command} requires a real parameter a")));
    }
    Ok(a.re)
}

pub fn cmd_eval(args: &EvalArgs) -> Result<(), AppError> {
    if args.methods.is_empty() {
        return Err(AppError::Usage("at least one method must be selected".into()));
    }
    let p = HypergeometricParams::new(
        args.a.0,
        Complex64::new(args.b, 0.0),
        Complex64::new(args.x, 0.0),
    )?;
    for method in &args.methods {
        let r: SeriesResult = match method {
            Method::Oracle => {
                let budget = args.n_terms.unwrap_or(DEFAULT_MAX_TERMS);
                if budget > DEFAULT_MAX_TERMS {
                    return Err(AppError::Usage("oracle term budget above 10000".into()));
                }
                hyp1f1_oracle(&p, DEFAULT_TOL, budget)?
            }
            Method::Rep18 => eval_rep18(&p, args.n_terms.unwrap_or(40))?,
            Method::Rep19 => eval_rep19(&p, args.n_terms.unwrap_or(40))?,
        };
        let name = match method {
            Method::Oracle => "oracle",
            Method::Rep18 => "rep18",
            Method::Rep19 => "rep19",
        };
        println!(
            "method={name} value={} terms_used={} converged={}",
            fmt_value(r.value),
            r.terms_used,
            r.converged
        );
    }
    Ok(())
}

pub fn cmd_table1(args: &Table1Args) -> Result<(), AppError> {
    let a = real_a(args.a.0, "table1")?;
    if args.n_terms < 1 {
        return Err(AppError::Usage("N must be >= 1".into()));
    }
    if args.steps < 1 {
        return Err(AppError::Usage("steps must be >= 1".into()));
    }
    if !(args.xmin < args.xmax) && args.steps > 1 {
        return Err(AppError::Usage("xmin must be below xmax".into()));
    }
    let mut table = Table::new(vec!["x", "exact", "rep18", "rep19", "abs_err_18", "abs_err_19"]);
    for i in 0..args.steps {
        let x = if args.steps == 1 {
            args.xmin
        } else {
            args.xmin + (args.xmax - args.xmin) * i as f64 / (args.steps - 1) as f64
        };
        let p = HypergeometricParams::real(a, args.b, x)?;
        let exact = rounded15(hyp1f1_oracle(&p, DEFAULT_TOL, DEFAULT_MAX_TERMS)?.value.re);
        let r18 = rounded15(eval_rep18(&p, args.n_terms)?.value.re);
        let r19 = rounded15(eval_rep19(&p, args.n_terms)?.value.re);
        // abs errors are recomputed from the already-rounded cells so each
        // emitted row is self-consistent under re-parsing
        table.push(vec![
            Some(x),
            Some(exact),
            Some(r18),
            Some(r19),
            Some((r18 - exact).abs()),
            Some((r19 - exact).abs()),
        ]);
    }
    table.emit(args.format, args.out.as_deref())?;
    Ok(())
}

pub fn cmd_deviation(args: &DeviationArgs) -> Result<(), AppError> {
    let a = real_a(args.a.0, "deviation")?;
    if args.steps < 1 {
        return Err(AppError::Usage("steps must be >= 1".into()));
    }
    if !(args.xmin < args.xmax) {
        return Err(AppError::Usage("xmin must be below xmax".into()));
    }
    if args.n_terms.is_empty() || args.n_terms.iter().any(|&n| n < 1) {
        return Err(AppError::Usage("every N must be >= 1".into()));
    }
    if args.n_terms.len() > 1 && args.out.is_none() {
        return Err(AppError::Usage(
            "several N values emit one file per N; --out is required".into(),
        ));
    }
    for &n in &args.n_terms {
        let mut table = Table::new(vec!["x", "delta_rep18", "delta_rep19"]);
        for i in 1..=args.steps {
            let x = args.xmin + (args.xmax - args.xmin) * i as f64 / args.steps as f64;
            let cell = |method: RepMethod, name: &str| -> Option<f64> {
                match relative_deviation(a, args.b, x, n, method) {
                    Ok(d) => Some(d),
                    Err(hyp1f1::SpecialError::DegenerateDenominator(_)) => {
                        eprintln!("warning: {name} deviation undefined at x={x} (degenerate denominator); cell left blank");
                        None
                    }
                    Err(e) => {
                        eprintln!("warning: {name} not evaluable at x={x}: {e}; cell left blank");
                        None
                    }
                }
            };
            let d18 = cell(RepMethod::Rep18, "rep18");
            let d19 = cell(RepMethod::Rep19, "rep19");
            table.push(vec![Some(x), d18, d19]);
        }
        let out = match (&args.out, args.n_terms.len()) {
            (Some(path), len) if len > 1 => Some(path_with_n_suffix(path, n)),
            (Some(path), _) => Some(path.clone()),
            (None, _) => None,
        };
        table.emit(args.format, out.as_deref())?;
    }
    Ok(())
}

pub fn cmd_coulomb(args: &CoulombArgs) -> Result<(), AppError> {
    if args.steps < 1 {
        return Err(AppError::Usage("steps must be >= 1".into()));
    }
    if !(args.rmax > 0.0) {
        return Err(AppError::Usage("rmax must be positive".into()));
    }
    if args.n_terms < 1 {
        return Err(AppError::Usage("N must be >= 1".into()));
    }
    let p = CoulombParams::new(args.charge, args.energy, args.l)?;
    let mut table = Table::new(vec!["r", "psi_tra", "psi_exact", "rel_diff", "schrodinger_residual"]);
    for i in 1..=args.steps {
        let r = args.rmax * i as f64 / args.steps as f64;
        let tra = coulomb_wave_tra(&p, r, args.n_terms)?.psi;
        let exact = coulomb_wave_exact(&p, r)?.psi;
        let rel = (tra - exact).abs() / exact.abs().max(f64::MIN_POSITIVE);
        let h = (1e-3f64).min(r / 3.0);
        let resid = schrodinger_residual(&p, r, h)?;
        table.push(vec![Some(r), Some(tra), Some(exact), Some(rel), Some(resid)]);
    }
    table.emit(args.format, args.out.as_deref())?;
    Ok(())
}
