//! Command-line interface definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

/// Benchmark front end for the Bessel-expansion evaluation of ₁F₁:
/// point evaluation, the 12-decimal golden comparison table,
/// relative-deviation curves, and Coulomb scattering waves.
#[derive(Debug, Parser)]
#[command(name = "hypbench", version, about, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate ₁F₁(a; b; x) at one point with the selected methods
    Eval(EvalArgs),
    /// Emit the exact/rep18/rep19 comparison table with absolute errors
    Table1(Table1Args),
    /// Emit signed relative-deviation curves Δ(x) = (₁F₁−F)/(₁F₁+F)
    Deviation(DeviationArgs),
    /// Emit Coulomb wavefunction samples by both routes, with residuals
    Coulomb(CoulombArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Rep18,
    Rep19,
}

/// Complex parameter in `re` or `re,im` form.
#[derive(Debug, Clone, Copy)]
pub struct ComplexArg(pub Complex64);

impl std::str::FromStr for ComplexArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("`{t}` is not a real number"))
        };
        match s.split_once(',') {
            Some((re, im)) => Ok(Self(Complex64::new(parse(re)?, parse(im)?))),
            None => Ok(Self(Complex64::new(parse(s)?, 0.0))),
        }
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Parameter a as `re` or `re,im`
    #[arg(long, allow_hyphen_values = true)]
    pub a: ComplexArg,
    /// Parameter b (real)
    #[arg(long, allow_hyphen_values = true)]
    pub b: f64,
    /// Argument x (real)
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
    /// Methods to evaluate
    #[arg(long, value_delimiter = ',', default_value = "oracle")]
    pub methods: Vec<Method>,
    /// Truncation order for rep18/rep19 and term budget for the oracle
    #[arg(long = "N", alias = "n")]
    pub n_terms: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    /// Parameter a (real for the table)
    #[arg(long, allow_hyphen_values = true, default_value = "2.5")]
    pub a: ComplexArg,
    /// Parameter b
    #[arg(long, default_value_t = 3.7)]
    pub b: f64,
    /// Truncation order N for both representations
    #[arg(long = "N", alias = "n", default_value_t = 20)]
    pub n_terms: usize,
    #[arg(long, default_value_t = 1.0)]
    pub xmin: f64,
    #[arg(long, default_value_t = 10.0)]
    pub xmax: f64,
    /// Number of grid points (xmin..=xmax inclusive)
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    /// Output path (stdout when omitted)
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct DeviationArgs {
    /// Parameter a (real)
    #[arg(long, allow_hyphen_values = true, default_value = "2.5")]
    pub a: ComplexArg,
    /// Parameter b
    #[arg(long, default_value_t = 3.7)]
    pub b: f64,
    /// Truncation order(s); a comma list emits one file per N
    #[arg(long = "N", alias = "n", value_delimiter = ',', default_value = "5")]
    pub n_terms: Vec<usize>,
    /// Grid lower edge (excluded from the grid)
    #[arg(long, default_value_t = 0.0)]
    pub xmin: f64,
    #[arg(long, default_value_t = 10.0)]
    pub xmax: f64,
    /// Number of grid points on (xmin, xmax]
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    /// Output path; required when several N are given (suffix `_N<k>` added)
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct CoulombArgs {
    /// Electric charge Z (atomic units)
    #[arg(long = "Z", allow_hyphen_values = true, default_value_t = 1.0)]
    pub charge: f64,
    /// Energy E > 0 (atomic units)
    #[arg(long = "E", default_value_t = 0.5)]
    pub energy: f64,
    /// Angular momentum quantum number
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Largest radius of the grid
    #[arg(long, default_value_t = 10.0)]
    pub rmax: f64,
    /// Number of grid points on (0, rmax]
    #[arg(long, default_value_t = 20)]
    pub steps: usize,
    /// Truncation order of the Bessel-basis series
    #[arg(long = "N", alias = "n", default_value_t = 80)]
    pub n_terms: usize,
    /// Output path (stdout when omitted)
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}
