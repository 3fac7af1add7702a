//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use faddeeva_analysis::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(name = "faddeeva", version, about = "Complex error function w(z) by rational approximation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function at one point or at every `x,y` row of a CSV file.
    Eval(EvalArgs),
    /// Relative-error map over a grid, against the reference values.
    Map(MapArgs),
    /// Mean and maximum relative error on seeded HITRAN-domain points.
    Hitran(HitranArgs),
    /// Throughput of batch evaluation on HITRAN-domain points.
    Bench(BenchArgs),
    /// Both sides of the damped cosine-kernel approximation as CSV.
    Kernel(KernelArgs),
    /// Identity, parity, ODE and limit checks (no reference cache needed).
    Selftest(SelftestArgs),
}

/// Approximation parameters. Flags override values from `--config`.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Config file with `key=value` lines (keys N, sigma, y_min, y_narrow, z_cf_threshold).
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Number of summation terms.
    #[arg(short = 'N', long = "terms", value_name = "N")]
    pub n_terms: Option<usize>,
    /// Shift constant (at least 1).
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Reference height of the narrow-band blend.
    #[arg(long)]
    pub y_min: Option<f64>,
    /// Heights below this use the narrow-band path.
    #[arg(long)]
    pub y_narrow: Option<f64>,
    /// |z| at and above which the continued fraction is used.
    #[arg(long)]
    pub z_cf_threshold: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FunctionKind {
    W,
    Voigt,
    Erf,
    ErfcScaled,
    Dawson,
    Plasma,
    Fresnel,
    Normal,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, allow_hyphen_values = true, requires = "y", conflicts_with = "input")]
    pub x: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires = "x")]
    pub y: Option<f64>,
    /// CSV of `x,y` rows, optional header.
    #[arg(long = "in", value_name = "PATH", required_unless_present = "x")]
    pub input: Option<PathBuf>,
    /// Output file (default stdout).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "w")]
    pub function: FunctionKind,
    /// Reproduce the reference routine: the bare rational form, and the whole
    /// input rejected if any Im z < 1e-6.
    #[arg(long)]
    pub strict_appendix_a: bool,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub x0: f64,
    #[arg(long, default_value_t = 15.0, allow_hyphen_values = true)]
    pub x1: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub y0: f64,
    #[arg(long, default_value_t = 15.0)]
    pub y1: f64,
    #[arg(long, default_value_t = 100)]
    pub nx: usize,
    #[arg(long, default_value_t = 100)]
    pub ny: usize,
    /// Linear instead of log-spaced y.
    #[arg(long)]
    pub y_lin: bool,
    /// Reference cache (default: the committed cache for the default grid).
    #[arg(long, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Compute missing reference values with the oracle (and store them in
    /// `--cache` when given).
    #[arg(long)]
    pub with_oracle: bool,
    /// Map CSV output (default stdout).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct HitranArgs {
    #[arg(long, default_value = "1e5", value_parser = parse_count)]
    pub count: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Reference cache of the subsample (default: the committed cache).
    #[arg(long, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Compute the subsample reference values with the oracle.
    #[arg(long)]
    pub with_oracle: bool,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "3e7", value_parser = parse_count)]
    pub count: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Points generated and evaluated per batch.
    #[arg(long, default_value = "1e6", value_parser = parse_count)]
    pub chunk: usize,
    /// Also compare the reference subsample against the cache.
    #[arg(long)]
    pub check: bool,
    #[arg(long, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Compute the check subsample with the oracle instead of a cache.
    #[arg(long, requires = "check")]
    pub with_oracle: bool,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    /// Damping constant of the kernel (not validated against sigma >= 1).
    #[arg(long, default_value_t = 0.1)]
    pub sigma: f64,
    #[arg(long, default_value_t = 40.0)]
    pub tmax: f64,
    #[arg(long, default_value_t = 4001)]
    pub nt: usize,
    #[arg(short = 'N', long = "terms", value_name = "N")]
    pub n_terms: Option<usize>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[command(flatten)]
    pub params: ParamArgs,
}

/// Counts such as `30000000` or `3e7`.
pub fn parse_count(s: &str) -> Result<usize, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a count"))?;
    if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= 1e15 {
        Ok(v as usize)
    } else {
        Err(format!("`{s}` is not a non-negative whole number"))
    }
}
