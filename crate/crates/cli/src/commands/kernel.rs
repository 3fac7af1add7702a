use std::fmt::Write as _;
use std::io::Write;

use faddeeva_analysis::sample_cosine_kernel;
use faddeeva_core::ParamOverrides;

use crate::args::KernelArgs;
use crate::error::CliError;
use crate::output::{emit, num};

pub fn run(args: &KernelArgs, stdout: &mut dyn Write, _stderr: &mut dyn Write) -> Result<(), CliError> {
    if args.nt < 2 {
        return Err(CliError::Usage("--nt must be at least 2".into()));
    }
    if !(args.tmax > 0.0 && args.tmax.is_finite()) {
        return Err(CliError::Usage("--tmax must be positive".into()));
    }
    if !args.sigma.is_finite() {
        return Err(CliError::Usage("--sigma must be finite".into()));
    }
    let params = ParamOverrides {
        n_terms: args.n_terms,
        ..Default::default()
    }
    .build()?;
    let mut text = String::from("t,approx,exact\n");
    for s in sample_cosine_kernel(args.sigma, args.tmax, args.nt, &params) {
        let _ = writeln!(text, "{},{},{}", num(s.t), num(s.approx), num(s.exact));
    }
    emit(&text, args.out.as_deref(), stdout)
}
