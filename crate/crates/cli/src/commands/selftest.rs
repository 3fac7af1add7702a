use std::io::Write;

use crate::args::SelftestArgs;
use crate::error::CliError;
use crate::selftest::run_all;

pub fn run(args: &SelftestArgs, stdout: &mut dyn Write, _stderr: &mut dyn Write) -> Result<(), CliError> {
    // parameters are validated before any suite runs
    let f = args.params.evaluator()?;
    let results = run_all(&f, args.seed);
    for r in &results {
        writeln!(stdout, "{}", r.line())?;
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
    if failed.is_empty() {
        writeln!(stdout, "all {} suites passed", results.len())?;
        Ok(())
    } else {
        Err(CliError::Compute(format!("failed suites: {}", failed.join(", "))))
    }
}
