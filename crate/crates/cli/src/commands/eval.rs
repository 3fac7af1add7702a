use std::fmt::Write as _;
use std::fs;
use std::io::Write;

use faddeeva_core::{w_rational, Complex64};

use crate::args::{EvalArgs, FunctionKind};
use crate::error::CliError;
use crate::output::{emit, num};

pub const HEADER: &str = "x,y,re,im,region";

/// Height below which the reference routine refuses to compute.
pub const APPENDIX_A_Y_MIN: f64 = 1e-6;

/// Parses `x,y` rows. The first line may be a header; blank lines are
/// skipped. Non-finite numbers are accepted here and rejected per row later.
pub fn parse_points(text: &str) -> Result<Vec<(f64, f64)>, CliError> {
    let mut points = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed = match fields.as_slice() {
            [x, y] => x.parse::<f64>().ok().zip(y.parse::<f64>().ok()),
            _ => None,
        };
        match parsed {
            Some(p) => points.push(p),
            None if idx == 0 && fields.len() == 2 => {}
            None => {
                return Err(CliError::Usage(format!(
                    "line {}: expected two numbers `x,y`, found `{line}`",
                    idx + 1
                )))
            }
        }
    }
    Ok(points)
}

pub fn run(args: &EvalArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let f = args.params.evaluator()?;
    let points = match (&args.input, args.x, args.y) {
        (Some(path), _, _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            parse_points(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
        }
        (None, Some(x), Some(y)) => vec![(x, y)],
        _ => return Err(CliError::Usage("give either --x and --y, or --in".into())),
    };

    let mut text = String::with_capacity(64 * (points.len() + 1));
    text.push_str(HEADER);
    text.push('\n');
    let mut failures = 0usize;

    if args.strict_appendix_a {
        if args.function != FunctionKind::W {
            return Err(CliError::Usage("--strict-appendix-a applies to --function w only".into()));
        }
        if points.iter().any(|&(_, y)| !(y >= APPENDIX_A_Y_MIN)) {
            writeln!(stderr, "One or more imag(z) is less than 10^-6. Computation terminated.")?;
            for &(x, y) in &points {
                let _ = writeln!(text, "{},{},nan,nan,Rejected", num(x), num(y));
            }
            emit(&text, args.out.as_deref(), stdout)?;
            return Err(CliError::Compute("input rejected in strict mode".into()));
        }
        for &(x, y) in &points {
            if !x.is_finite() || !y.is_finite() {
                failures += 1;
                writeln!(stderr, "row ({x}, {y}): argument is not finite")?;
                let _ = writeln!(text, "{},{},nan,nan,error", num(x), num(y));
                continue;
            }
            let v = w_rational(Complex64::new(x, y), f.coeffs());
            let _ = writeln!(text, "{},{},{},{},Rational", num(x), num(y), num(v.re), num(v.im));
        }
    } else {
        for &(x, y) in &points {
            match args.function.apply(&f, Complex64::new(x, y)) {
                Ok((v, region)) => {
                    let _ = writeln!(text, "{},{},{},{},{region}", num(x), num(y), num(v.re), num(v.im));
                }
                Err(e) => {
                    failures += 1;
                    writeln!(stderr, "row ({x}, {y}): {e}")?;
                    let _ = writeln!(text, "{},{},nan,nan,error", num(x), num(y));
                }
            }
        }
    }

    emit(&text, args.out.as_deref(), stdout)?;
    if failures > 0 {
        return Err(CliError::Compute(format!("{failures} of {} points failed", points.len())));
    }
    Ok(())
}
