use std::io::Write;
use std::time::Instant;

use faddeeva_analysis::{HitranPoints, SUBSAMPLE};
use faddeeva_core::{BaseRegion, Complex64, Faddeeva};

use crate::args::BenchArgs;
use crate::commands::hitran::{accuracy, format_summary};
use crate::error::CliError;

/// Points with `x` up to this value are tallied separately: within it the
/// rational form is expected to dominate.
pub const CORE_X_MAX: f64 = 15.0;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub points: usize,
    pub errors: usize,
    /// Indexed like [`BaseRegion::ALL`].
    pub regions: [usize; 3],
    pub core_regions: [usize; 3],
    pub eval_seconds: f64,
}

impl BenchReport {
    pub fn core_points(&self) -> usize {
        self.core_regions.iter().sum()
    }

    pub fn core_fraction(&self, base: BaseRegion) -> f64 {
        let n = self.core_points();
        if n == 0 {
            return 0.0;
        }
        self.core_regions[slot(base)] as f64 / n as f64
    }

    pub fn points_per_second(&self) -> f64 {
        if self.points == 0 || self.eval_seconds == 0.0 {
            0.0
        } else {
            self.points as f64 / self.eval_seconds
        }
    }
}

fn slot(base: BaseRegion) -> usize {
    BaseRegion::ALL.iter().position(|&b| b == base).unwrap()
}

/// Evaluates `count` seeded points in chunks; only `evaluate_batch` is timed.
pub fn throughput(f: &Faddeeva, count: usize, seed: u64, chunk: usize) -> BenchReport {
    let chunk = chunk.max(1);
    let mut gen = HitranPoints::new(seed);
    let mut report = BenchReport::default();
    let mut buf: Vec<Complex64> = Vec::with_capacity(chunk.min(count));
    let mut left = count;
    while left > 0 {
        let n = left.min(chunk);
        buf.clear();
        buf.extend(gen.by_ref().take(n));
        let t0 = Instant::now();
        let out = f.evaluate_batch(&buf);
        report.eval_seconds += t0.elapsed().as_secs_f64();
        for (z, r) in buf.iter().zip(&out) {
            match r {
                Ok(r) => {
                    let k = slot(r.region.base);
                    report.regions[k] += 1;
                    if z.re <= CORE_X_MAX {
                        report.core_regions[k] += 1;
                    }
                }
                Err(_) => report.errors += 1,
            }
        }
        report.points += n;
        left -= n;
    }
    report
}

pub fn format_report(r: &BenchReport) -> String {
    let mut s = format!("points={}\nerrors={}\n", r.points, r.errors);
    for b in BaseRegion::ALL {
        s += &format!("region.{}={}\n", b.name(), r.regions[slot(b)]);
    }
    s += &format!("core_x_max={CORE_X_MAX}\ncore.points={}\n", r.core_points());
    for b in BaseRegion::ALL {
        s += &format!("core.region.{}={}\n", b.name(), r.core_regions[slot(b)]);
    }
    s += &format!(
        "core.rational_fraction={:.6}\ntiming.eval_seconds={:.3}\ntiming.points_per_second={:.4e}\n",
        r.core_fraction(BaseRegion::Rational),
        r.eval_seconds,
        r.points_per_second()
    );
    s
}

pub fn run(args: &BenchArgs, stdout: &mut dyn Write, _stderr: &mut dyn Write) -> Result<(), CliError> {
    let f = args.params.evaluator()?;
    let report = throughput(&f, args.count, args.seed, args.chunk);
    write!(stdout, "seed={}\n{}", args.seed, format_report(&report))?;
    if args.check && args.count > 0 {
        // the reference subsample is a prefix of the stream
        let s = accuracy(&f, args.count.min(SUBSAMPLE), args.seed, args.cache.as_deref(), args.with_oracle)?;
        write!(stdout, "{}", format_summary("check.", &s))?;
    }
    if report.errors > 0 {
        return Err(CliError::Compute(format!("{} points failed to evaluate", report.errors)));
    }
    Ok(())
}
