use std::io::Write;

use faddeeva_analysis::{
    default_hitran_cache, hitran_accuracy_sample, hitran_signature, subsample, AccuracySummary,
    DEFAULT_SEED,
};
use faddeeva_core::Faddeeva;

use crate::args::HitranArgs;
use crate::error::CliError;
use crate::reference::reference_for;

/// Accuracy over `count` seeded points, the first `min(count, 10^4)` of
/// which are compared with the reference.
pub fn accuracy(
    f: &Faddeeva,
    count: usize,
    seed: u64,
    cache: Option<&std::path::Path>,
    with_oracle: bool,
) -> Result<AccuracySummary, CliError> {
    let default = (seed == DEFAULT_SEED).then(default_hitran_cache);
    let cache = cache.map(|p| p.to_path_buf()).or(default);
    let points: Vec<(f64, f64)> = subsample(count, seed).iter().map(|z| (z.re, z.im)).collect();
    let source = reference_for(&points, &hitran_signature(seed), cache.as_deref(), with_oracle)?;
    Ok(hitran_accuracy_sample(count, seed, f, source.as_ref())?)
}

pub fn format_summary(prefix: &str, s: &AccuracySummary) -> String {
    format!(
        "{prefix}evaluated={}\n{prefix}compared={}\n{prefix}mean_dre={:.6e}\n{prefix}mean_dim={:.6e}\n{prefix}max_dre={:.6e}\n{prefix}max_dim={:.6e}\n",
        s.evaluated, s.compared, s.mean_dre, s.mean_dim, s.max_dre, s.max_dim
    )
}

pub fn run(args: &HitranArgs, stdout: &mut dyn Write, _stderr: &mut dyn Write) -> Result<(), CliError> {
    if args.count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let f = args.params.evaluator()?;
    let s = accuracy(&f, args.count, args.seed, args.cache.as_deref(), args.with_oracle)?;
    write!(stdout, "seed={}\n{}", args.seed, format_summary("", &s))?;
    Ok(())
}
