use std::io::Write;

use faddeeva_analysis::{default_grid_cache, map_to_csv, sweep_domain, ErrorStats, GridSpec};

use crate::args::MapArgs;
use crate::error::CliError;
use crate::output::emit;
use crate::reference::reference_for;

/// Acceptance thresholds apply up to this height; anything above is
/// reported for information only.
pub const ACCEPTANCE_Y_MAX: f64 = 15.0;

const SWEEP_CHUNKS: usize = 16;

pub fn grid_spec(args: &MapArgs) -> GridSpec {
    GridSpec {
        x_range: (args.x0, args.x1),
        y_range: (args.y0, args.y1),
        nx: args.nx,
        ny: args.ny,
        y_log: !args.y_lin,
    }
}

pub fn format_stats(label: &str, s: &ErrorStats) -> String {
    format!(
        "{label}: max_dre={:.3e} max_dim={:.3e} mean_dre={:.3e} mean_dim={:.3e}",
        s.max_dre, s.max_dim, s.mean_dre, s.mean_dim
    )
}

pub fn run(args: &MapArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let f = args.params.evaluator()?;
    let spec = grid_spec(args);
    spec.validate()?;
    let cache = args
        .cache
        .clone()
        .or_else(|| (spec == GridSpec::acceptance()).then(default_grid_cache));
    let source = reference_for(&spec.points(), &spec.signature(), cache.as_deref(), args.with_oracle)?;
    let grid = sweep_domain(&spec, &f, source.as_ref(), SWEEP_CHUNKS)?;
    emit(&map_to_csv(&grid), args.out.as_deref(), stdout)?;

    writeln!(stderr, "grid {}", spec.signature())?;
    writeln!(stderr, "{}", format_stats("all cells", &grid.stats))?;
    if grid.y_axis.iter().any(|&y| y > ACCEPTANCE_Y_MAX) {
        let s = grid.stats_where(|y| y <= ACCEPTANCE_Y_MAX);
        writeln!(stderr, "{}", format_stats("y <= 15", &s))?;
    }
    Ok(())
}
