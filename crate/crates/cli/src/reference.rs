use std::path::Path;

use faddeeva_analysis::{build_cache, CachedOracle, LiveOracle, ReferenceSource};

use crate::error::CliError;

/// Picks the reference values for a set of points: an existing cache
/// (signature checked), a cache generated on request, or the live oracle.
pub fn reference_for(
    points: &[(f64, f64)],
    signature: &str,
    cache: Option<&Path>,
    with_oracle: bool,
) -> Result<Box<dyn ReferenceSource>, CliError> {
    match cache {
        Some(p) if p.exists() => Ok(Box::new(CachedOracle::open(p, signature)?)),
        Some(p) if with_oracle => {
            let c = build_cache(points, signature, &LiveOracle)?;
            c.write(p)?;
            Ok(Box::new(CachedOracle::new(c)))
        }
        Some(p) => Err(CliError::Io(format!(
            "no reference cache at {} for `{signature}`; pass --with-oracle to generate it",
            p.display()
        ))),
        None if with_oracle => Ok(Box::new(LiveOracle)),
        None => Err(CliError::Io(format!(
            "no reference cache for `{signature}`; pass --cache or --with-oracle"
        ))),
    }
}
