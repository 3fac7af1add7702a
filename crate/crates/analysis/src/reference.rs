//! Where reference values come from: the live oracle or a cache file.

use std::path::{Path, PathBuf};

use faddeeva_core::Complex64;
use faddeeva_oracle::{oracle_w, OracleCache, OracleValue};
use rayon::prelude::*;

use crate::error::AnalysisError;

pub trait ReferenceSource: Sync {
    fn reference(&self, x: f64, y: f64) -> Result<OracleValue, AnalysisError>;
}

/// Computes every value on demand. Slow; meant for cache generation and
/// small samples.
#[derive(Debug, Clone, Copy, Default)]
pub struct LiveOracle;

impl ReferenceSource for LiveOracle {
    fn reference(&self, x: f64, y: f64) -> Result<OracleValue, AnalysisError> {
        oracle_w(Complex64::new(x, y)).map_err(|source| AnalysisError::Oracle { x, y, source })
    }
}

/// Serves values from a cache; a miss is an error, never a recomputation.
#[derive(Debug, Clone)]
pub struct CachedOracle {
    cache: OracleCache,
}

impl CachedOracle {
    pub fn new(cache: OracleCache) -> Self {
        Self { cache }
    }

    pub fn open(path: &Path, signature: &str) -> Result<Self, AnalysisError> {
        Ok(Self::new(OracleCache::read_expecting(path, signature)?))
    }

    pub fn cache(&self) -> &OracleCache {
        &self.cache
    }
}

impl ReferenceSource for CachedOracle {
    fn reference(&self, x: f64, y: f64) -> Result<OracleValue, AnalysisError> {
        Ok(self.cache.lookup(x, y)?.clone())
    }
}

/// Computes oracle values for `points` (in parallel, order preserved) and
/// collects them into a cache carrying `signature`.
pub fn build_cache(
    points: &[(f64, f64)],
    signature: &str,
    source: &dyn ReferenceSource,
) -> Result<OracleCache, AnalysisError> {
    let values: Vec<_> = points
        .par_iter()
        .map(|&(x, y)| source.reference(x, y))
        .collect();
    let mut cache = OracleCache::new(signature);
    for (&(x, y), v) in points.iter().zip(values) {
        cache.insert(x, y, v?);
    }
    Ok(cache)
}

/// Committed caches live next to this crate's sources.
pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

pub fn default_grid_cache() -> PathBuf {
    data_dir().join("grid_oracle.txt")
}

pub fn default_hitran_cache() -> PathBuf {
    data_dir().join("hitran_oracle.txt")
}
