//! Accuracy harness: relative-error maps against the extended-precision
//! oracle, seeded HITRAN-domain samples, and the damped cosine-kernel curves.

mod csv;
mod error;
mod grid;
mod hitran;
mod kernel;
mod reference;
mod relative;

pub use csv::{emit_map_csv, map_to_csv, parse_map_csv, read_map_csv, MAP_HEADER};
pub use error::AnalysisError;
pub use grid::{log10_error, sweep_domain, ErrorMapGrid, ErrorStats, GridSpec, ERROR_FLOOR};
pub use hitran::{
    hitran_accuracy_sample, hitran_points, hitran_signature, subsample, AccuracySummary,
    HitranPoints, DEFAULT_SEED, HITRAN_X, HITRAN_Y, SUBSAMPLE,
};
pub use kernel::{sample_cosine_kernel, KernelSample};
pub use reference::{
    build_cache, data_dir, default_grid_cache, default_hitran_cache, CachedOracle, LiveOracle,
    ReferenceSource,
};
pub use relative::{relative_errors, RelErrors};
