//! Every threshold and sample size used by the acceptance criteria.

// C1: core-domain grid
pub const C1_MAX: f64 = 5e-9;
pub const C1_MEAN: f64 = 1e-13;

// C2: HITRAN-domain average
pub const C2_COUNT: usize = 100_000;
pub const C2_MEAN: f64 = 1e-14;

// C3: reflection identity
pub const C3_POINTS: usize = 1000;
pub const C3_RADIUS: f64 = 6.0;
pub const C3_TOL: f64 = 1e-13;

// C4: known values
pub const C4_ORIGIN: f64 = 1e-13;
pub const C4_Y: f64 = 1e-8;
pub const C4_XS: [f64; 4] = [0.5, 1.0, 3.0, 10.0];
pub const C4_LIMIT: f64 = 1e-8;

// C5: continued-fraction region
pub const C5_POINTS: usize = 200;
pub const C5_MIN_MODULUS: f64 = 15.0;
pub const C5_MAX_MODULUS: f64 = 1e6;
pub const C5_TOL: f64 = 1e-14;

// C6: differential equation
pub const C6_TOL: f64 = 1e-9;

// C7: oracle self-consistency
pub const C7_POINTS: usize = 100;
pub const C7_RADIUS: f64 = 10.0;
pub const C7_TOL: f64 = 1e-25;

// C8: related functions
pub const C8_WEB: f64 = 1e-13;
pub const C8_VALUES: f64 = 1e-12;

// C9: kernel replicas
pub const C9_SMALL_SIGMA: f64 = 0.1;
pub const C9_PEAK_RATIO: f64 = 10.0;
pub const C9_LARGE_SIGMA: f64 = 1.5;
pub const C9_T_FROM: f64 = 3.0;
pub const C9_DEVIATION: f64 = 1e-12;

// C10: throughput and region histogram
pub const C10_POINTS: usize = 30_000_000;
pub const C10_CHUNK: usize = 1_000_000;
pub const C10_RATIONAL_FRACTION: f64 = 0.99;

/// Seed of every sampled criterion.
pub const SEED: u64 = 20_240_611;
