//! Seeded samples over the HITRAN domain `0 <= x <= 40000`,
//! `1e-4 <= y <= 1e2`: `x` uniform, `y` log-uniform.

use faddeeva_core::{Complex64, Faddeeva};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::AnalysisError;
use crate::reference::ReferenceSource;
use crate::relative::relative_errors;

pub const HITRAN_X: (f64, f64) = (0.0, 40_000.0);
pub const HITRAN_Y: (f64, f64) = (1e-4, 1e2);
/// Size of the reference subsample.
pub const SUBSAMPLE: usize = 10_000;
/// Seed of the committed reference subsample.
pub const DEFAULT_SEED: u64 = 20_240_611;

/// Stream of HITRAN-domain points. Points are generated one at a time from
/// a single ChaCha stream, so the first `n` points of any run with the same
/// seed are identical regardless of the total count.
pub struct HitranPoints {
    rng: ChaCha8Rng,
}

impl HitranPoints {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Iterator for HitranPoints {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        let x = self.rng.gen_range(HITRAN_X.0..=HITRAN_X.1);
        let (l0, l1) = (HITRAN_Y.0.log10(), HITRAN_Y.1.log10());
        let y = 10f64.powf(self.rng.gen_range(l0..=l1));
        Some(Complex64::new(x, y))
    }
}

pub fn hitran_points(count: usize, seed: u64) -> Vec<Complex64> {
    HitranPoints::new(seed).take(count).collect()
}

/// The reference subsample of a run: its first `min(count, SUBSAMPLE)`
/// points. The points are i.i.d., so a prefix is an unbiased subsample, and
/// one cache serves every count for a given seed.
pub fn subsample(count: usize, seed: u64) -> Vec<Complex64> {
    hitran_points(count.min(SUBSAMPLE), seed)
}

pub fn hitran_signature(seed: u64) -> String {
    format!(
        "hitran:x={:e}..{:e}:y={:e}..{:e}:ylog:seed={seed}:n={SUBSAMPLE}",
        HITRAN_X.0, HITRAN_X.1, HITRAN_Y.0, HITRAN_Y.1
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracySummary {
    pub evaluated: usize,
    pub compared: usize,
    pub mean_dre: f64,
    pub mean_dim: f64,
    pub max_dre: f64,
    pub max_dim: f64,
}

/// Evaluates `count` seeded points and compares the subsample against the
/// reference. Every point must evaluate without error.
pub fn hitran_accuracy_sample(
    count: usize,
    seed: u64,
    f: &Faddeeva,
    source: &dyn ReferenceSource,
) -> Result<AccuracySummary, AnalysisError> {
    let points = hitran_points(count, seed);
    for (z, r) in points.iter().zip(f.evaluate_batch(&points)) {
        r.map_err(|source| AnalysisError::Eval {
            x: z.re,
            y: z.im,
            source,
        })?;
    }
    let sub = &points[..count.min(SUBSAMPLE)];
    let errors: Vec<(Option<f64>, Option<f64>)> = sub
        .par_iter()
        .map(|z| {
            let w = f.w(*z).map_err(|source| AnalysisError::Eval {
                x: z.re,
                y: z.im,
                source,
            })?;
            let e = relative_errors(w, &source.reference(z.re, z.im)?);
            Ok((e.dre, e.dim))
        })
        .collect::<Result<_, AnalysisError>>()?;
    let (max_dre, mean_dre) = aggregate(errors.iter().map(|e| e.0));
    let (max_dim, mean_dim) = aggregate(errors.iter().map(|e| e.1));
    Ok(AccuracySummary {
        evaluated: count,
        compared: sub.len(),
        mean_dre,
        mean_dim,
        max_dre,
        max_dim,
    })
}

fn aggregate(it: impl Iterator<Item = Option<f64>>) -> (f64, f64) {
    let mut max = f64::NAN;
    let mut sum = 0.0;
    let mut n = 0usize;
    for e in it.flatten() {
        max = if max.is_nan() { e } else { max.max(e) };
        sum += e;
        n += 1;
    }
    (max, if n == 0 { f64::NAN } else { sum / n as f64 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_stay_in_the_domain() {
        for z in hitran_points(10_000, 3) {
            assert!((HITRAN_X.0..=HITRAN_X.1).contains(&z.re));
            assert!(z.im >= HITRAN_Y.0 * (1.0 - 1e-15) && z.im <= HITRAN_Y.1 * (1.0 + 1e-15));
        }
    }

    #[test]
    fn prefixes_are_stable() {
        let a = hitran_points(100, 9);
        let b = hitran_points(1000, 9);
        assert_eq!(a[..], b[..100]);
        assert_ne!(hitran_points(10, 1), hitran_points(10, 2));
    }

    #[test]
    fn y_is_log_uniform() {
        let pts = hitran_points(60_000, 4);
        let below_one = pts.iter().filter(|z| z.im < 1.0).count() as f64 / 60_000.0;
        // four of six decades lie below 1
        assert!((below_one - 4.0 / 6.0).abs() < 0.01, "{below_one}");
    }
}
