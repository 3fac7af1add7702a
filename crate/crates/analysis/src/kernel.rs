//! Both sides of the damped cosine-series approximation of the Gaussian,
//!
//! ```text
//! e^{-t^2/4} e^{-sigma t}
//!   ~ 2 sqrt(pi) h [1 + 2 sum_{n=1}^{N} e^{-(2 pi n h)^2} cos(2 pi n h t)] e^{-sigma t},
//! ```
//!
//! whose right side repeats with period `1/h`. The damping `e^{-sigma t}`
//! is what keeps the replicas at `t = 1/h, 2/h, ...` small.

use std::f64::consts::PI;

use faddeeva_core::ApproximationParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSample {
    pub t: f64,
    pub approx: f64,
    pub exact: f64,
}

/// Samples `nt` equally spaced points on `[0, t_max]`. Only `N` and `h`
/// are taken from `params`; `sigma` is passed separately so that curves
/// below the usual validity bound can be drawn.
pub fn sample_cosine_kernel(sigma: f64, t_max: f64, nt: usize, params: &ApproximationParams) -> Vec<KernelSample> {
    let h = params.h_i();
    let n = params.n_terms();
    let weights: Vec<f64> = (1..=n).map(|k| (-(2.0 * PI * k as f64 * h).powi(2)).exp()).collect();
    (0..nt)
        .map(|i| {
            let t = if nt == 1 {
                0.0
            } else if i == nt - 1 {
                t_max
            } else {
                t_max * i as f64 / (nt - 1) as f64
            };
            let damp = (-sigma * t).exp();
            let series: f64 = weights
                .iter()
                .enumerate()
                .map(|(k, w)| w * (2.0 * PI * (k + 1) as f64 * h * t).cos())
                .sum();
            KernelSample {
                t,
                approx: 2.0 * PI.sqrt() * h * (1.0 + 2.0 * series) * damp,
                exact: (-t * t / 4.0).exp() * damp,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_and_spacing() {
        let p = ApproximationParams::default();
        let s = sample_cosine_kernel(0.1, 10.0, 11, &p);
        assert_eq!(s.len(), 11);
        assert_eq!(s[0].t, 0.0);
        assert_eq!(s[0].exact, 1.0);
        assert!((s[0].approx - 1.0).abs() < 1e-12);
        assert_eq!(s[10].t, 10.0);
    }

    #[test]
    fn approximation_is_periodic_before_damping() {
        let p = ApproximationParams::default();
        let period = 1.0 / p.h_i();
        let s = sample_cosine_kernel(0.0, period, 2, &p);
        assert!((s[0].approx - s[1].approx).abs() < 1e-12);
    }
}
