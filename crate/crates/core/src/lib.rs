//! Complex error function (Faddeeva function)
//! `w(z) = e^{-z^2} (1 + 2i/sqrt(pi) int_0^z e^{t^2} dt)` in double precision.
//!
//! The core of the crate is a rational approximation obtained by sampling
//! the Fourier transform of `e^{-t^2/4}` with a shift constant `sigma`:
//! `w(z) ~ psi(z + i sigma)` with precomputed coefficients
//! ([`CoefficientSet`]). Around it, [`evaluate`] covers the whole complex
//! plane with a Laplace continued fraction for large `|z|`, a small-`y`
//! blend next to the real axis, and the symmetries
//! `w(-z) = 2e^{-z^2} - w(z)` and `w(-conj z) = conj w(z)`.
//!
//! ```
//! use faddeeva_core::{Complex64, Faddeeva};
//!
//! let f = Faddeeva::default();
//! let w = f.w(Complex64::new(2.0, 1.0)).unwrap();
//! assert!((w.re - 0.14023958136627794).abs() < 1e-14);
//! ```

mod continued_fraction;
mod dispatch;
mod error;
mod narrow_band;
mod params;
mod rational;
mod region;
mod related;
mod symmetry;

pub use num_complex::Complex64;

pub use continued_fraction::{w_continued_fraction, CF_DEPTH, FRAC_1_SQRT_PI};
pub use dispatch::{base_region, evaluate, evaluate_batch, EvaluationResult, Faddeeva};
pub use error::EvalError;
pub use narrow_band::w_narrow_band;
pub use params::{
    ApproximationParams, CoefficientSet, ParamError, ParamOverrides, DEFAULT_SIGMA,
    DEFAULT_TERMS, DEFAULT_T_MARGIN, DEFAULT_Y_MIN, DEFAULT_Y_NARROW, DEFAULT_Z_CF_THRESHOLD,
};
pub use rational::{min_denominator, psi_derivative, psi_eval, w_rational};
pub use region::{BaseRegion, ParseRegionError, RegionTag};
pub use related::{
    dawson, erf_complex, erfc_scaled, fresnel, normal_distribution, plasma_dispersion, voigt,
    VoigtPair,
};
pub use symmetry::{exp_neg_sq, mirror_negative_x, reflect_lower_half, scaled_exp_neg_sq};
