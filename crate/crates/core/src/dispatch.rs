//! Full-plane evaluation of `w(z)`.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::continued_fraction::{cf_unchecked, CF_DEPTH};
use crate::error::EvalError;
use crate::narrow_band::w_narrow_band;
use crate::params::{ApproximationParams, CoefficientSet};
use crate::rational::w_rational;
use crate::region::{BaseRegion, RegionTag};
use crate::symmetry::{exp_neg_sq, mirror_negative_x, reflect_lower_half};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationResult {
    pub value: Complex64,
    pub region: RegionTag,
}

/// Evaluates `w(z)` anywhere in the finite plane.
///
/// Dispatch order:
/// 1. `Im z < 0`: evaluate at `-z` and reflect, `w(z) = 2e^{-z^2} - w(-z)`;
/// 2. `Re z < 0`: evaluate at `-conj(z)` and conjugate;
/// 3. `|z| >= z_cf_threshold`: continued fraction;
/// 4. `Im z < y_narrow`: narrow-band blend;
/// 5. otherwise the rational form.
pub fn evaluate(
    z: Complex64,
    params: &ApproximationParams,
    coeffs: &CoefficientSet,
) -> Result<EvaluationResult, EvalError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(EvalError::NonFinite { re: z.re, im: z.im });
    }
    if z.im < 0.0 {
        let inner = evaluate(-z, params, coeffs)?;
        return Ok(EvaluationResult {
            value: reflect_lower_half(z, inner.value)?,
            region: inner.region.with_reflection(),
        });
    }
    if z.re < 0.0 {
        let inner = first_quadrant(Complex64::new(-z.re, z.im), params, coeffs);
        return Ok(EvaluationResult {
            value: mirror_negative_x(inner.value),
            region: inner.region.with_mirror(),
        });
    }
    Ok(first_quadrant(z, params, coeffs))
}

/// Which base path a first-quadrant point takes.
pub fn base_region(z: Complex64, params: &ApproximationParams) -> BaseRegion {
    if z.norm() >= params.z_cf_threshold() {
        BaseRegion::ContinuedFraction
    } else if z.im < params.y_narrow() {
        BaseRegion::NarrowBand
    } else {
        BaseRegion::Rational
    }
}

fn first_quadrant(
    z: Complex64,
    params: &ApproximationParams,
    coeffs: &CoefficientSet,
) -> EvaluationResult {
    let base = base_region(z, params);
    let value = match base {
        BaseRegion::ContinuedFraction => w_far(z, params),
        BaseRegion::NarrowBand => w_narrow_band(z.re, z.im, params, coeffs),
        BaseRegion::Rational => w_rational(z, coeffs),
    };
    EvaluationResult {
        value,
        region: RegionTag::base(base),
    }
}

/// Continued fraction plus, right next to the real axis, the exponentially
/// small `e^{-x^2}` real part that no finite truncation reproduces.
fn w_far(z: Complex64, params: &ApproximationParams) -> Complex64 {
    let mut w = cf_unchecked(z, CF_DEPTH);
    if z.im < params.y_narrow() {
        if let Ok(e) = exp_neg_sq(Complex64::new(z.re, 0.0)) {
            w.re += e.re;
        }
    }
    w
}

/// Element-wise [`evaluate`], order preserved. Work is split across the
/// rayon pool; a failing point only affects its own slot.
pub fn evaluate_batch(
    points: &[Complex64],
    params: &ApproximationParams,
    coeffs: &CoefficientSet,
) -> Vec<Result<EvaluationResult, EvalError>> {
    points
        .par_iter()
        .map(|&z| evaluate(z, params, coeffs))
        .collect()
}

/// Parameters bundled with their coefficient set.
#[derive(Debug, Clone, PartialEq)]
pub struct Faddeeva {
    params: ApproximationParams,
    coeffs: CoefficientSet,
}

impl Faddeeva {
    pub fn new(params: ApproximationParams) -> Self {
        let coeffs = CoefficientSet::derive(&params);
        Self { params, coeffs }
    }

    pub fn params(&self) -> &ApproximationParams {
        &self.params
    }

    pub fn coeffs(&self) -> &CoefficientSet {
        &self.coeffs
    }

    pub fn evaluate(&self, z: Complex64) -> Result<EvaluationResult, EvalError> {
        evaluate(z, &self.params, &self.coeffs)
    }

    /// Shorthand for `evaluate(z)?.value`.
    pub fn w(&self, z: Complex64) -> Result<Complex64, EvalError> {
        self.evaluate(z).map(|r| r.value)
    }

    pub fn evaluate_batch(&self, points: &[Complex64]) -> Vec<Result<EvaluationResult, EvalError>> {
        evaluate_batch(points, &self.params, &self.coeffs)
    }
}

impl Default for Faddeeva {
    fn default() -> Self {
        Self::new(ApproximationParams::default())
    }
}
