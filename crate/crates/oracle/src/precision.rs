//! Working-precision bookkeeping shared by all methods.

use num_complex::Complex64;
use rug::ops::Pow;
use rug::{Complex, Float};

use crate::error::OracleError;
use crate::value::{modulus, OracleValue};

/// Bits needed for `digits` significant decimal digits, plus guard bits.
pub(crate) fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

/// Rounds a precision up to a multiple of 64 so that cached quadrature
/// rules get reused.
pub(crate) fn round_prec(bits: u32) -> u32 {
    bits.div_ceil(64) * 64
}

/// `-log2(scale)` clamped at zero: extra bits needed when the answer is
/// smaller than one.
pub(crate) fn bits_below_one(scale: &Float) -> u32 {
    match scale.get_exp() {
        Some(e) if e < 0 => (-e) as u32 + 1,
        _ => 0,
    }
}

pub(crate) fn ten_pow(prec: u32, e: i32) -> Float {
    Float::with_val(prec, 10u32).pow(e)
}

/// Drives a method that needs to know the magnitude of its own result.
///
/// `attempt(tol_abs, scale)` must return a value together with an absolute
/// error bound no larger than (roughly) `tol_abs`. The first attempt assumes
/// an O(1) result; when a part of the result turns out to be much smaller,
/// the tolerance is tightened to that part and the method is rerun.
pub(crate) fn refine<F>(
    method: &'static str,
    z: Complex64,
    digits: u32,
    mut attempt: F,
) -> Result<OracleValue, OracleError>
where
    F: FnMut(&Float, &Float) -> Result<(Complex, Float), OracleError>,
{
    let target = 10f64.powi(-(digits as i32));
    let mut scale = Float::with_val(64, 1);
    let mut best = f64::INFINITY;
    for _ in 0..8 {
        let tol = Float::with_val(64, &scale * ten_pow(64, -(digits as i32) - 3));
        let (c, err) = attempt(&tol, &scale)?;
        let smallest = smallest_part(&c);
        let v = OracleValue::from_abs(c, &err);
        if v.est_error <= target {
            return Ok(v);
        }
        best = best.min(v.est_error);
        match smallest {
            Some(m) if m < scale => scale = m / 4u32,
            // the estimate failed for a reason other than scale
            _ => scale /= 1u32 << 20,
        }
    }
    Err(OracleError::NotConverged {
        method,
        re: z.re,
        im: z.im,
        est_error: best,
    })
}

fn smallest_part(c: &Complex) -> Option<Float> {
    let parts = [c.real(), c.imag()];
    parts
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Float::with_val(64, p.abs_ref()))
        .min_by(|a, b| a.partial_cmp(b).unwrap())
        .or_else(|| Some(modulus(c)).filter(|m| !m.is_zero()))
}
