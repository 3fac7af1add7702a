//! The validated entry point: method selection, cross-checking and the
//! lower half-plane.

use std::ops::Neg;

use num_complex::Complex64;
use rug::{Complex, Float};

use crate::cf::oracle_cf;
use crate::error::OracleError;
use crate::precision::bits_for_digits;
use crate::quadrature::{oracle_quadrature, quadrature};
use crate::series::oracle_series;
use crate::value::{OracleValue, VALIDATED_ERROR};

/// Significant digits requested from every method by [`oracle_w`].
pub const DEFAULT_DIGITS: u32 = 30;

/// Below this `|z|` the series is used directly.
pub const SERIES_BELOW: f64 = 10.0;

/// `w(z)` to about 30 significant digits per part, anywhere the result is
/// representable.
pub fn oracle_w(z: Complex64) -> Result<OracleValue, OracleError> {
    oracle_w_digits(z, DEFAULT_DIGITS)
}

pub fn oracle_w_digits(z: Complex64, digits: u32) -> Result<OracleValue, OracleError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(OracleError::NonFinite { re: z.re, im: z.im });
    }
    let v = if z.im < 0.0 {
        lower_half(z, digits)?
    } else {
        upper_half(z, digits)?
    };
    if v.est_error > VALIDATED_ERROR {
        return Err(OracleError::NotConverged {
            method: "oracle",
            re: z.re,
            im: z.im,
            est_error: v.est_error,
        });
    }
    Ok(v)
}

fn upper_half(z: Complex64, digits: u32) -> Result<OracleValue, OracleError> {
    if z.norm() <= SERIES_BELOW {
        return oracle_series(z, digits);
    }
    let on_axis = z.im == 0.0;
    let mut q = if on_axis {
        quadrature(z, digits, true)?
    } else {
        oracle_quadrature(z, digits)?
    };
    let mut c = oracle_cf(z, digits)?;
    if on_axis {
        // the fraction has no real part here; compare imaginary parts only
        c.re = Float::new(c.re.prec());
    }
    let combined = q.est_error + c.est_error;
    let diff = q.rel_diff(&c);
    if diff > 10.0 * combined {
        return Err(OracleError::Inconsistent {
            re: z.re,
            im: z.im,
            diff,
            combined,
        });
    }
    if on_axis {
        let prec = q.prec();
        let x = Float::with_val(prec, z.re);
        q.re = Float::with_val(prec, x.square_ref()).neg().exp();
    }
    Ok(q)
}

/// `w(z) = 2 e^{-z^2} - w(-z)` with the exponential in extended precision.
/// When the two terms nearly cancel, `w(-z)` is recomputed with more
/// digits.
fn lower_half(z: Complex64, digits: u32) -> Result<OracleValue, OracleError> {
    let target = 10f64.powi(-(digits as i32));
    let mut inner_digits = digits;
    let mut best = f64::INFINITY;
    for _ in 0..6 {
        let inner = upper_half(-z, inner_digits)?;
        let prec = bits_for_digits(inner_digits + 8) + 64;
        let zc = Complex::with_val(prec, (z.re, z.im));
        let e = Complex::with_val(prec, zc.square_ref()).neg().exp() * 2u32;
        let value = e - inner.to_complex();
        let ulp = Float::with_val(64, Float::i_exp(1, 8 - prec as i32));
        let err = inner.abs_error() + Float::with_val(64, value.abs_ref()) * ulp;
        let v = OracleValue::from_abs(value, &err);
        if v.est_error <= target {
            return Ok(v);
        }
        best = best.min(v.est_error);
        // digits lost to cancellation, plus margin
        let lost = (v.est_error / target).log10().ceil().max(1.0) as u32;
        inner_digits += lost + 2;
    }
    Err(OracleError::NotConverged {
        method: "reflection",
        re: z.re,
        im: z.im,
        est_error: best,
    })
}
