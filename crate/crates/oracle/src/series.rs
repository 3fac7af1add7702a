//! Maclaurin series `w(z) = sum_k (iz)^k / Gamma(k/2 + 1)`.

use num_complex::Complex64;
use rug::float::Constant;
use rug::{Complex, Float};

use crate::error::OracleError;
use crate::precision::{bits_below_one, bits_for_digits, refine};
use crate::value::{modulus, OracleValue};

/// Largest `|z|` accepted by [`oracle_series`].
pub const SERIES_RADIUS: f64 = 12.0;

const MAX_TERMS: usize = 20_000;

/// Sums the series; `tol_abs` bounds the truncation error.
///
/// Even and odd terms obey the same two-step recurrence
/// `t_{k+2} = t_k (iz)^2 / (k/2 + 1)` with `t_0 = 1`, `t_1 = 2iz / sqrt(pi)`.
pub(crate) fn sum(z: Complex64, tol_abs: &Float, prec: u32) -> Option<(Complex, Float)> {
    let iz = Complex::with_val(prec, (z.re, z.im)).mul_i(false);
    let iz2 = Complex::with_val(prec, iz.square_ref());
    let sqrt_pi = Float::with_val(prec, Constant::Pi).sqrt();
    let mut even = Complex::with_val(prec, (1, 0));
    let mut odd = iz * 2u32 / sqrt_pi;
    let mut acc = Complex::new(prec);
    let mut l1 = Float::new(64);
    let r2 = z.norm_sqr();
    let mut k = 0usize;
    loop {
        acc += &even;
        acc += &odd;
        l1 += modulus(&even) + modulus(&odd);
        // next pair is t_{k+2}, t_{k+3}
        even *= &iz2;
        even *= 2u32;
        even /= (k + 2) as u32;
        odd *= &iz2;
        odd *= 2u32;
        odd /= (k + 3) as u32;
        k += 2;
        // ratio of successive pairs is at most 2|z|^2 / (k + 2) from here on
        let q = 2.0 * r2 / (k as f64 + 2.0);
        if q < 0.5 {
            let tail = (modulus(&even) + modulus(&odd)) / (1.0 - q);
            if tail <= *tol_abs {
                let ulp = Float::with_val(64, Float::i_exp(1, 8 - prec as i32));
                let err = tail + l1 * ulp * (k as u32 + 4);
                return Some((acc, err));
            }
        }
        if k > MAX_TERMS {
            return None;
        }
    }
}

/// `w(z)` from the Maclaurin series, `|z| <= 12`, any sign of `Im z`.
pub fn oracle_series(z: Complex64, digits: u32) -> Result<OracleValue, OracleError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(OracleError::NonFinite { re: z.re, im: z.im });
    }
    if z.norm() > SERIES_RADIUS {
        return Err(OracleError::OutOfRange {
            method: "series",
            re: z.re,
            im: z.im,
        });
    }
    // terms peak near e^{|z|^2}; the result can be as small as e^{-x^2}
    let cancel = (2.0 * z.norm_sqr() * std::f64::consts::LOG2_E).ceil() as u32;
    refine("series", z, digits, |tol, scale| {
        let prec = bits_for_digits(digits + 8) + bits_below_one(scale) + cancel;
        sum(z, tol, prec).ok_or(OracleError::NotConverged {
            method: "series",
            re: z.re,
            im: z.im,
            est_error: f64::INFINITY,
        })
    })
}
