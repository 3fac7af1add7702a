//! Laplace continued fraction
//! `w(z) = (i/sqrt(pi)) / (z - (1/2) / (z - 1 / (z - (3/2) / (z - ...))))`
//! in extended precision, used as a third method for large `|z|`.

use num_complex::Complex64;
use rug::float::Constant;
use rug::{Complex, Float};

use crate::error::OracleError;
use crate::precision::bits_for_digits;
use crate::value::OracleValue;

const START_DEPTH: usize = 32;
pub const MAX_DEPTH: usize = 1 << 14;

fn evaluate(z: &Complex, depth: usize, prec: u32) -> Complex {
    let mut f = z.clone();
    for k in (1..=depth).rev() {
        // f = z - (k/2) / f
        let q = Float::with_val(prec, k as u32) / 2u32 / f;
        f = Complex::with_val(prec, z - q);
    }
    let mu0 = Complex::with_val(prec, (0, Float::with_val(prec, Constant::Pi).sqrt().recip()));
    mu0 / f
}

/// Absolute allowance for the exponentially small `e^{-z^2}`-type term
/// near the positive real axis, which the fraction only picks up at very
/// large depth: `2 erfc(sqrt 2 x y / |z|) e^{y^2 - x^2}` for `|x| > y`.
fn real_axis_allowance(z: Complex64) -> Float {
    let (x, y) = (z.re.abs(), z.im);
    if x <= y {
        return Float::new(64);
    }
    let arg = Float::with_val(64, std::f64::consts::SQRT_2 * x * y / z.norm());
    let e = Float::with_val(64, (y - x) * (y + x)).exp();
    arg.erfc() * e * 2u32
}

/// Deep continued fraction for `Im z >= 0`. Doubles the depth until two
/// consecutive depths agree to `10^-digits` or [`MAX_DEPTH`] is reached;
/// the estimate is returned either way, so callers must check it.
pub fn oracle_cf(z: Complex64, digits: u32) -> Result<OracleValue, OracleError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(OracleError::NonFinite { re: z.re, im: z.im });
    }
    if z.im < 0.0 || z.norm() < 1.0 {
        return Err(OracleError::OutOfRange {
            method: "continued fraction",
            re: z.re,
            im: z.im,
        });
    }
    let target = 10f64.powi(-(digits as i32));
    let prec = bits_for_digits(digits + 8) + 64;
    let zc = Complex::with_val(prec, (z.re, z.im));
    let allowance = real_axis_allowance(z);
    let mut depth = START_DEPTH;
    let mut prev = evaluate(&zc, depth, prec);
    loop {
        depth *= 2;
        let next = evaluate(&zc, depth, prec);
        let diff = Float::with_val(64, Complex::with_val(prec, &next - &prev).abs_ref());
        let err = diff + &allowance;
        let v = OracleValue::from_abs(next.clone(), &err);
        if v.est_error <= target || depth >= MAX_DEPTH {
            return Ok(v);
        }
        prev = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn far_from_origin_converges_quickly() {
        let v = oracle_cf(Complex64::new(100.0, 3.0), 30).unwrap();
        assert!(v.est_error < 1e-30);
        // leading term i / (sqrt(pi) z)
        let lead = Complex64::new(0.0, 1.0 / std::f64::consts::PI.sqrt()) / Complex64::new(100.0, 3.0);
        assert!((v.to_complex64() - lead).norm() / lead.norm() < 1e-4);
    }

    #[test]
    fn imaginary_axis_matches_erfc() {
        // w(iy) = e^{y^2} erfc(y)
        let v = oracle_cf(Complex64::new(0.0, 20.0), 30).unwrap();
        let y = Float::with_val(256, 20);
        let exact = Float::with_val(256, y.square_ref()).exp() * y.erfc();
        let d = Float::with_val(64, &v.re - &exact).abs() / exact.to_f64();
        assert!(d < 1e-30, "{d}");
        assert!(v.im.is_zero());
    }

    #[test]
    fn small_arguments_are_rejected() {
        assert!(oracle_cf(Complex64::new(0.5, 0.1), 30).is_err());
        assert!(oracle_cf(Complex64::new(20.0, -1.0), 30).is_err());
    }
}
