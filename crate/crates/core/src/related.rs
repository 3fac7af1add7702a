//! Functions expressible through `w`: Voigt pair, complex `erf`, scaled
//! `erfc`, Dawson integral, plasma dispersion function, Fresnel integral and
//! the normal-distribution integral.
//!
//! Every exponential prefactor goes through the overflow-guarded kernel in
//! [`crate::symmetry`], so extreme arguments fail with
//! [`EvalError::Overflow`] rather than producing infinities.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::dispatch::Faddeeva;
use crate::error::EvalError;
use crate::symmetry::{exp_neg_sq, exp_with_phase};

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Voigt function `K = Re w` and its companion `L = Im w` for `y >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VoigtPair {
    pub k: f64,
    pub l: f64,
}

pub fn voigt(f: &Faddeeva, x: f64, y: f64) -> Result<VoigtPair, EvalError> {
    if y < 0.0 {
        return Err(EvalError::NegativeHeight(y));
    }
    let w = f.w(Complex64::new(x, y))?;
    Ok(VoigtPair { k: w.re, l: w.im })
}

/// `erf(z) = 1 - e^{-z^2} w(iz)`.
pub fn erf_complex(f: &Faddeeva, z: Complex64) -> Result<Complex64, EvalError> {
    let e = exp_neg_sq(z)?;
    let w = f.w(Complex64::i() * z)?;
    Ok(1.0 - e * w)
}

/// `e^{z^2} erfc(z) = w(iz)`.
pub fn erfc_scaled(f: &Faddeeva, z: Complex64) -> Result<Complex64, EvalError> {
    f.w(Complex64::i() * z)
}

/// `daw(z) = sqrt(pi) (w(z) - e^{-z^2}) / (2i)`.
pub fn dawson(f: &Faddeeva, z: Complex64) -> Result<Complex64, EvalError> {
    let e = exp_neg_sq(z)?;
    let w = f.w(z)?;
    Ok(Complex64::new(0.0, -0.5 * SQRT_PI) * (w - e))
}

/// `Z(z) = i sqrt(pi) w(z)`.
pub fn plasma_dispersion(f: &Faddeeva, z: Complex64) -> Result<Complex64, EvalError> {
    Ok(Complex64::new(0.0, SQRT_PI) * f.w(z)?)
}

/// `F(z) = int_0^z e^{i pi t^2 / 2} dt
///       = (1+i)/2 [1 - e^{i pi z^2/2} w(sqrt(pi) (1+i) z / 2)]`.
///
/// The inner argument leaves the upper half-plane when `Im z < -Re z`, so the
/// reflection path (and its overflow limit) is exercised there.
pub fn fresnel(f: &Faddeeva, z: Complex64) -> Result<Complex64, EvalError> {
    let (x, y) = (z.re, z.im);
    // i pi z^2 / 2 = -pi x y + i pi (x^2 - y^2) / 2
    let e = exp_with_phase(-PI * x * y, 0.5 * PI * (x - y) * (x + y), 1.0, z)?;
    let one_plus_i = Complex64::new(1.0, 1.0);
    let w = f.w(0.5 * SQRT_PI * one_plus_i * z)?;
    Ok(0.5 * one_plus_i * (1.0 - e * w))
}

/// `Phi(z) = 1/sqrt(2 pi) int_0^z e^{-t^2/2} dt = [1 - e^{-z^2/2} w(iz/sqrt 2)] / 2`.
///
/// This is the integral from zero, without the `+1/2` of the usual normal
/// CDF: `Phi(0) = 0` and `Phi(+inf) = 1/2`.
pub fn normal_distribution(f: &Faddeeva, z: Complex64) -> Result<Complex64, EvalError> {
    let (x, y) = (z.re, z.im);
    // -z^2/2 = (y^2 - x^2)/2 - i x y
    let e = exp_with_phase(0.5 * (y - x) * (y + x), -x * y, 1.0, z)?;
    let w = f.w(Complex64::i() * z * FRAC_1_SQRT_2)?;
    Ok(0.5 * (1.0 - e * w))
}
