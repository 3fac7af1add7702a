//! The rational approximation `w(z) ~ psi(z + i sigma)` with
//!
//! ```text
//! psi(z) = i 2 h e^{sigma^2} / z + sum_n (A_n - i z B_n) / (C_n^2 - z^2)
//! ```

use num_complex::Complex64;

use crate::error::EvalError;
use crate::params::CoefficientSet;

/// Denominator magnitudes below this are treated as a pole hit.
pub const POLE_GUARD: f64 = 1e-300;

/// Evaluates `psi` at an already shifted argument.
///
/// Fails with [`EvalError::PoleProximity`] when `z` is (numerically) at the
/// origin or at one of the poles `+-C_n`.
pub fn psi_eval(z: Complex64, coeffs: &CoefficientSet) -> Result<Complex64, EvalError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(EvalError::NonFinite { re: z.re, im: z.im });
    }
    let pole = || EvalError::PoleProximity { re: z.re, im: z.im };
    if z.norm() < POLE_GUARD {
        return Err(pole());
    }
    let zz = z * z;
    for &c2 in coeffs.c_squared() {
        if (Complex64::new(c2, 0.0) - zz).norm() < POLE_GUARD {
            return Err(pole());
        }
    }
    Ok(psi_unchecked(z, coeffs))
}

/// `psi` without pole checks; callers guarantee `Im z >= sigma`.
#[inline]
pub(crate) fn psi_unchecked(z: Complex64, coeffs: &CoefficientSet) -> Complex64 {
    let (zr, zi) = (z.re, z.im);
    let zz_re = zr * zr - zi * zi;
    let zz_im = 2.0 * zr * zi;

    // i p / z = p (zi + i zr) / |z|^2
    let inv_norm = 1.0 / (zr * zr + zi * zi);
    let p = coeffs.pole_prefactor();
    let mut sum_re = p * zi * inv_norm;
    let mut sum_im = p * zr * inv_norm;

    let a = coeffs.a();
    let b = coeffs.b();
    let c2 = coeffs.c_squared();
    for k in 0..c2.len() {
        // (A - i z B) / (C^2 - z^2)
        let num_re = a[k] + b[k] * zi;
        let num_im = -b[k] * zr;
        let den_re = c2[k] - zz_re;
        let den_im = -zz_im;
        let inv = 1.0 / (den_re * den_re + den_im * den_im);
        sum_re += (num_re * den_re + num_im * den_im) * inv;
        sum_im += (num_im * den_re - num_re * den_im) * inv;
    }
    Complex64::new(sum_re, sum_im)
}

/// `w(z) ~ psi(z + i sigma)` for `Im z >= 0`.
///
/// With `Im z >= 0` the shifted argument keeps `Im >= sigma >= 1`, so no
/// denominator can vanish.
pub fn w_rational(z: Complex64, coeffs: &CoefficientSet) -> Complex64 {
    debug_assert!(z.im >= 0.0, "rational form is derived for Im z >= 0");
    psi_unchecked(shift(z, coeffs), coeffs)
}

#[inline]
pub(crate) fn shift(z: Complex64, coeffs: &CoefficientSet) -> Complex64 {
    Complex64::new(z.re, z.im + coeffs.sigma())
}

/// Term-wise derivative `psi'(z)` of the rational form. Only used to check
/// the differential equation `w' + 2 z w = 2i/sqrt(pi)`.
pub fn psi_derivative(z: Complex64, coeffs: &CoefficientSet) -> Complex64 {
    let i = Complex64::i();
    let zz = z * z;
    let mut d = -i * coeffs.pole_prefactor() / zz;
    for k in 0..coeffs.len() {
        let a = coeffs.a()[k];
        let b = coeffs.b()[k];
        let den = coeffs.c_squared()[k] - zz;
        let num = -i * b * den + 2.0 * z * (a - i * z * b);
        d += num / (den * den);
    }
    d
}

/// Smallest `|C_n^2 - (z + i sigma)^2|` over all terms.
pub fn min_denominator(z: Complex64, coeffs: &CoefficientSet) -> f64 {
    let s = shift(z, coeffs);
    let zz = s * s;
    coeffs
        .c_squared()
        .iter()
        .map(|&c2| (Complex64::new(c2, 0.0) - zz).norm())
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ApproximationParams;

    fn coeffs() -> CoefficientSet {
        CoefficientSet::derive(&ApproximationParams::default())
    }

    #[test]
    fn pole_term_is_real_on_imaginary_axis() {
        let c = coeffs();
        let sigma = 1.5;
        let z = Complex64::new(0.0, sigma);
        let pole_only = Complex64::i() * c.pole_prefactor() / z;
        assert_eq!(pole_only.im, 0.0);
        assert!(pole_only.re > 0.0);
        assert!((pole_only.re - c.pole_prefactor() / sigma).abs() < 1e-15);
        // the whole sum stays real there
        assert_eq!(psi_eval(z, &c).unwrap().im, 0.0);
    }

    #[test]
    fn origin_of_w_is_close_to_one() {
        // The truncation error of the default configuration near the real
        // axis is about e^{-sigma / h} ~ 1e-11.
        let v = psi_eval(Complex64::new(0.0, 1.5), &coeffs()).unwrap();
        assert!((v - 1.0).norm() < 5e-11, "{v}");
    }

    #[test]
    fn pole_hits_are_reported() {
        let c = coeffs();
        assert!(matches!(
            psi_eval(Complex64::new(0.0, 0.0), &c),
            Err(EvalError::PoleProximity { .. })
        ));
        let pole = Complex64::new(c.c()[2], 0.0);
        assert!(matches!(
            psi_eval(pole, &c),
            Err(EvalError::PoleProximity { .. })
        ));
        assert!(psi_eval(Complex64::new(f64::NAN, 1.0), &c).is_err());
    }

    #[test]
    fn checked_and_unchecked_agree() {
        let c = coeffs();
        let z = Complex64::new(2.0, 2.5);
        assert_eq!(psi_eval(z, &c).unwrap(), psi_unchecked(z, &c));
        assert_eq!(
            w_rational(Complex64::new(2.0, 1.0), &c),
            psi_unchecked(z, &c)
        );
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let c = coeffs();
        let z = Complex64::new(1.3, 2.1);
        let h = 1e-5;
        let fd = (psi_unchecked(z + h, &c) - psi_unchecked(z - h, &c)) / (2.0 * h);
        let d = psi_derivative(z, &c);
        assert!((fd - d).norm() / d.norm() < 1e-8);
    }
}
