//! Overflow-guarded `e^{-z^2}` and the two symmetry maps that bring any
//! argument into the first quadrant.

use num_complex::Complex64;

use crate::error::EvalError;

/// Largest exponent whose exponential is finite in double precision.
pub const MAX_EXPONENT: f64 = 709.782_712_893_384;

/// `e^{-z^2} = e^{y^2 - x^2} (cos 2xy - i sin 2xy)`, refusing exponents that
/// would overflow instead of returning infinities.
pub fn exp_neg_sq(z: Complex64) -> Result<Complex64, EvalError> {
    scaled_exp_neg_sq(z, 1.0)
}

/// `factor * e^{-z^2}` with the same overflow contract as [`exp_neg_sq`].
pub fn scaled_exp_neg_sq(z: Complex64, factor: f64) -> Result<Complex64, EvalError> {
    let (x, y) = (z.re, z.im);
    let exponent = (y - x) * (y + x);
    exp_with_phase(exponent, -2.0 * x * y, factor, z)
}

/// `factor * e^{exponent} (cos phase + i sin phase)`; `z` is reported on
/// overflow.
pub(crate) fn exp_with_phase(
    exponent: f64,
    phase: f64,
    factor: f64,
    z: Complex64,
) -> Result<Complex64, EvalError> {
    let overflow = || EvalError::Overflow {
        re: z.re,
        im: z.im,
        exponent,
    };
    if exponent.is_nan() || exponent > MAX_EXPONENT {
        return Err(overflow());
    }
    let magnitude = factor * exponent.exp();
    let (s, c) = phase.sin_cos();
    let v = Complex64::new(magnitude * c, magnitude * s);
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(overflow())
    }
}

/// `w(z) = 2 e^{-z^2} - w(-z)` for `Im z < 0`, given `w_upper = w(-z)`.
pub fn reflect_lower_half(z: Complex64, w_upper: Complex64) -> Result<Complex64, EvalError> {
    if !(z.im < 0.0) {
        return Err(EvalError::WrongHalfPlane { re: z.re, im: z.im });
    }
    let v = scaled_exp_neg_sq(z, 2.0)? - w_upper;
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(EvalError::Overflow {
            re: z.re,
            im: z.im,
            exponent: z.im * z.im - z.re * z.re,
        })
    }
}

/// `w(-x + iy) = conj(w(x + iy))` for `y >= 0`.
#[inline]
pub fn mirror_negative_x(w_pos: Complex64) -> Complex64 {
    w_pos.conj()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_matches_complex_exp() {
        for &(x, y) in &[(0.3, 0.4), (-1.2, 2.0), (3.0, -0.5), (0.0, 0.0)] {
            let z = Complex64::new(x, y);
            let expected = (-(z * z)).exp();
            let got = exp_neg_sq(z).unwrap();
            assert!((got - expected).norm() <= 1e-14 * expected.norm());
        }
    }

    #[test]
    fn overflow_is_signalled() {
        let err = exp_neg_sq(Complex64::new(3.0, -30.0)).unwrap_err();
        match err {
            EvalError::Overflow { exponent, .. } => assert_eq!(exponent, 891.0),
            other => panic!("unexpected {other:?}"),
        }
        // 2 e^{709.5} overflows even though e^{709.5} does not
        assert!(scaled_exp_neg_sq(Complex64::new(0.0, 709.5f64.sqrt()), 2.0).is_err());
        assert!(reflect_lower_half(Complex64::new(3.0, -30.0), Complex64::new(0.1, 0.0)).is_err());
    }

    #[test]
    fn underflow_is_silent() {
        assert_eq!(exp_neg_sq(Complex64::new(40.0, 0.0)).unwrap(), Complex64::new(0.0, -0.0));
    }

    #[test]
    fn reflection_on_imaginary_axis_stays_real() {
        let w_i = Complex64::new(0.427_583_576_155_807, 0.0);
        let v = reflect_lower_half(Complex64::new(0.0, -1.0), w_i).unwrap();
        assert_eq!(v.im, 0.0);
        assert!((v.re - (2.0 * 1f64.exp() - w_i.re)).abs() < 1e-15);
    }

    #[test]
    fn reflection_requires_lower_half() {
        assert!(matches!(
            reflect_lower_half(Complex64::new(1.0, 0.5), Complex64::new(1.0, 0.0)),
            Err(EvalError::WrongHalfPlane { .. })
        ));
    }

    #[test]
    fn mirror_conjugates() {
        assert_eq!(
            mirror_negative_x(Complex64::new(0.25, -0.5)),
            Complex64::new(0.25, 0.5)
        );
    }
}
