//! Laplace continued fraction for large `|z|`:
//!
//! ```text
//! w(z) = mu0 / (z - (1/2) / (z - 1 / (z - (3/2) / (z - 2 / ...))))
//! ```
//!
//! with `mu0 = i / sqrt(pi)`, which is what makes `w(z) ~ i / (sqrt(pi) z)`
//! as `|z| -> inf`.

use num_complex::Complex64;

use crate::error::EvalError;

/// 1 / sqrt(pi)
pub const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

/// Truncation depth used by the dispatcher.
///
/// Smallest depth whose double-precision evaluation stays within 1e-14
/// relative error (both parts) of the extended-precision reference over
/// `15 <= |z| <= 1e6`, `Im z >= 0`: depth 6 peaks at 2.3e-14 on the
/// threshold circle near the real axis, depth 7 at 6.6e-16. Regenerate with
/// `cargo run --release -p faddeeva-analysis --example calibrate_cf_depth`.
pub const CF_DEPTH: usize = 7;

/// Evaluates the truncated fraction bottom-up from `depth`.
///
/// Requires `|z| >= threshold` and `Im z >= 0`.
pub fn w_continued_fraction(
    z: Complex64,
    depth: usize,
    threshold: f64,
) -> Result<Complex64, EvalError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(EvalError::NonFinite { re: z.re, im: z.im });
    }
    let modulus = z.norm();
    if !(modulus >= threshold) {
        return Err(EvalError::BelowThreshold {
            modulus,
            threshold,
        });
    }
    if z.im < 0.0 {
        return Err(EvalError::WrongHalfPlane { re: z.re, im: z.im });
    }
    Ok(cf_unchecked(z, depth))
}

#[inline]
pub(crate) fn cf_unchecked(z: Complex64, depth: usize) -> Complex64 {
    let mut f = z;
    for k in (1..=depth).rev() {
        f = z - (0.5 * k as f64) / f;
    }
    Complex64::new(0.0, FRAC_1_SQRT_PI) / f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_term_on_imaginary_axis() {
        let y = 1e4;
        let w = w_continued_fraction(Complex64::new(0.0, y), CF_DEPTH, 15.0).unwrap();
        assert_eq!(w.im, 0.0);
        assert!(w.re > 0.0);
        let lead = FRAC_1_SQRT_PI / y;
        assert!((w.re - lead).abs() / lead < 1e-8);
    }

    #[test]
    fn first_term_dominates_far_out() {
        let w = w_continued_fraction(Complex64::new(100.0, 0.0), CF_DEPTH, 15.0).unwrap();
        let lead = Complex64::new(0.0, FRAC_1_SQRT_PI / 100.0);
        assert!((w - lead).norm() / lead.norm() <= 1e-4);
    }

    #[test]
    fn rejects_small_arguments() {
        assert!(matches!(
            w_continued_fraction(Complex64::new(3.0, 4.0), CF_DEPTH, 15.0),
            Err(EvalError::BelowThreshold { .. })
        ));
        assert!(w_continued_fraction(Complex64::new(20.0, -1.0), CF_DEPTH, 15.0).is_err());
        assert!(w_continued_fraction(Complex64::new(f64::INFINITY, 1.0), CF_DEPTH, 15.0).is_err());
    }
}
