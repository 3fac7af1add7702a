//! Small-`y` band `0 <= y < y_narrow` next to the real axis.
//!
//! The real part blends the exact real-axis value `e^{-x^2}` with the
//! rational result at the reference height `y_min`:
//!
//! ```text
//! K(x, y) ~ (1 - y/y_min) e^{-x^2} + (y/y_min) K(x, y_min)
//! ```
//!
//! The imaginary part is carried from `y_min` down to `y` with a
//! second-order Taylor step whose derivatives come from the differential
//! equation `w' = -2 z w + 2i/sqrt(pi)`; holding `L(x, y_min)` fixed leaves
//! an `O(y_min)` error of order 1e-5.

use num_complex::Complex64;

use crate::continued_fraction::FRAC_1_SQRT_PI;
use crate::params::{ApproximationParams, CoefficientSet};
use crate::rational::w_rational;
use crate::symmetry::exp_neg_sq;

pub fn w_narrow_band(
    x: f64,
    y: f64,
    params: &ApproximationParams,
    coeffs: &CoefficientSet,
) -> Complex64 {
    debug_assert!(y >= 0.0 && y < params.y_narrow());
    let y_min = params.y_min();
    let z_min = Complex64::new(x, y_min);
    let w_min = w_rational(z_min, coeffs);

    // exp_neg_sq keeps Re w bit-identical to Re e^{-z^2} on the real axis
    let gauss = exp_neg_sq(Complex64::new(x, 0.0))
        .map(|e| e.re)
        .unwrap_or(0.0);
    let weight = y / y_min;
    let re = (1.0 - weight) * gauss + weight * w_min.re;

    // w(z_min + i d) ~ w + i d w' - d^2/2 w''
    let d = y - y_min;
    let two_i_over_sqrt_pi = Complex64::new(0.0, 2.0 * FRAC_1_SQRT_PI);
    let w1 = -2.0 * z_min * w_min + two_i_over_sqrt_pi;
    let w2 = -2.0 * w_min - 2.0 * z_min * w1;
    let im = w_min.im + d * w1.re - 0.5 * d * d * w2.im;

    Complex64::new(re, im)
}
