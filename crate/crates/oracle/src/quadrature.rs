//! `w(z) = 1/sqrt(pi) int_0^inf exp(-t^2/4 + i z t) dt` by adaptive
//! Gauss-Legendre panels.
//!
//! For `|x| >= ROTATE_ABOVE` the path is turned to `t = s e^{i theta}`,
//! `theta = +-pi/4`, which turns the Gaussian into a pure phase and the
//! oscillation `e^{ixt}` into exponential decay `e^{-(|x|+y) s / sqrt 2}`.
//! Cauchy's theorem applies because the integrand decays on the whole sector
//! between the two rays when `x theta >= 0` and `y >= 0`.

use num_complex::Complex64;
use rug::float::Constant;
use rug::{Assign, Complex, Float};

use crate::error::OracleError;
use crate::legendre::rule;
use crate::precision::{bits_below_one, bits_for_digits, refine, round_prec};
use crate::value::OracleValue;

/// Above this `|Re z|` the contour is rotated.
pub const ROTATE_ABOVE: f64 = 5.0;

const LOW_ORDER: usize = 20;
const HIGH_ORDER: usize = 40;
const MAX_PANELS: usize = 50_000;

pub(crate) struct Integral {
    pub value: Complex,
    /// Absolute error bound: panel-wise `|G20 - G40|` plus rounding.
    pub err: Float,
}

fn panel(f: &dyn Fn(&Float) -> Complex, lo: &Float, hi: &Float, n: usize, prec: u32) -> (Complex, Float) {
    let r = rule(n, round_prec(prec));
    let half = Float::with_val(prec, hi - lo) / 2u32;
    let mid = Float::with_val(prec, hi + lo) / 2u32;
    let mut acc = Complex::new(prec);
    let mut l1 = Float::new(64);
    for (x, w) in r.nodes.iter().zip(&r.weights) {
        let t = Float::with_val(prec, x * &half) + &mid;
        let v = f(&t) * w;
        l1 += Float::with_val(64, v.abs_ref());
        acc += v;
    }
    (acc * &half, l1 * half.abs())
}

/// Adaptive integration of `f` over `[a, b]`, starting from `initial`
/// equal panels. Returns `None` when the panel budget is exhausted.
pub(crate) fn integrate(
    f: &dyn Fn(&Float) -> Complex,
    a: &Float,
    b: &Float,
    initial: usize,
    tol_abs: &Float,
    prec: u32,
) -> Option<Integral> {
    let total = Float::with_val(prec, b - a);
    let mut stack: Vec<(Float, Float)> = (0..initial.max(1))
        .rev()
        .map(|i| {
            let lo = Float::with_val(prec, &total * i as u32) / initial.max(1) as u32 + a;
            let hi = Float::with_val(prec, &total * (i + 1) as u32) / initial.max(1) as u32 + a;
            (lo, hi)
        })
        .collect();
    let mut value = Complex::new(prec);
    let mut err = Float::new(64);
    let mut l1 = Float::new(64);
    let mut panels = 0usize;
    while let Some((lo, hi)) = stack.pop() {
        panels += 1;
        if panels > MAX_PANELS {
            return None;
        }
        let (g_lo, _) = panel(f, &lo, &hi, LOW_ORDER, prec);
        let (g_hi, g_l1) = panel(f, &lo, &hi, HIGH_ORDER, prec);
        let diff = Float::with_val(64, Complex::with_val(prec, &g_hi - &g_lo).abs_ref());
        let share = Float::with_val(64, &hi - &lo) / &total * tol_abs;
        if diff <= share {
            value += g_hi;
            err += diff;
            l1 += g_l1;
        } else {
            let mid = Float::with_val(prec, &lo + &hi) / 2u32;
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
    }
    // rounding: a few ulps per accumulated node value
    let ulp = Float::with_val(64, Float::i_exp(1, 8 - prec as i32));
    err += l1 * ulp * (HIGH_ORDER as u32 * 4);
    Some(Integral { value, err })
}

/// Truncation point `T` for the infinite integral and its tail bound
/// (already divided by `sqrt(pi)` like the integral).
fn cutoff(x: f64, y: f64, rotated: bool, ln_tail: f64) -> f64 {
    let ln_sqrt_pi = 0.5 * std::f64::consts::PI.ln();
    if rotated {
        // int_T^inf e^{-a s} ds = e^{-a T} / a
        let a = (x.abs() + y) / std::f64::consts::SQRT_2;
        ((-ln_tail - a.ln() - ln_sqrt_pi) / a).max(1.0 / a)
    } else {
        // int_T^inf e^{-t^2/4 - y t} dt <= e^{-T^2/4 - y T} / (T/2 + y)
        let g = |t: f64| -t * t / 4.0 - y * t - (t / 2.0 + y).ln() - ln_sqrt_pi - ln_tail;
        let mut hi = 2.0;
        while g(hi) > 0.0 {
            hi *= 2.0;
        }
        let mut lo = 0.0;
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if g(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        hi
    }
}

/// `w(z)` for `Im z >= 0` from the integral representation.
pub fn oracle_quadrature(z: Complex64, digits: u32) -> Result<OracleValue, OracleError> {
    quadrature(z, digits, false)
}

/// With `imag_only`, the real part is dropped before error control. On the
/// real axis `Re w = e^{-x^2}` is known exactly but would need `x^2 log2 e`
/// bits of cancellation to come out of the integral.
pub(crate) fn quadrature(z: Complex64, digits: u32, imag_only: bool) -> Result<OracleValue, OracleError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(OracleError::NonFinite { re: z.re, im: z.im });
    }
    if z.im < 0.0 {
        return Err(OracleError::OutOfRange {
            method: "quadrature",
            re: z.re,
            im: z.im,
        });
    }
    let (x, y) = (z.re, z.im);
    let rotated = x.abs() >= ROTATE_ABOVE;
    refine("quadrature", z, digits, |tol, scale| {
        let ln_tail = tol.to_f64().ln() - 4f64.ln();
        let t_max = cutoff(x, y, rotated, ln_tail);
        let growth = (1.0 + z.norm() * t_max).log2().ceil() as u32;
        let prec = bits_for_digits(digits + 8) + bits_below_one(scale) + growth;

        // direction e^{i theta}
        let dir = if rotated {
            let r = Float::with_val(prec, 0.5f64).sqrt();
            let s = if x > 0.0 { r.clone() } else { -r.clone() };
            Complex::with_val(prec, (r, s))
        } else {
            Complex::with_val(prec, (1, 0))
        };
        let zc = Complex::with_val(prec, (x, y));
        // exponent c2 s^2 + c1 s with c2 = -dir^2 / 4, c1 = i z dir
        let c2 = Complex::with_val(prec, dir.square_ref()) / -4i32;
        let c1 = Complex::with_val(prec, &zc * &dir).mul_i(false);
        let f = |s: &Float| {
            let s2 = Float::with_val(prec, s.square_ref());
            let e = Complex::with_val(prec, &c2 * &s2) + Complex::with_val(prec, &c1 * s);
            e.exp()
        };
        let freq = 2.0 * 0.25 * t_max + z.norm();
        let initial = ((t_max * freq / 3.0).ceil() as usize).max((t_max / 2.0).ceil() as usize).max(1);
        let a = Float::new(prec);
        let b = Float::with_val(prec, t_max);
        let integral = integrate(&f, &a, &b, initial, tol, prec).ok_or(
            OracleError::NotConverged {
                method: "quadrature",
                re: x,
                im: y,
                est_error: f64::INFINITY,
            },
        )?;
        let sqrt_pi = Float::with_val(prec, Constant::Pi).sqrt();
        let mut value = integral.value * dir / &sqrt_pi;
        if imag_only {
            value.mut_real().assign(0);
        }
        let tail = Float::with_val(64, ln_tail).exp();
        let err = Float::with_val(64, integral.err / sqrt_pi.to_f64()) + tail;
        Ok((value, err))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_is_one() {
        let v = oracle_quadrature(Complex64::new(0.0, 0.0), 30).unwrap();
        assert!(v.est_error <= 1e-30);
        let d = Float::with_val(64, &v.re - 1u32).abs();
        assert!(d < 1e-30, "{d}");
        assert!(v.im.is_zero());
    }

    #[test]
    fn imaginary_axis_matches_erfc() {
        // w(i) = e erfc(1)
        let v = oracle_quadrature(Complex64::new(0.0, 1.0), 30).unwrap();
        let exact = Float::with_val(200, 1).erfc() * Float::with_val(200, 1).exp();
        let d = Float::with_val(64, &v.re - &exact).abs() / exact.to_f64();
        assert!(d < 1e-29, "{d}");
    }

    #[test]
    fn rotated_paths_are_mirror_images() {
        let z = Complex64::new(6.0, 0.5);
        let rotated = oracle_quadrature(z, 30).unwrap();
        let mirrored = oracle_quadrature(Complex64::new(-6.0, 0.5), 30).unwrap();
        assert!(rotated.re == mirrored.re);
        assert!(Float::with_val(rotated.prec(), &rotated.im + &mirrored.im).is_zero());
        assert!(rotated.est_error < 1e-30);
    }

    #[test]
    fn lower_half_plane_is_rejected() {
        assert!(matches!(
            oracle_quadrature(Complex64::new(1.0, -0.1), 30),
            Err(OracleError::OutOfRange { .. })
        ));
    }

    #[test]
    fn cutoff_tail_bounds_hold() {
        let t = cutoff(0.0, 0.0, false, (1e-40f64).ln());
        assert!((-t * t / 4.0).exp() / (t / 2.0) / std::f64::consts::PI.sqrt() <= 1.0001e-40);
        let t = cutoff(100.0, 1.0, true, (1e-40f64).ln());
        let a = 101.0 / std::f64::consts::SQRT_2;
        assert!((-a * t).exp() / a / std::f64::consts::PI.sqrt() <= 1.0001e-40);
    }
}
