//! Dawson, erf and Fresnel integrals from their own definitions, without
//! going through `w`.

use num_complex::Complex64;
use rug::float::Constant;
use rug::{Complex, Float};

use crate::error::OracleError;
use crate::precision::{bits_below_one, bits_for_digits, refine};
use crate::quadrature::integrate;
use crate::value::{modulus, OracleValue};

fn not_converged(method: &'static str, re: f64, im: f64) -> OracleError {
    OracleError::NotConverged {
        method,
        re,
        im,
        est_error: f64::INFINITY,
    }
}

/// `daw(x) = int_0^x e^{t^2 - x^2} dt` by adaptive quadrature.
pub fn oracle_daw(x: f64, digits: u32) -> Result<OracleValue, OracleError> {
    if !x.is_finite() {
        return Err(OracleError::NonFinite { re: x, im: 0.0 });
    }
    if x.abs() > 100.0 {
        return Err(OracleError::OutOfRange {
            method: "dawson",
            re: x,
            im: 0.0,
        });
    }
    if x == 0.0 {
        return Ok(OracleValue::new(Float::new(64), Float::new(64), 0.0));
    }
    let z = Complex64::new(x, 0.0);
    refine("dawson", z, digits, |tol, scale| {
        let prec = bits_for_digits(digits + 8) + bits_below_one(scale) + 16;
        let xf = Float::with_val(prec, x.abs());
        let x2 = Float::with_val(prec, xf.square_ref());
        let f = |t: &Float| {
            let e = Float::with_val(prec, t.square_ref()) - &x2;
            Complex::with_val(prec, (e.exp(), 0))
        };
        // the integrand is concentrated in the last 1/x of the interval
        let initial = (2.0 * x.abs()).ceil().max(1.0) as usize;
        let a = Float::new(prec);
        let r = integrate(&f, &a, &xf, initial, tol, prec)
            .ok_or_else(|| not_converged("dawson", x, 0.0))?;
        let v = if x < 0.0 { -r.value } else { r.value };
        Ok((v, r.err))
    })
}

/// `erf(z) = 2/sqrt(pi) sum_n (-1)^n z^{2n+1} / (n! (2n+1))`, `|z| <= 8`.
pub fn oracle_erf(z: Complex64, digits: u32) -> Result<OracleValue, OracleError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(OracleError::NonFinite { re: z.re, im: z.im });
    }
    if z.norm() > 8.0 {
        return Err(OracleError::OutOfRange {
            method: "erf series",
            re: z.re,
            im: z.im,
        });
    }
    let cancel = (2.0 * z.norm_sqr() * std::f64::consts::LOG2_E).ceil() as u32;
    refine("erf series", z, digits, |tol, scale| {
        let prec = bits_for_digits(digits + 8) + bits_below_one(scale) + cancel;
        let zc = Complex::with_val(prec, (z.re, z.im));
        let mz2 = -Complex::with_val(prec, zc.square_ref());
        let r2 = z.norm_sqr();
        let two_over_sqrt_pi = Float::with_val(prec, 2u32) / Float::with_val(prec, Constant::Pi).sqrt();
        // u_n = (-z^2)^n z / n!, term_n = u_n / (2n+1)
        let mut u = zc;
        let mut acc = Complex::new(prec);
        let mut l1 = Float::new(64);
        let scaled_tol = Float::with_val(64, tol / two_over_sqrt_pi.to_f64());
        for n in 0u32..20_000 {
            let term = Complex::with_val(prec, &u / (2 * n + 1));
            l1 += modulus(&term);
            acc += &term;
            u *= &mz2;
            u /= n + 1;
            let q = r2 / (n as f64 + 2.0);
            if q < 0.5 {
                let tail = modulus(&u) / (1.0 - q);
                if tail <= scaled_tol {
                    let ulp = Float::with_val(64, Float::i_exp(1, 8 - prec as i32));
                    let err = (tail + l1 * ulp * (n + 4)) * two_over_sqrt_pi.to_f64();
                    return Ok((acc * &two_over_sqrt_pi, err));
                }
            }
        }
        Err(not_converged("erf series", z.re, z.im))
    })
}

/// `F(z) = int_0^z e^{i pi t^2 / 2} dt = z int_0^1 e^{i pi z^2 u^2 / 2} du`.
pub fn oracle_fresnel(z: Complex64, digits: u32) -> Result<OracleValue, OracleError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(OracleError::NonFinite { re: z.re, im: z.im });
    }
    if z.norm() > 10.0 {
        return Err(OracleError::OutOfRange {
            method: "fresnel",
            re: z.re,
            im: z.im,
        });
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Ok(OracleValue::new(Float::new(64), Float::new(64), 0.0));
    }
    // |integrand| <= e^{pi |x y|}
    let growth = (std::f64::consts::PI * (z.re * z.im).abs() * std::f64::consts::LOG2_E).ceil() as u32;
    refine("fresnel", z, digits, |tol, scale| {
        let prec = bits_for_digits(digits + 8) + bits_below_one(scale) + growth + 16;
        let zc = Complex::with_val(prec, (z.re, z.im));
        let pi = Float::with_val(prec, Constant::Pi);
        // c = i pi z^2 / 2
        let c = Complex::with_val(prec, zc.square_ref()).mul_i(false) * pi / 2u32;
        let f = |u: &Float| {
            let u2 = Float::with_val(prec, u.square_ref());
            Complex::with_val(prec, &c * &u2).exp()
        };
        let initial = (z.norm_sqr() as usize).max(2);
        let a = Float::new(prec);
        let b = Float::with_val(prec, 1);
        let zn = z.norm();
        let inner_tol = Float::with_val(64, tol / zn);
        let r = integrate(&f, &a, &b, initial, &inner_tol, prec)
            .ok_or_else(|| not_converged("fresnel", z.re, z.im))?;
        Ok((r.value * zc, r.err * zn))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros() {
        assert!(oracle_daw(0.0, 30).unwrap().re.is_zero());
        let e = oracle_erf(Complex64::new(0.0, 0.0), 30).unwrap();
        assert!(e.re.is_zero() && e.im.is_zero());
        assert!(oracle_fresnel(Complex64::new(0.0, 0.0), 30).unwrap().re.is_zero());
    }

    #[test]
    fn erf_matches_mpfr() {
        let v = oracle_erf(Complex64::new(1.5, 0.0), 30).unwrap();
        let exact = Float::with_val(256, 1.5).erf();
        let d = Float::with_val(64, &v.re - &exact).abs() / exact.to_f64();
        assert!(d < 1e-30, "{d}");
        assert!(v.im.is_zero());
    }

    #[test]
    fn daw_is_odd() {
        let a = oracle_daw(1.3, 30).unwrap();
        let b = oracle_daw(-1.3, 30).unwrap();
        assert_eq!(a.re, -b.re);
    }

    #[test]
    fn fresnel_large_argument_tends_to_half() {
        // C(x) -> 1/2 + sin(pi x^2/2) / (pi x)
        let v = oracle_fresnel(Complex64::new(8.0, 0.0), 30).unwrap();
        let c = v.re.to_f64();
        let approx = 0.5 + (std::f64::consts::PI * 32.0).sin() / (std::f64::consts::PI * 8.0);
        assert!((c - approx).abs() < 1e-3);
    }
}
