//! Extended-precision evaluation of the rational approximation itself:
//! coefficients `A_n, B_n, C_n` and the finite sum `psi(z)`. Used to
//! separate double rounding from approximation error.

use num_complex::Complex64;
use rug::float::Constant;
use rug::{Complex, Float};

pub struct ExtendedCoefficients {
    pub a: Vec<Float>,
    pub b: Vec<Float>,
    pub c: Vec<Float>,
    pub pole_prefactor: Float,
    prec: u32,
}

impl ExtendedCoefficients {
    /// `h = t_margin / (2 pi n_terms)`, all in `prec` bits.
    pub fn new(n_terms: usize, sigma: f64, t_margin: f64, prec: u32) -> Self {
        let pi = Float::with_val(prec, Constant::Pi);
        let h = Float::with_val(prec, t_margin) / (Float::with_val(prec, &pi * 2u32) * n_terms as u32);
        let s = Float::with_val(prec, sigma);
        let s2 = Float::with_val(prec, s.square_ref());
        let mut a = Vec::with_capacity(n_terms);
        let mut b = Vec::with_capacity(n_terms);
        let mut c = Vec::with_capacity(n_terms);
        for n in 1..=n_terms as u32 {
            let cn = Float::with_val(prec, &pi * 2u32) * &h * n;
            let damp = Float::with_val(prec, &s2 - Float::with_val(prec, cn.square_ref())).exp();
            let phase = Float::with_val(prec, &cn * &s) * 2u32;
            let (sin, cos) = phase.sin_cos(Float::new(prec));
            let an = Float::with_val(prec, &pi * 8u32) * Float::with_val(prec, h.square_ref()) * n * &damp * sin;
            let bn = Float::with_val(prec, &h * 4u32) * &damp * cos;
            a.push(an);
            b.push(bn);
            c.push(cn);
        }
        let pole_prefactor = Float::with_val(prec, &h * 2u32) * s2.exp();
        Self {
            a,
            b,
            c,
            pole_prefactor,
            prec,
        }
    }

    /// `psi(z) = i p / z + sum_n (A_n - i z B_n) / (C_n^2 - z^2)`.
    pub fn psi(&self, z: Complex64) -> Complex {
        let prec = self.prec;
        let zc = Complex::with_val(prec, (z.re, z.im));
        let zz = Complex::with_val(prec, zc.square_ref());
        let mut acc = Complex::with_val(prec, (0, &self.pole_prefactor)) / &zc;
        for ((a, b), c) in self.a.iter().zip(&self.b).zip(&self.c) {
            let num = Complex::with_val(prec, &zc * b).mul_i(true) + a;
            let den = Complex::with_val(prec, -&zz) + Float::with_val(prec, c.square_ref());
            acc += num / den;
        }
        acc
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_is_three_eighths_n() {
        let e = ExtendedCoefficients::new(16, 1.5, 6.0, 200);
        for (n, c) in e.c.iter().enumerate() {
            let d = Float::with_val(64, c - 0.375 * (n + 1) as f64).abs();
            assert!(d < 1e-55);
        }
    }

    #[test]
    fn psi_at_i_sigma_is_real() {
        let e = ExtendedCoefficients::new(16, 1.5, 6.0, 200);
        let v = e.psi(Complex64::new(0.0, 1.5));
        assert!(v.imag().is_zero());
    }
}
