use num_complex::Complex64;
use rug::float::Round;
use rug::{Complex, Float};

/// Reference value with a bound on its own componentwise relative error.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleValue {
    pub re: Float,
    pub im: Float,
    pub est_error: f64,
}

/// Validated values carry an error estimate at or below this.
pub const VALIDATED_ERROR: f64 = 1e-25;

impl OracleValue {
    pub fn new(re: Float, im: Float, est_error: f64) -> Self {
        Self { re, im, est_error }
    }

    /// Builds a value from `c` and an absolute error bound shared by both
    /// parts. Exactly zero parts are structural (e.g. `Im w` on the imaginary
    /// axis) and do not enter the relative estimate.
    pub(crate) fn from_abs(c: Complex, abs_err: &Float) -> Self {
        let est = rel_bound(c.real(), abs_err).max(rel_bound(c.imag(), abs_err));
        let (re, im) = c.into_real_imag();
        Self::new(re, im, est)
    }

    pub fn is_validated(&self) -> bool {
        self.est_error <= VALIDATED_ERROR
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn to_complex(&self) -> Complex {
        Complex::with_val(self.prec(), (&self.re, &self.im))
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Largest componentwise relative difference, measured against `self`.
    pub fn rel_diff(&self, other: &OracleValue) -> f64 {
        rel_part(&self.re, &other.re).max(rel_part(&self.im, &other.im))
    }

    /// Absolute error bound of the larger part.
    pub(crate) fn abs_error(&self) -> Float {
        let mut m = Float::with_val(64, self.re.abs_ref());
        let im = Float::with_val(64, self.im.abs_ref());
        if im > m {
            m = im;
        }
        m * self.est_error
    }
}

fn rel_bound(part: &Float, abs_err: &Float) -> f64 {
    if part.is_zero() {
        return 0.0;
    }
    let r = Float::with_val(64, abs_err / &*part.as_abs());
    r.to_f64_round(Round::Up)
}

fn rel_part(a: &Float, b: &Float) -> f64 {
    if a.is_zero() {
        return if b.is_zero() { 0.0 } else { f64::INFINITY };
    }
    let prec = a.prec().max(b.prec());
    let mut d = Float::with_val(prec, a - b);
    d.abs_mut();
    d /= &*a.as_abs();
    d.to_f64()
}

/// `|c|` as a low-precision float; never rounds a nonzero modulus to zero.
pub(crate) fn modulus(c: &Complex) -> Float {
    Float::with_val(64, c.abs_ref())
}
