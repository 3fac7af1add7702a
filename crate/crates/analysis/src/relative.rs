use faddeeva_core::Complex64;
use faddeeva_oracle::rug::Float;
use faddeeva_oracle::OracleValue;

/// Componentwise relative errors; `None` where the reference part is
/// exactly zero and the ratio is undefined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelErrors {
    pub dre: Option<f64>,
    pub dim: Option<f64>,
}

/// `|Re ref - Re approx| / |Re ref|` and the same for the imaginary parts.
/// The difference is formed in the reference's precision, so errors far
/// below one ulp of the approximation are still resolved.
pub fn relative_errors(approx: Complex64, reference: &OracleValue) -> RelErrors {
    RelErrors {
        dre: part(approx.re, &reference.re),
        dim: part(approx.im, &reference.im),
    }
}

fn part(a: f64, r: &Float) -> Option<f64> {
    if r.is_zero() {
        return None;
    }
    let mut d = Float::with_val(r.prec() + 64, r - a);
    d /= r;
    Some(d.to_f64().abs())
}
