#![allow(dead_code)]

use faddeeva_core::Complex64;
use faddeeva_oracle::rug::Float;
use faddeeva_oracle::OracleValue;

/// Componentwise relative error `|ref - approx| / |ref|` in extended
/// precision; zero reference parts are skipped.
pub fn rel_parts(approx: Complex64, r: &OracleValue) -> (f64, f64) {
    (rel(approx.re, &r.re), rel(approx.im, &r.im))
}

pub fn rel(a: f64, r: &Float) -> f64 {
    if r.is_zero() {
        return if a == 0.0 { 0.0 } else { f64::INFINITY };
    }
    let d = Float::with_val(r.prec() + 64, r - a);
    (d / r).to_f64().abs()
}

pub fn max_rel(approx: Complex64, r: &OracleValue) -> f64 {
    let (a, b) = rel_parts(approx, r);
    a.max(b)
}

/// `|ref - approx| / |ref|` over the complex modulus.
pub fn rel_norm(approx: Complex64, r: &OracleValue) -> f64 {
    let rc = r.to_complex();
    let d = Float::with_val(64, (rc.clone() - faddeeva_oracle::rug::Complex::with_val(rc.prec().0, (approx.re, approx.im))).abs_ref());
    (d / Float::with_val(64, rc.abs_ref())).to_f64()
}
