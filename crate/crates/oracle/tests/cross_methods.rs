use faddeeva_oracle::rug::float::Constant;
use faddeeva_oracle::rug::{Complex, Float};
use faddeeva_oracle::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PREC: u32 = 256;

fn c(x: f64, y: f64) -> Complex64 {
    Complex64::new(x, y)
}

fn rel(a: &Complex, b: &Complex) -> f64 {
    let d = Complex::with_val(PREC, a - b);
    let n = Float::with_val(64, b.abs_ref());
    (Float::with_val(64, d.abs_ref()) / n).to_f64()
}

#[test]
fn series_and_quadrature_agree_on_examples() {
    for z in [c(0.0, 1.0), c(3.0, 2.0), c(2.0, 1.0), c(0.0, 0.0)] {
        let s = oracle_series(z, 30).unwrap();
        let q = oracle_quadrature(z, 30).unwrap();
        assert!(s.is_validated() && q.is_validated());
        let d = s.rel_diff(&q);
        assert!(d <= 1e-25, "{z}: {d:e}");
        assert!(d <= 10.0 * (s.est_error + q.est_error), "{z}: {d:e}");
    }
}

#[test]
fn w_of_i_is_e_erfc_one() {
    let v = oracle_w(c(0.0, 1.0)).unwrap();
    let exact = Float::with_val(PREC, 1).erfc() * Float::with_val(PREC, 1).exp();
    let d = Float::with_val(64, &v.re - &exact).abs() / exact.to_f64();
    assert!(d <= 1e-25);
}

#[test]
fn quadrature_and_deep_fraction_agree_far_out() {
    let z = c(20_000.0, 0.01);
    let q = oracle_quadrature(z, 30).unwrap();
    let f = oracle_cf(z, 30).unwrap();
    assert!(q.rel_diff(&f) <= 1e-20);
}

#[test]
fn series_and_quadrature_agree_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let r = 10.0 * rng.gen::<f64>().sqrt();
        let t = rng.gen_range(0.0..std::f64::consts::PI);
        let z = c(r * t.cos(), r * t.sin());
        let s = oracle_series(z, 30).unwrap();
        let q = oracle_quadrature(z, 30).unwrap();
        assert!(s.rel_diff(&q) <= 1e-25, "{z}");
    }
}

#[test]
fn dawson_two_ways() {
    // daw(x) = sqrt(pi)/2 Im w(x) on the real axis
    let d = oracle_daw(1.0, 30).unwrap();
    let w = oracle_w(c(1.0, 0.0)).unwrap();
    let half_sqrt_pi = Float::with_val(PREC, Constant::Pi).sqrt() / 2u32;
    let via_w = Float::with_val(PREC, &w.im * &half_sqrt_pi);
    let diff = Float::with_val(64, &d.re - &via_w).abs() / via_w.to_f64();
    assert!(diff <= 1e-25, "{diff}");
}

#[test]
fn erf_two_ways() {
    // erf(2) = 1 - e^{-4} w(2i)
    let s = oracle_erf(c(2.0, 0.0), 30).unwrap();
    let w = oracle_w(c(0.0, 2.0)).unwrap();
    let via_w = 1u32 - Float::with_val(PREC, -4i32).exp() * &w.re;
    let diff = Float::with_val(64, &s.re - &via_w).abs() / via_w.to_f64();
    assert!(diff <= 1e-25, "{diff}");
    assert!(s.im.is_zero());
}

#[test]
fn erf_complex_two_ways() {
    let z = c(0.7, -0.4);
    let s = oracle_erf(z, 30).unwrap();
    let w = oracle_w(c(-z.im, z.re)).unwrap();
    let zc = Complex::with_val(PREC, (z.re, z.im));
    let e = Complex::with_val(PREC, -Complex::with_val(PREC, zc.square_ref())).exp();
    let via_w = Complex::with_val(PREC, (1, 0)) - e * w.to_complex();
    assert!(rel(&s.to_complex(), &via_w) <= 1e-25);
}

#[test]
fn limit_on_the_real_axis() {
    // w(x + i0) = e^{-x^2} + 2i/sqrt(pi) daw(x); at y = 1e-12 the offset is O(y)
    let two_over_sqrt_pi = Float::with_val(PREC, 2u32) / Float::with_val(PREC, Constant::Pi).sqrt();
    for x in [0.5, 1.0, 3.0] {
        let w = oracle_w(c(x, 1e-12)).unwrap();
        let d = oracle_daw(x, 30).unwrap();
        let xf = Float::with_val(PREC, x);
        let lim = Complex::with_val(
            PREC,
            ((-Float::with_val(PREC, xf.square_ref())).exp(), Float::with_val(PREC, &d.re * &two_over_sqrt_pi)),
        );
        let r = rel(&w.to_complex(), &lim);
        assert!(r <= 1e-11, "x={x}: {r:e}");
    }
}

#[test]
fn parity_in_x() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let x = rng.gen_range(0.0..30.0);
        let y = rng.gen_range(0.0..5.0);
        let a = oracle_w(c(x, y)).unwrap();
        let b = oracle_w(c(-x, y)).unwrap();
        let conj_b = Complex::with_val(PREC, (&b.re, -b.im.clone()));
        assert!(rel(&conj_b, &a.to_complex()) <= 1e-25, "({x}, {y})");
    }
}

#[test]
fn fresnel_matches_mpfr_style_limits() {
    // F(1) = C(1) + i S(1)
    let v = oracle_fresnel(c(1.0, 0.0), 30).unwrap();
    assert!((v.re.to_f64() - 0.779_893_400_376_822_8).abs() < 1e-15);
    assert!((v.im.to_f64() - 0.438_259_147_390_354_8).abs() < 1e-15);
    assert!(v.is_validated());
}

#[test]
fn lower_half_plane_values_are_validated() {
    for z in [c(1.0, -1.0), c(-3.0, -0.5), c(7.0, -2.0), c(0.0, -4.0)] {
        let v = oracle_w(z).unwrap();
        assert!(v.is_validated(), "{z}");
    }
}

#[test]
fn extended_coefficients_reproduce_the_rational_form_near_w() {
    // psi(i sigma) should be within the method's own truncation error of w(0)
    let e = coefficients::ExtendedCoefficients::new(16, 1.5, 6.0, 200);
    let v = e.psi(c(0.0, 1.5));
    let d = Float::with_val(64, v.real() - 1u32).abs().to_f64();
    assert!(d < 5e-11 && d > 0.0);
}
