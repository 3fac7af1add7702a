//! Invariants of the evaluator that hold independently of any particular
//! reference value.

mod common;

use common::*;
use faddeeva_core::*;
use faddeeva_oracle as oracle;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use std::f64::consts::FRAC_2_SQRT_PI as TWO_OVER_SQRT_PI;

fn f() -> Faddeeva {
    Faddeeva::default()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn coefficients_are_deterministic() {
    let p = ApproximationParams::default();
    assert_eq!(CoefficientSet::derive(&p), CoefficientSet::derive(&p));
}

#[test]
fn parity_is_exact_off_the_axis() {
    let f = f();
    let mut r = rng(11);
    for _ in 0..2000 {
        let x: f64 = r.gen_range(0.0..30.0);
        let y: f64 = 10f64.powf(r.gen_range(-6.0..1.5));
        let a = f.w(Complex64::new(x, y)).unwrap();
        let b = f.w(Complex64::new(-x, y)).unwrap();
        assert_eq!(a.conj(), b, "{x} {y}");
    }
}

#[test]
fn parity_holds_for_the_reference() {
    for (x, y) in [(1.3, 0.7), (4.0, 0.01), (0.2, 3.0)] {
        let a = oracle::oracle_w(Complex64::new(x, y)).unwrap();
        let b = oracle::oracle_w(Complex64::new(-x, y)).unwrap();
        let dre = faddeeva_oracle::rug::Float::with_val(128, &a.re - &b.re);
        let dim = faddeeva_oracle::rug::Float::with_val(128, &a.im + &b.im);
        assert!(dre.to_f64().abs() <= 1e-25 && dim.to_f64().abs() <= 1e-25);
    }
}

/// Reflection residual scaled by the largest term involved. Dividing by
/// `|w(-z)|` alone measures the cancellation in `2e^{-z^2} - w(z)` rather
/// than the evaluator once `|e^{-z^2}|` dwarfs `|w(-z)|`.
fn reflection_residual(f: &Faddeeva, z: Complex64) -> f64 {
    let wm = f.w(-z).unwrap();
    let wp = f.w(z).unwrap();
    let e2 = exp_neg_sq(z).unwrap() * 2.0;
    let scale = wm.norm().max(e2.norm()).max(wp.norm());
    (wm - (e2 - wp)).norm() / scale
}

#[test]
fn reflection_identity() {
    let f = f();
    let mut r = rng(13);
    let mut n = 0;
    while n < 1000 {
        let z = Complex64::new(r.gen_range(-6.0..6.0), r.gen_range(-6.0..6.0));
        if z.norm() > 6.0 || z.im == 0.0 {
            continue;
        }
        n += 1;
        assert!(reflection_residual(&f, z) <= 1e-13, "{z}");
    }
}

#[test]
fn rational_form_satisfies_the_differential_equation() {
    let cs = f().coeffs().clone();
    let mut r = rng(17);
    for _ in 0..100 {
        let z = Complex64::new(r.gen_range(0.0..10.0), r.gen_range(0.1..10.0));
        let s = Complex64::new(z.re, z.im + cs.sigma());
        let w = psi_eval(s, &cs).unwrap();
        let d = psi_derivative(s, &cs);
        let res = (d + 2.0 * z * w - Complex64::new(0.0, TWO_OVER_SQRT_PI)).norm() / TWO_OVER_SQRT_PI;
        assert!(res <= 1e-9, "{z}: {res:e}");
    }
}

#[test]
fn denominators_stay_away_from_zero() {
    let cs = f().coeffs().clone();
    let bound = cs.sigma() * cs.c()[0];
    assert!(bound > 0.5);
    let mut r = rng(19);
    for _ in 0..5000 {
        let z = Complex64::new(r.gen_range(-40.0..40.0), 10f64.powf(r.gen_range(-8.0..2.0)));
        assert!(min_denominator(z, &cs) >= bound, "{z}");
    }
    for x in [0.0, 0.375, 1.0, 6.0] {
        assert!(min_denominator(Complex64::new(x, 0.0), &cs) >= bound);
    }
}

#[test]
fn origin_and_small_y_limit() {
    let f = f();
    assert!((f.w(Complex64::new(0.0, 0.0)).unwrap() - 1.0).norm() <= 1e-13);
    // Im w(x + i0) = 2/sqrt(pi) daw(x). At y = 1e-8 the true function
    // already sits ~1e-8 away from that limit, so carry the first-order step
    // w(x + iy) ~ w(x) + iy w'(x) with w' = -2zw + 2i/sqrt(pi).
    let y = 1e-8;
    for x in [0.5, 1.0, 3.0, 10.0] {
        let w = f.w(Complex64::new(x, y)).unwrap();
        let daw = oracle::oracle_daw(x, 30).unwrap().to_complex64().re;
        let limit = Complex64::new((-x * x).exp(), TWO_OVER_SQRT_PI * daw);
        let slope = -2.0 * x * limit + Complex64::new(0.0, TWO_OVER_SQRT_PI);
        let want = limit + Complex64::new(0.0, y) * slope;
        let e = (w - want).norm() / want.norm();
        assert!(e <= 1e-9, "{x}: {e:e}");
    }
}

#[test]
fn continued_fraction_region_against_reference() {
    let f = f();
    let mut r = rng(23);
    let mut worst = 0.0f64;
    for _ in 0..60 {
        let m = 10f64.powf(r.gen_range(15f64.log10()..6.0));
        let t = r.gen_range(0.0..std::f64::consts::PI);
        let z = Complex64::new(m * t.cos(), m * t.sin());
        let v = f.evaluate(z).unwrap();
        let o = oracle::oracle_w(z).unwrap();
        worst = worst.max(max_rel(v.value, &o));
    }
    assert!(worst <= 1e-14, "{worst:e}");
}

#[test]
fn consistency_web() {
    let f = f();
    let mut r = rng(29);
    let sqrt_pi = std::f64::consts::PI.sqrt();
    for _ in 0..100 {
        let z = Complex64::new(r.gen_range(-3.0..3.0), r.gen_range(0.0..3.0));
        let e = exp_neg_sq(z).unwrap();
        let w = f.w(z).unwrap();
        let wi = f.w(Complex64::i() * z).unwrap();
        let scale = 1f64.max((e * wi).norm());
        let erf = erf_complex(&f, z).unwrap();
        assert!((erf + e * wi - 1.0).norm() / scale <= 1e-13);

        let daw = dawson(&f, z).unwrap();
        let scale = 1f64.max(e.norm()).max(w.norm());
        let res = 2.0 * Complex64::i() * daw / sqrt_pi + e - w;
        assert!(res.norm() / scale <= 1e-13);

        let phi = normal_distribution(&f, z).unwrap();
        let half = 0.5 * erf_complex(&f, z / std::f64::consts::SQRT_2).unwrap();
        assert!((phi - half).norm() / 1f64.max(half.norm()) <= 1e-13, "{z}");
    }
}

#[test]
fn odd_functions() {
    let f = f();
    let mut r = rng(31);
    type Func = fn(&Faddeeva, Complex64) -> Result<Complex64, EvalError>;
    let funcs: [(&str, Func); 4] = [
        ("erf", erf_complex),
        ("dawson", dawson),
        ("fresnel", fresnel),
        ("normal", normal_distribution),
    ];
    for _ in 0..100 {
        let z = Complex64::new(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        for (name, g) in funcs {
            let a = g(&f, z).unwrap();
            let b = g(&f, -z).unwrap();
            assert!((a + b).norm() / 1f64.max(a.norm()) <= 1e-13, "{name}({z})");
        }
    }
}

#[test]
fn voigt_profile_is_positive_and_even() {
    let f = f();
    let mut r = rng(37);
    for _ in 0..500 {
        let x: f64 = r.gen_range(-50.0..50.0);
        let y: f64 = 10f64.powf(r.gen_range(-5.0..2.0));
        let a = voigt(&f, x, y).unwrap();
        let b = voigt(&f, -x, y).unwrap();
        assert!(a.k > 0.0, "{x} {y}");
        assert_eq!(a.k, b.k);
        assert_eq!(a.l, -b.l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn every_finite_point_has_one_region(x in -1e6f64..1e6, y in -30f64..1e6) {
        let f = f();
        let z = Complex64::new(x, y);
        match f.evaluate(z) {
            Ok(r) => {
                prop_assert!(r.value.re.is_finite() && r.value.im.is_finite());
                prop_assert_eq!(r.region.reflected, y < 0.0);
                let q = Complex64::new(x.abs(), y.abs());
                prop_assert_eq!(r.region.base, base_region(q, f.params()));
                // the tag round-trips through its display form
                let parsed: RegionTag = r.region.to_string().parse().unwrap();
                prop_assert_eq!(parsed, r.region);
            }
            Err(e) => prop_assert!(y < 0.0, "{e}"),
        }
    }

    #[test]
    fn evaluation_is_deterministic(x in -100f64..100.0, y in -5f64..100.0) {
        let f = f();
        let z = Complex64::new(x, y);
        prop_assert_eq!(f.evaluate(z), f.evaluate(z));
    }
}
