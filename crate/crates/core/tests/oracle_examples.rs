//! Operation examples checked against the extended-precision oracle.

mod common;

use common::*;
use faddeeva_core::*;
use faddeeva_oracle as oracle;
use faddeeva_oracle::coefficients::ExtendedCoefficients;
use faddeeva_oracle::rug::Float;

fn c(x: f64, y: f64) -> Complex64 {
    Complex64::new(x, y)
}

fn f() -> Faddeeva {
    Faddeeva::default()
}

fn ulps(a: f64, r: &Float) -> f64 {
    rel(a, r) / f64::EPSILON
}

#[test]
fn first_coefficients_match_extended_evaluation() {
    let p = ApproximationParams::default();
    let cs = CoefficientSet::derive(&p);
    let e = ExtendedCoefficients::new(16, 1.5, 6.0, 200);
    for n in 0..16 {
        assert!(ulps(cs.a()[n], &e.a[n]) <= 4.0, "A_{}", n + 1);
        assert!(ulps(cs.b()[n], &e.b[n]) <= 4.0, "B_{}", n + 1);
        assert!(ulps(cs.c()[n], &e.c[n]) <= 1.0, "C_{}", n + 1);
    }
    assert!(ulps(cs.pole_prefactor(), &e.pole_prefactor) <= 4.0);
}

#[test]
fn psi_matches_extended_summation() {
    let cs = CoefficientSet::derive(&ApproximationParams::default());
    let e = ExtendedCoefficients::new(16, 1.5, 6.0, 200);
    let z = c(1.0, 1.5);
    let v = psi_eval(z, &cs).unwrap();
    let r = e.psi(z);
    assert!(ulps(v.re, r.real()) <= 4.0);
    assert!(ulps(v.im, r.imag()) <= 4.0);
}

#[test]
fn w_at_origin_via_psi() {
    // Default configuration: the truncation error next to the real axis is
    // about e^{-sigma/h} ~ 1e-11, so w(0) = psi(i sigma) is met at 5e-11.
    let cs = CoefficientSet::derive(&ApproximationParams::default());
    let v = psi_eval(c(0.0, 1.5), &cs).unwrap();
    assert!((v - 1.0).norm() <= 5e-11);
}

#[test]
fn rational_form_examples() {
    let cs = f().coeffs().clone();
    for (z, tol) in [(c(2.0, 1.0), 1e-14), (c(5.0, 5.0), 1e-14), (c(0.0, 1e-6), 1e-9)] {
        let r = oracle::oracle_w(z).unwrap();
        let e = max_rel(w_rational(z, &cs), &r);
        assert!(e <= tol, "{z}: {e:e}");
    }
}

#[test]
fn continued_fraction_examples() {
    let z = c(15.0, 15.0);
    let v = w_continued_fraction(z, CF_DEPTH, 15.0).unwrap();
    assert!(max_rel(v, &oracle::oracle_w(z).unwrap()) <= 1e-14);

    // z = 100: leading term alone is within 1e-4, full depth within 1e-14.
    // On the real axis Re w = e^{-10000} underflows, so compare the modulus.
    let z = c(100.0, 0.0);
    let lead = Complex64::new(0.0, FRAC_1_SQRT_PI) / z;
    let r = oracle::oracle_w(z).unwrap();
    assert!(rel_norm(lead, &r) <= 1e-4);
    let v = w_continued_fraction(z, CF_DEPTH, 15.0).unwrap();
    assert!(rel_norm(v, &r) <= 1e-14);
    assert!(rel(v.im, &r.im) <= 1e-14);
}

#[test]
fn narrow_band_examples() {
    let p = ApproximationParams::default();
    let cs = CoefficientSet::derive(&p);
    let v = w_narrow_band(0.0, 0.0, &p, &cs);
    assert_eq!(v.re, 1.0);
    assert!(max_rel(v, &oracle::oracle_w(c(0.0, 0.0)).unwrap()) <= 1e-9);

    let v = w_narrow_band(3.0, 5e-7, &p, &cs);
    assert!(max_rel(v, &oracle::oracle_w(c(3.0, 5e-7)).unwrap()) <= 1e-9);
}

#[test]
fn reflection_and_mirror_examples() {
    let z = c(1.0, -1.0);
    let r = f().evaluate(z).unwrap();
    assert!(r.region.reflected);
    assert!(max_rel(r.value, &oracle::oracle_w(z).unwrap()) <= 1e-13);

    let z = c(-2.0, 1.0);
    let r = f().evaluate(z).unwrap();
    assert_eq!(r.region.to_string(), "ParityMirrored(Rational)");
    assert!(max_rel(r.value, &oracle::oracle_w(z).unwrap()) <= 1e-14);

    assert!(matches!(
        f().evaluate(c(3.0, -30.0)),
        Err(EvalError::Overflow { .. })
    ));
}

#[test]
fn dispatcher_examples() {
    let z = c(20_000.0, 1.0);
    let r = f().evaluate(z).unwrap();
    assert_eq!(r.region.base, BaseRegion::ContinuedFraction);
    assert!(max_rel(r.value, &oracle::oracle_w(z).unwrap()) <= 1e-14);

    // 7 - 2i: both sides of the reflection identity against the oracle
    let z = c(7.0, -2.0);
    let r = f().evaluate(z).unwrap();
    assert_eq!(r.region.to_string(), "ReflectedLowerHalf(ParityMirrored(Rational))");
    let lower = oracle::oracle_w(z).unwrap();
    assert!(max_rel(r.value, &lower) <= 1e-13);
    let upper = f().w(-z).unwrap();
    let e2 = exp_neg_sq(z).unwrap() * 2.0;
    let residual = (r.value - (e2 - upper)).norm() / r.value.norm();
    assert!(residual <= 1e-13);
}

#[test]
fn related_function_examples() {
    let f = f();
    let one = c(1.0, 0.0);
    let k = voigt(&f, 0.0, 1.0).unwrap().k;
    assert!(rel(k, &oracle::oracle_w(c(0.0, 1.0)).unwrap().re) <= 1e-14);

    let e = erf_complex(&f, one).unwrap();
    assert!(max_rel(e, &oracle::oracle_erf(one, 30).unwrap()) <= 1e-14);
    let z = c(2.0, 3.0);
    assert!(max_rel(erf_complex(&f, z).unwrap(), &oracle::oracle_erf(z, 30).unwrap()) <= 1e-13);

    let d50 = dawson(&f, c(50.0, 0.0)).unwrap();
    assert!((d50.re - 0.01).abs() / 0.01 <= 1e-3);
    assert!(max_rel(d50, &oracle::oracle_daw(50.0, 30).unwrap()) <= 1e-14);

    let z = c(1.0, 1.0);
    let zr = oracle::oracle_w(z).unwrap();
    let zp = plasma_dispersion(&f, z).unwrap();
    let sqrt_pi = std::f64::consts::PI.sqrt();
    // Z = i sqrt(pi) w: Re Z = -sqrt(pi) Im w, Im Z = sqrt(pi) Re w
    assert!(rel(-zp.re / sqrt_pi, &zr.im) <= 1e-14);
    assert!(rel(zp.im / sqrt_pi, &zr.re) <= 1e-14);

    for x in [1.0, 2.0] {
        let z = c(x, 0.0);
        assert!(max_rel(fresnel(&f, z).unwrap(), &oracle::oracle_fresnel(z, 30).unwrap()) <= 1e-12);
    }

    let phi = normal_distribution(&f, one).unwrap();
    let half_erf = oracle::oracle_erf(c(std::f64::consts::FRAC_1_SQRT_2, 0.0), 30).unwrap().re / 2u32;
    assert!(rel(phi.re, &half_erf) <= 1e-14);

    for (x, y) in [(1.0, 0.0), (10.0, 0.0)] {
        let v = erfc_scaled(&f, c(x, y)).unwrap();
        assert!(max_rel(v, &oracle::oracle_w(c(-y, x)).unwrap()) <= 1e-14);
    }
}

#[test]
fn dawson_at_one_is_limited_by_the_real_axis_error() {
    // daw(1) = sqrt(pi)/2 Im w(1) inherits the ~1e-11 truncation error of
    // the rational form next to the real axis.
    let d = dawson(&f(), c(1.0, 0.0)).unwrap();
    let e = max_rel(d, &oracle::oracle_daw(1.0, 30).unwrap());
    assert!(e <= 5e-11, "{e:e}");
}

#[test]
fn batch_results_equal_pointwise_results() {
    let f = f();
    let pts = [c(0.0, 0.0), c(2.0, 1.0), c(f64::NAN, 1.0), c(-7.0, -2.0), c(2.0, 1.0), c(3.0, -30.0)];
    let b = f.evaluate_batch(&pts);
    assert_eq!(b.len(), pts.len());
    for (z, r) in pts.iter().zip(&b) {
        match (f.evaluate(*z), r) {
            (Ok(a), Ok(b)) => assert_eq!(a, *b),
            (Err(a), Err(b)) => assert_eq!(a.to_string(), b.to_string()),
            other => panic!("{z}: {other:?}"),
        }
    }
    assert_eq!(b[1].as_ref().unwrap().value, b[4].as_ref().unwrap().value);
    assert!(f.evaluate_batch(&[]).is_empty());
}
