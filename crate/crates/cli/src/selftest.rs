//! Invariant suites that need no reference cache.
//!
//! Residuals are scaled by the largest quantity involved, so each suite
//! measures the evaluator rather than cancellation in the identity itself.

use std::f64::consts::{PI, SQRT_2};

use faddeeva_core::{
    base_region, dawson, erf_complex, exp_neg_sq, min_denominator, normal_distribution,
    psi_derivative, psi_eval, voigt, Complex64, EvalError, Faddeeva,
};
use faddeeva_oracle::oracle_daw;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::FunctionKind;

pub use std::f64::consts::FRAC_2_SQRT_PI as TWO_OVER_SQRT_PI;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub points: usize,
    pub worst: f64,
    pub worst_at: Option<Complex64>,
    pub tol: f64,
    /// Set when a point could not be evaluated at all.
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.worst <= self.tol
    }

    pub fn line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "suite {:<12} {verdict}  worst={:.3e} tol={:.0e} points={}",
            self.name, self.worst, self.tol, self.points
        );
        if let Some(z) = self.worst_at.filter(|_| !self.passed()) {
            s += &format!(" at z=({:e}, {:e})", z.re, z.im);
        }
        if let Some(m) = &self.failure {
            s += &format!(" error: {m}");
        }
        s
    }
}

struct Tracker {
    r: SuiteResult,
}

impl Tracker {
    fn new(name: &'static str, tol: f64) -> Self {
        Self {
            r: SuiteResult {
                name,
                points: 0,
                worst: 0.0,
                worst_at: None,
                tol,
                failure: None,
            },
        }
    }

    fn record(&mut self, z: Complex64, v: f64) {
        self.r.points += 1;
        // NaN counts as the worst possible outcome
        if v.is_nan() || v > self.r.worst {
            self.r.worst = if v.is_nan() { f64::INFINITY } else { v };
            self.r.worst_at = Some(z);
        }
    }

    fn check(&mut self, z: Complex64, v: Result<f64, EvalError>) {
        match v {
            Ok(v) => self.record(z, v),
            Err(e) => {
                self.r.points += 1;
                self.r.worst_at = Some(z);
                self.r.failure.get_or_insert_with(|| e.to_string());
            }
        }
    }

    fn done(self) -> SuiteResult {
        self.r
    }
}

fn rng(seed: u64, suite: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ suite)
}

fn ulp(v: f64) -> f64 {
    let a = v.abs();
    if a == 0.0 {
        f64::MIN_POSITIVE * f64::EPSILON
    } else {
        f64::from_bits(a.to_bits() + 1) - a
    }
}

/// `|w(0) - 1|`.
pub fn origin(f: &Faddeeva) -> SuiteResult {
    let mut t = Tracker::new("origin", 1e-13);
    let z = Complex64::new(0.0, 0.0);
    t.check(z, f.w(z).map(|w| (w - 1.0).norm()));
    t.done()
}

/// `w(-z) = 2e^{-z^2} - w(z)` on `|z| <= 6`, `Im z != 0`.
pub fn reflection(f: &Faddeeva, seed: u64) -> SuiteResult {
    let mut t = Tracker::new("reflection", 1e-13);
    let mut r = rng(seed, 1);
    while t.r.points < 1000 {
        let z = Complex64::new(r.gen_range(-6.0..6.0), r.gen_range(-6.0..6.0));
        if z.norm() > 6.0 || z.im == 0.0 {
            continue;
        }
        t.check(z, reflection_residual(f, z));
    }
    t.done()
}

pub fn reflection_residual(f: &Faddeeva, z: Complex64) -> Result<f64, EvalError> {
    let wm = f.w(-z)?;
    let wp = f.w(z)?;
    let e2 = exp_neg_sq(z)? * 2.0;
    let scale = wm.norm().max(e2.norm()).max(wp.norm());
    Ok((wm - (e2 - wp)).norm() / scale)
}

/// `w(-x + iy) = conj w(x + iy)` for `y >= y_narrow`, in ulps.
pub fn parity(f: &Faddeeva, seed: u64) -> SuiteResult {
    let mut t = Tracker::new("parity", 1.0);
    let mut r = rng(seed, 2);
    let l0 = f.params().y_narrow().log10();
    for _ in 0..1000 {
        let z = Complex64::new(r.gen_range(0.0..40.0), 10f64.powf(r.gen_range(l0..2.0)));
        let v = f.w(z).and_then(|a| {
            let b = f.w(Complex64::new(-z.re, z.im))?.conj();
            Ok(((a.re - b.re).abs() / ulp(a.re)).max((a.im - b.im).abs() / ulp(a.im)))
        });
        t.check(z, v);
    }
    t.done()
}

/// Residual of `w' + 2zw = 2i/sqrt(pi)` for the rational form with its
/// term-wise derivative, relative to `2/sqrt(pi)`.
pub fn ode(f: &Faddeeva, seed: u64) -> SuiteResult {
    let mut t = Tracker::new("ode", 1e-9);
    let mut r = rng(seed, 3);
    for _ in 0..100 {
        let z = Complex64::new(r.gen_range(0.0..=10.0), r.gen_range(0.1..=10.0));
        t.check(z, ode_residual(f, z));
    }
    t.done()
}

pub fn ode_residual(f: &Faddeeva, z: Complex64) -> Result<f64, EvalError> {
    let cs = f.coeffs();
    let s = Complex64::new(z.re, z.im + cs.sigma());
    let w = psi_eval(s, cs)?;
    let d = psi_derivative(s, cs);
    Ok((d + 2.0 * z * w - Complex64::new(0.0, TWO_OVER_SQRT_PI)).norm() / TWO_OVER_SQRT_PI)
}

/// Small-`y` limit `w(x + iy) -> e^{-x^2} + 2i/sqrt(pi) daw(x)` at
/// `y = 1e-8`, carried to first order in `y` (the true function moves
/// ~1e-8 away from the limit by then).
pub fn limit(f: &Faddeeva) -> SuiteResult {
    let mut t = Tracker::new("limit", 1e-8);
    let y = 1e-8;
    for x in [0.5, 1.0, 3.0, 10.0] {
        let z = Complex64::new(x, y);
        let daw = match oracle_daw(x, 20) {
            Ok(d) => d.to_complex64().re,
            Err(e) => {
                t.r.failure.get_or_insert_with(|| e.to_string());
                continue;
            }
        };
        let lim = Complex64::new((-x * x).exp(), TWO_OVER_SQRT_PI * daw);
        let want = lim + Complex64::new(0.0, y) * (-2.0 * x * lim + Complex64::new(0.0, TWO_OVER_SQRT_PI));
        t.check(z, f.w(z).map(|w| (w - want).norm() / want.norm()));
    }
    t.done()
}

/// `min_n |C_n^2 - (z + i sigma)^2| >= sigma C_1` for `y >= 0`; reports
/// `sigma C_1 / min` so anything above 1 is a violation.
pub fn no_pole(f: &Faddeeva, seed: u64) -> SuiteResult {
    let mut t = Tracker::new("no_pole", 1.0);
    let cs = f.coeffs();
    let bound = cs.sigma() * cs.c()[0];
    let mut r = rng(seed, 4);
    for k in 0..1000 {
        let y = if k % 10 == 0 { 0.0 } else { 10f64.powf(r.gen_range(-8.0..2.0)) };
        let z = Complex64::new(r.gen_range(-40.0..40.0), y);
        t.record(z, bound / min_denominator(z, cs));
    }
    t.done()
}

/// The erf, Dawson and normal-distribution identities evaluated both ways
/// on 100 upper-half-plane points.
pub fn consistency(f: &Faddeeva, seed: u64) -> SuiteResult {
    let mut t = Tracker::new("consistency", 1e-13);
    let mut r = rng(seed, 5);
    let sqrt_pi = PI.sqrt();
    for _ in 0..100 {
        let z = Complex64::new(r.gen_range(-3.0..3.0), r.gen_range(0.0..3.0));
        let v = (|| {
            let e = exp_neg_sq(z)?;
            let w = f.w(z)?;
            let wi = f.w(Complex64::i() * z)?;
            let erf = erf_complex(f, z)?;
            let r1 = (erf + e * wi - 1.0).norm() / 1f64.max((e * wi).norm());
            let daw = dawson(f, z)?;
            let r2 = (2.0 * Complex64::i() * daw / sqrt_pi + e - w).norm()
                / 1f64.max(e.norm()).max(w.norm());
            let phi = normal_distribution(f, z)?;
            let half = 0.5 * erf_complex(f, z / SQRT_2)?;
            let r3 = (phi - half).norm() / 1f64.max(half.norm());
            Ok(r1.max(r2).max(r3))
        })();
        t.check(z, v);
    }
    t.done()
}

/// erf, Dawson, Fresnel and the normal-distribution integral are odd. Each
/// is `c (1 - p w(u))` or `c (w(u) - p)` for an exponential prefactor `p`,
/// so the residual is scaled by `|p w|`, and by `|u|^2`: rounding of `u`
/// reaches the phase of `e^{-u^2}` amplified by `2|u|^2`.
pub fn oddness(f: &Faddeeva, seed: u64) -> SuiteResult {
    const FUNCS: [FunctionKind; 4] = [
        FunctionKind::Erf,
        FunctionKind::Dawson,
        FunctionKind::Fresnel,
        FunctionKind::Normal,
    ];
    let mut t = Tracker::new("oddness", 1e-13);
    let mut r = rng(seed, 6);
    for _ in 0..100 {
        let z = Complex64::new(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        for g in FUNCS {
            let v = (|| {
                let (a, _) = g.apply(f, z)?;
                let (b, _) = g.apply(f, -z)?;
                let u = g.w_argument(z);
                let pw = prefactor(g, z) * f.w(u)?.norm();
                let scale = 1f64.max(a.norm()).max(pw) * 1f64.max(u.norm_sqr());
                Ok((a + b).norm() / scale)
            })();
            t.check(z, v);
        }
    }
    t.done()
}

fn prefactor(g: FunctionKind, z: Complex64) -> f64 {
    let (x, y) = (z.re, z.im);
    match g {
        FunctionKind::Fresnel => (-PI * x * y).exp(),
        FunctionKind::Normal => (0.5 * (y - x) * (y + x)).exp(),
        _ => ((y - x) * (y + x)).exp(),
    }
}

/// Every finite point lands in the base region the dispatch rules name,
/// with the symmetry flags matching its quadrant; reports the mismatch count.
pub fn totality(f: &Faddeeva, seed: u64) -> SuiteResult {
    let mut t = Tracker::new("totality", 0.0);
    let p = f.params();
    let mut r = rng(seed, 7);
    let mut pts: Vec<Complex64> = (0..2000)
        .map(|_| {
            let m = 10f64.powf(r.gen_range(-8.0..6.0));
            let a = r.gen_range(-PI..PI);
            Complex64::new(m * a.cos(), (m * a.sin()).max(-25.0))
        })
        .collect();
    let cf = p.z_cf_threshold();
    let yn = p.y_narrow();
    pts.extend([
        Complex64::new(cf, 0.0),
        Complex64::new(0.0, cf),
        Complex64::new(1.0, yn),
        Complex64::new(1.0, yn * (1.0 - f64::EPSILON)),
        Complex64::new(-0.0, -0.0),
        Complex64::new(0.0, 0.0),
    ]);
    let mut mismatches = 0.0;
    for z in pts {
        let q = Complex64::new(z.re.abs(), z.im.abs());
        let want = base_region(q, p);
        match f.evaluate(z) {
            Ok(e) => {
                let ok = e.region.base == want
                    && e.region.reflected == (z.im < 0.0)
                    && e.region.mirrored == ((if z.im < 0.0 { -z.re } else { z.re }) < 0.0)
                    && e.value.re.is_finite()
                    && e.value.im.is_finite();
                if !ok {
                    mismatches += 1.0;
                    t.r.worst_at = Some(z);
                }
            }
            Err(EvalError::Overflow { .. }) if z.im < 0.0 => {}
            Err(e) => {
                t.r.failure.get_or_insert_with(|| e.to_string());
                t.r.worst_at = Some(z);
            }
        }
        t.r.points += 1;
    }
    t.r.worst = mismatches;
    t.done()
}

/// `K > 0`, `K` even and `L` odd in `x`; reports the violation count.
pub fn voigt_profile(f: &Faddeeva, seed: u64) -> SuiteResult {
    let mut t = Tracker::new("voigt", 0.0);
    let mut r = rng(seed, 8);
    let mut bad = 0.0;
    for _ in 0..500 {
        let x: f64 = r.gen_range(-50.0..50.0);
        let y: f64 = 10f64.powf(r.gen_range(-5.0..2.0));
        let z = Complex64::new(x, y);
        let v = voigt(f, x, y).and_then(|a| Ok((a, voigt(f, -x, y)?)));
        match v {
            Ok((a, b)) => {
                if !(a.k > 0.0 && a.k == b.k && a.l == -b.l) {
                    bad += 1.0;
                    t.r.worst_at = Some(z);
                }
                t.r.points += 1;
            }
            Err(e) => t.check(z, Err(e)),
        }
    }
    t.r.worst = bad;
    t.done()
}

pub fn run_all(f: &Faddeeva, seed: u64) -> Vec<SuiteResult> {
    vec![
        origin(f),
        reflection(f, seed),
        parity(f, seed),
        ode(f, seed),
        limit(f),
        no_pole(f, seed),
        consistency(f, seed),
        oddness(f, seed),
        totality(f, seed),
        voigt_profile(f, seed),
    ]
}
