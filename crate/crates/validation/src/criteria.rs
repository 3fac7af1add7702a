use std::f64::consts::{FRAC_1_SQRT_2, PI};

use faddeeva_analysis::{
    default_grid_cache, default_hitran_cache, hitran_accuracy_sample, hitran_signature,
    relative_errors, sweep_domain, CachedOracle, GridSpec, DEFAULT_SEED,
};
use faddeeva_cli::commands::bench::throughput;
use faddeeva_cli::selftest;
use faddeeva_core::{
    dawson, erf_complex, exp_neg_sq, fresnel, normal_distribution, BaseRegion, Complex64,
    Faddeeva,
};
use faddeeva_oracle::{
    oracle_daw, oracle_erf, oracle_fresnel, oracle_quadrature, oracle_series, oracle_w, OracleValue,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::tolerances::*;
use crate::Verdict;

use std::f64::consts::FRAC_2_SQRT_PI as TWO_OVER_SQRT_PI;

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ criterion)
}

fn verdict(id: &'static str, title: &'static str, r: Result<(bool, String), String>) -> Verdict {
    let (passed, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
    Verdict { id, title, passed, detail }
}

/// `|a - r| / |r|` over the complex modulus.
fn rel_modulus(a: Complex64, r: &OracleValue) -> f64 {
    let r = r.to_complex64();
    (a - r).norm() / r.norm()
}

/// Largest componentwise relative error; zero reference parts are skipped.
fn rel_parts(a: Complex64, r: &OracleValue) -> f64 {
    let e = relative_errors(a, r);
    e.dre.unwrap_or(0.0).max(e.dim.unwrap_or(0.0))
}

pub fn c1() -> Verdict {
    verdict("C1", "core-domain grid, 100x100 over 0..15 x 1e-6..15", (|| {
        let spec = GridSpec::acceptance();
        let src = CachedOracle::open(&default_grid_cache(), &spec.signature()).map_err(|e| e.to_string())?;
        let g = sweep_domain(&spec, &Faddeeva::default(), &src, 16).map_err(|e| e.to_string())?;
        let s = g.stats;
        let ok = s.max_dre <= C1_MAX && s.max_dim <= C1_MAX && s.mean_dre <= C1_MEAN && s.mean_dim <= C1_MEAN;
        Ok((ok, format!(
            "max_dre={:.2e} max_dim={:.2e} (<= {C1_MAX:.0e}), mean_dre={:.2e} mean_dim={:.2e} (<= {C1_MEAN:.0e})",
            s.max_dre, s.max_dim, s.mean_dre, s.mean_dim
        )))
    })())
}

pub fn c2() -> Verdict {
    verdict("C2", "HITRAN-domain average, 1e5 points, 1e4 reference subsample", (|| {
        let src = CachedOracle::open(&default_hitran_cache(), &hitran_signature(DEFAULT_SEED))
            .map_err(|e| e.to_string())?;
        let s = hitran_accuracy_sample(C2_COUNT, DEFAULT_SEED, &Faddeeva::default(), &src)
            .map_err(|e| e.to_string())?;
        let ok = s.evaluated == C2_COUNT && s.mean_dre <= C2_MEAN && s.mean_dim <= C2_MEAN;
        Ok((ok, format!(
            "evaluated={} compared={} mean_dre={:.2e} mean_dim={:.2e} (<= {C2_MEAN:.0e}); max_dre={:.2e} max_dim={:.2e}",
            s.evaluated, s.compared, s.mean_dre, s.mean_dim, s.max_dre, s.max_dim
        )))
    })())
}

pub fn c3() -> Verdict {
    verdict("C3", "reflection identity on |z| <= 6", (|| {
        let f = Faddeeva::default();
        let mut r = rng(3);
        let (mut worst, mut at, mut scaled) = (0.0f64, Complex64::new(0.0, 0.0), 0.0f64);
        let mut n = 0;
        while n < C3_POINTS {
            let z = Complex64::new(r.gen_range(-C3_RADIUS..C3_RADIUS), r.gen_range(-C3_RADIUS..C3_RADIUS));
            if z.norm() > C3_RADIUS || z.im == 0.0 {
                continue;
            }
            n += 1;
            let e = |e: faddeeva_core::EvalError| format!("{z}: {e}");
            let wm = f.w(-z).map_err(e)?;
            let wp = f.w(z).map_err(e)?;
            let e2 = exp_neg_sq(z).map_err(e)? * 2.0;
            let res = (wm - (e2 - wp)).norm() / wm.norm();
            if !(res <= worst) {
                worst = res;
                at = z;
            }
            scaled = scaled.max(selftest::reflection_residual(&f, z).map_err(e)?);
        }
        Ok((worst <= C3_TOL, format!(
            "max residual/|w(-z)| = {worst:.2e} at z={at} (<= {C3_TOL:.0e}); scaled by the largest term: {scaled:.2e}"
        )))
    })())
}

pub fn c4() -> Verdict {
    verdict("C4", "w(0) = 1 and the small-y limit at y = 1e-8", (|| {
        let f = Faddeeva::default();
        let e0 = (f.w(Complex64::new(0.0, 0.0)).map_err(|e| e.to_string())? - 1.0).norm();
        let mut ok = e0 <= C4_ORIGIN;
        let mut parts = vec![format!("|w(0)-1|={e0:.1e}")];
        for x in C4_XS {
            let w = f.w(Complex64::new(x, C4_Y)).map_err(|e| e.to_string())?;
            let daw = oracle_daw(x, 30).map_err(|e| e.to_string())?.to_complex64().re;
            let want = Complex64::new((-x * x).exp(), TWO_OVER_SQRT_PI * daw);
            let e = (w - want).norm() / want.norm();
            ok &= e <= C4_LIMIT;
            parts.push(format!("x={x}: {e:.2e}"));
        }
        Ok((ok, format!("{} (<= {C4_LIMIT:.0e})", parts.join(", "))))
    })())
}

pub fn c5() -> Verdict {
    verdict("C5", "continued fraction on 15 <= |z| <= 1e6, Im z >= 0", (|| {
        let f = Faddeeva::default();
        let mut r = rng(5);
        let (l0, l1) = (C5_MIN_MODULUS.log10(), C5_MAX_MODULUS.log10());
        let (mut worst, mut at) = (0.0f64, Complex64::new(0.0, 0.0));
        for _ in 0..C5_POINTS {
            let m = 10f64.powf(r.gen_range(l0..=l1));
            let t = r.gen_range(0.0..=PI);
            let z = Complex64::new(m * t.cos(), (m * t.sin()).max(0.0));
            let v = f.evaluate(z).map_err(|e| format!("{z}: {e}"))?;
            if v.region.base != BaseRegion::ContinuedFraction {
                return Err(format!("{z} dispatched to {}", v.region));
            }
            let o = oracle_w(z).map_err(|e| format!("{z}: {e}"))?;
            let e = rel_parts(v.value, &o);
            if !(e <= worst) {
                worst = e;
                at = z;
            }
        }
        Ok((worst <= C5_TOL, format!(
            "{C5_POINTS} points, max componentwise error {worst:.2e} at z={at} (<= {C5_TOL:.0e})"
        )))
    })())
}

pub fn c6() -> Verdict {
    let s = selftest::ode(&Faddeeva::default(), SEED);
    verdict("C6", "ODE residual of the rational form", Ok((
        s.failure.is_none() && s.worst <= C6_TOL,
        format!("{} points, max residual {:.2e} (<= {C6_TOL:.0e})", s.points, s.worst),
    )))
}

pub fn c7() -> Verdict {
    verdict("C7", "oracle series vs quadrature, |z| <= 10", (|| {
        let mut r = rng(7);
        let (mut worst, mut at) = (0.0f64, Complex64::new(0.0, 0.0));
        for _ in 0..C7_POINTS {
            // uniform over the upper half disk, where both methods apply
            let m = C7_RADIUS * r.gen_range(0.0f64..=1.0).sqrt();
            let t = r.gen_range(0.0..=PI);
            let z = Complex64::new(m * t.cos(), (m * t.sin()).max(0.0));
            let s = oracle_series(z, 30).map_err(|e| format!("{z}: {e}"))?;
            let q = oracle_quadrature(z, 30).map_err(|e| format!("{z}: {e}"))?;
            let d = s.rel_diff(&q);
            if !(d <= worst) {
                worst = d;
                at = z;
            }
        }
        Ok((worst <= C7_TOL, format!(
            "{C7_POINTS} points, max relative difference {worst:.2e} at z={at} (<= {C7_TOL:.0e})"
        )))
    })())
}

pub fn c8() -> Verdict {
    verdict("C8", "related-function identities and values", (|| {
        let f = Faddeeva::default();
        let web = selftest::consistency(&f, SEED);
        let odd = selftest::oddness(&f, SEED);
        if let Some(e) = web.failure.as_ref().or(odd.failure.as_ref()) {
            return Err(e.clone());
        }
        let mut ok = web.worst <= C8_WEB && odd.worst <= C8_WEB;
        let one = Complex64::new(1.0, 0.0);
        let e = |e: faddeeva_core::EvalError| e.to_string();
        let o = |e: faddeeva_oracle::OracleError| e.to_string();
        let phi_ref = {
            let v = oracle_erf(Complex64::new(FRAC_1_SQRT_2, 0.0), 30).map_err(o)?;
            OracleValue::new(v.re / 2u32, v.im / 2u32, v.est_error)
        };
        let values = [
            ("erf(1)", rel_modulus(erf_complex(&f, one).map_err(e)?, &oracle_erf(one, 30).map_err(o)?)),
            ("daw(1)", rel_modulus(dawson(&f, one).map_err(e)?, &oracle_daw(1.0, 30).map_err(o)?)),
            ("F(1)", rel_modulus(fresnel(&f, one).map_err(e)?, &oracle_fresnel(one, 30).map_err(o)?)),
            ("Phi(1)", rel_modulus(normal_distribution(&f, one).map_err(e)?, &phi_ref)),
        ];
        let mut parts = vec![format!(
            "identities {:.2e}, oddness {:.2e} (<= {C8_WEB:.0e})",
            web.worst, odd.worst
        )];
        for (name, v) in values {
            ok &= v <= C8_VALUES;
            parts.push(format!("{name} {v:.2e}"));
        }
        Ok((ok, format!("{} (<= {C8_VALUES:.0e})", parts.join(", "))))
    })())
}

/// Runs the `kernel` command and parses its CSV.
fn kernel_curve(sigma: f64, tmax: f64, nt: usize) -> Result<Vec<[f64; 3]>, String> {
    let args = [
        "faddeeva".to_string(),
        "kernel".into(),
        "--sigma".into(),
        sigma.to_string(),
        "--tmax".into(),
        tmax.to_string(),
        "--nt".into(),
        nt.to_string(),
    ];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = faddeeva_cli::run(args, &mut out, &mut err);
    if code != 0 {
        return Err(String::from_utf8_lossy(&err).into_owned());
    }
    String::from_utf8_lossy(&out)
        .lines()
        .skip(1)
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|s| s.parse().unwrap_or(f64::NAN)).collect();
            if v.len() == 3 {
                Ok([v[0], v[1], v[2]])
            } else {
                Err(format!("bad kernel row `{l}`"))
            }
        })
        .collect()
}

pub fn c9() -> Verdict {
    verdict("C9", "kernel replicas at sigma = 0.1, none at sigma = 1.5", (|| {
        let h = faddeeva_core::ApproximationParams::default().h_i();
        let tmax = 2.0 / h + 8.0;
        let small = kernel_curve(C9_SMALL_SIGMA, tmax, 8001)?;
        let band = |lo: f64, hi: f64| {
            small
                .iter()
                .filter(|p| p[0] >= lo && p[0] <= hi)
                .map(|p| p[1].abs())
                .fold(0.0, f64::max)
        };
        let mut ok = true;
        let mut parts = Vec::new();
        for k in [1.0, 2.0] {
            let c = k / h;
            let peak = band(c - 1.0, c + 1.0);
            let baseline = band(c - 6.0, c - 4.0).max(band(c + 4.0, c + 6.0));
            let ratio = peak / baseline;
            ok &= ratio > C9_PEAK_RATIO;
            parts.push(format!("peak {k}/h: {ratio:.1}x baseline"));
        }
        let large = kernel_curve(C9_LARGE_SIGMA, tmax, 8001)?;
        let dev = large
            .iter()
            .filter(|p| p[0] > C9_T_FROM)
            .map(|p| (p[1] - p[2]).abs())
            .fold(0.0, f64::max);
        ok &= dev <= C9_DEVIATION;
        parts.push(format!("sigma=1.5 max deviation for t>3: {dev:.2e} (<= {C9_DEVIATION:.0e})"));
        Ok((ok, parts.join(", ")))
    })())
}

pub fn c10() -> Verdict {
    let r = throughput(&Faddeeva::default(), C10_POINTS, SEED, C10_CHUNK);
    let frac = r.core_fraction(BaseRegion::Rational);
    let narrow = r.core_regions[2];
    let ok = r.errors == 0 && r.points == C10_POINTS && frac >= C10_RATIONAL_FRACTION && narrow == 0;
    verdict("C10", "throughput on 3e7 HITRAN-domain points", Ok((ok, format!(
        "{} points, {} errors, {:.3e} points/s; x <= 15: {} points, Rational {:.2}% (>= {:.0}%), ContinuedFraction {}, NarrowBand {}",
        r.points,
        r.errors,
        r.points_per_second(),
        r.core_points(),
        100.0 * frac,
        100.0 * C10_RATIONAL_FRACTION,
        r.core_regions[1],
        narrow
    ))))
}
