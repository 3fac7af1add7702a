//! Finds the smallest continued-fraction depth whose double-precision
//! evaluation is within 1e-14 (componentwise relative) of the oracle over
//! `15 <= |z| <= 1e6`, `Im z >= 0`.
//!
//! cargo run --release -p faddeeva-analysis --example calibrate_cf_depth

use faddeeva_analysis::relative_errors;
use faddeeva_core::{exp_neg_sq, w_continued_fraction, Complex64, DEFAULT_Y_NARROW};
use faddeeva_oracle::oracle_w;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const TARGET: f64 = 1e-14;
const THRESHOLD: f64 = 15.0;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1501);
    let mut points = Vec::new();
    // general position, first quadrant (the others follow by symmetry)
    for _ in 0..400 {
        let r = 10f64.powf(rng.gen_range(THRESHOLD.log10()..6.0));
        let t = rng.gen_range(0.0..std::f64::consts::FRAC_PI_2);
        points.push(Complex64::new(r * t.cos(), r * t.sin()));
    }
    // hugging the real axis, including the threshold circle itself
    for _ in 0..200 {
        let x = 10f64.powf(rng.gen_range(THRESHOLD.log10()..6.0));
        let y = 10f64.powf(rng.gen_range(-10.0..0.0));
        points.push(Complex64::new(x, y));
    }
    for k in 0..=200 {
        let t = std::f64::consts::FRAC_PI_2 * k as f64 / 200.0;
        points.push(Complex64::new(THRESHOLD * t.cos(), THRESHOLD * t.sin()));
    }
    points.retain(|z| z.norm() >= THRESHOLD);

    let refs: Vec<_> = points
        .par_iter()
        .map(|&z| oracle_w(z).unwrap_or_else(|e| panic!("oracle failed at {z}: {e}")))
        .collect();

    let mut chosen = None;
    println!("depth  max_rel_error  worst_point");
    for depth in 1..=16 {
        let mut worst = (0.0f64, Complex64::new(0.0, 0.0));
        for (z, r) in points.iter().zip(&refs) {
            let mut w = w_continued_fraction(*z, depth, THRESHOLD).unwrap();
            // as in the dispatcher: the real-axis Gaussian is added back
            if z.im < DEFAULT_Y_NARROW {
                w.re += exp_neg_sq(Complex64::new(z.re, 0.0)).unwrap().re;
            }
            let e = relative_errors(w, r);
            let m = e.dre.unwrap_or(0.0).max(e.dim.unwrap_or(0.0));
            if m > worst.0 {
                worst = (m, *z);
            }
        }
        println!("{depth:5}  {:.3e}  {}", worst.0, worst.1);
        if worst.0 <= TARGET && chosen.is_none() {
            chosen = Some(depth);
        }
    }
    match chosen {
        Some(d) => println!("smallest depth meeting {TARGET:e}: {d}"),
        None => println!("no depth up to 16 meets {TARGET:e}"),
    }
}
