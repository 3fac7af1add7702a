//! Gauss-Legendre nodes and weights in arbitrary precision.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::Float;

/// Nodes `x_i` in (-1, 1) and weights `w_i`, ascending in `x`.
pub struct Rule {
    pub nodes: Vec<Float>,
    pub weights: Vec<Float>,
}

type RuleCache = Mutex<HashMap<(usize, u32), Arc<Rule>>>;

fn cache() -> &'static RuleCache {
    static CACHE: OnceLock<RuleCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `n`-point rule accurate to `prec` bits. Rules are memoised per
/// `(n, prec)`, so callers should round `prec` to a coarse grid.
pub fn rule(n: usize, prec: u32) -> Arc<Rule> {
    if let Some(r) = cache().lock().unwrap().get(&(n, prec)) {
        return r.clone();
    }
    let r = Arc::new(compute(n, prec));
    cache().lock().unwrap().insert((n, prec), r.clone());
    r
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: &Float) -> (Float, Float) {
    let prec = x.prec();
    let mut p0 = Float::with_val(prec, 1);
    let mut p1 = x.clone();
    for k in 2..=n {
        // k P_k = (2k-1) x P_{k-1} - (k-1) P_{k-2}
        let mut p2 = Float::with_val(prec, x * &p1);
        p2 *= (2 * k - 1) as u32;
        p2 -= Float::with_val(prec, &p0 * (k - 1) as u32);
        p2 /= k as u32;
        p0 = p1;
        p1 = p2;
    }
    // P_n' = n (x P_n - P_{n-1}) / (x^2 - 1)
    let x2m1 = Float::with_val(prec, x.square_ref()) - 1u32;
    let dp = (Float::with_val(prec, x * &p1) - &p0) * n as u32 / x2m1;
    (p1, dp)
}

fn compute(n: usize, prec: u32) -> Rule {
    assert!(n >= 2 && n % 2 == 0, "only even rules are used");
    let wp = prec + 32;
    let mut nodes = Vec::with_capacity(n / 2);
    let mut weights = Vec::with_capacity(n / 2);
    for i in 0..n / 2 {
        // Tricomi-style initial guess for the i-th largest root, then Newton.
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut x = Float::with_val(wp, guess);
        for _ in 0..200 {
            let (p, dp) = legendre(n, &x);
            let dx = Float::with_val(wp, &p / &dp);
            x -= &dx;
            if dx.is_zero() || dx.get_exp().unwrap_or(i32::MIN) < 8 - wp as i32 {
                break;
            }
        }
        let (_, dp) = legendre(n, &x);
        // w = 2 / ((1 - x^2) P_n'(x)^2)
        let one_m_x2 = 1u32 - Float::with_val(wp, x.square_ref());
        let w = Float::with_val(wp, 2u32) / (one_m_x2 * Float::with_val(wp, dp.square_ref()));
        nodes.push(x);
        weights.push(w);
    }
    let mut all_nodes: Vec<Float> = nodes.iter().map(|x| Float::with_val(prec, -x)).collect();
    let mut all_weights: Vec<Float> = weights.iter().map(|w| Float::with_val(prec, w)).collect();
    for (x, w) in nodes.iter().zip(&weights).rev() {
        all_nodes.push(Float::with_val(prec, x));
        all_weights.push(Float::with_val(prec, w));
    }
    Rule {
        nodes: all_nodes,
        weights: all_weights,
    }
}
