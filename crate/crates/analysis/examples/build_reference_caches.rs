//! Regenerates the committed oracle caches under `data/`.
//!
//! cargo run --release -p faddeeva-analysis --example build_reference_caches [grid|hitran]

use std::time::Instant;

use faddeeva_analysis::{
    build_cache, default_grid_cache, default_hitran_cache, hitran_signature, subsample, GridSpec,
    LiveOracle, DEFAULT_SEED, SUBSAMPLE,
};

fn main() {
    let which = std::env::args().nth(1);
    let all = which.is_none();
    if all || which.as_deref() == Some("grid") {
        let spec = GridSpec::acceptance();
        let t = Instant::now();
        let cache = build_cache(&spec.points(), &spec.signature(), &LiveOracle).expect("grid oracle");
        cache.write(&default_grid_cache()).expect("write grid cache");
        eprintln!("grid: {} points in {:.1?}", cache.len(), t.elapsed());
    }
    if all || which.as_deref() == Some("hitran") {
        let points: Vec<(f64, f64)> = subsample(SUBSAMPLE, DEFAULT_SEED)
            .into_iter()
            .map(|z| (z.re, z.im))
            .collect();
        let t = Instant::now();
        let cache = build_cache(&points, &hitran_signature(DEFAULT_SEED), &LiveOracle).expect("hitran oracle");
        cache.write(&default_hitran_cache()).expect("write hitran cache");
        eprintln!("hitran: {} points in {:.1?}", cache.len(), t.elapsed());
    }
}
