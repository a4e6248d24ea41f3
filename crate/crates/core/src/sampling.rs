//! Seeded, order-independent randomness.
//!
//! Every sample `k` of a run draws from its own ChaCha stream derived from
//! `(seed, k)`, so results do not depend on how work is spread over threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

/// RNG for sample `index` of a run seeded with `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform point on the unit sphere in `R^d`.
pub fn unit_sphere<R: Rng>(rng: &mut R, d: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

/// Uniform point in the box `center ± radius`.
pub fn in_box<R: Rng>(rng: &mut R, center: &[f64], radius: f64) -> Vec<f64> {
    center
        .iter()
        .map(|c| c + radius * (2.0 * rng.random::<f64>() - 1.0))
        .collect()
}

pub fn normal<R: Rng>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

/// `f(k, rng_k)` for `k = 0..count`, in parallel, returned in index order.
pub fn par_indexed<T, F>(seed: u64, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut ChaCha8Rng) -> T + Sync + Send,
{
    (0..count)
        .into_par_iter()
        .map(|k| {
            let mut rng = stream(seed, k as u64);
            f(k, &mut rng)
        })
        .collect()
}

/// Run `f` on a dedicated pool with `threads` workers (0 = all cores).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
