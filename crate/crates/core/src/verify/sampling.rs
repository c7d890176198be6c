//! Parallel max-error sampling with per-sample RNG streams.

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::states::random::sample_rng;

/// Samples whose projection denominators fall below this are redrawn.
pub const NEAR_INFINITY: f64 = 1e-8;

/// Redraw limit per sample; exhausting it records a NaN error.
pub const MAX_ATTEMPTS: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sampled<const K: usize> {
    pub max: [f64; K],
    pub resampled: u64,
}

/// `max` that lets NaN win, so a broken sample can never hide.
pub fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

/// Runs `f` once per sample index with its own RNG stream and reduces the
/// `K` error channels by maximum. `f` returns `None` to request a redraw.
pub fn sample_max<const K: usize, F>(seed: u64, stream: u64, n: usize, f: F) -> Sampled<K>
where
    F: Fn(&mut ChaCha8Rng) -> Option<[f64; K]> + Sync,
{
    (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample_rng(seed, stream, i);
            let mut redrawn = 0;
            loop {
                if let Some(errors) = f(&mut rng) {
                    return Sampled {
                        max: errors,
                        resampled: redrawn,
                    };
                }
                redrawn += 1;
                if redrawn >= MAX_ATTEMPTS {
                    return Sampled {
                        max: [f64::NAN; K],
                        resampled: redrawn,
                    };
                }
            }
        })
        .reduce(
            || Sampled {
                max: [0.0; K],
                resampled: 0,
            },
            |a, b| Sampled {
                max: std::array::from_fn(|k| nan_max(a.max[k], b.max[k])),
                resampled: a.resampled + b.resampled,
            },
        )
}
