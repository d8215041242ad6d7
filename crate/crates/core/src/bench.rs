//! Wall-clock timing of the linear-time decoder.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::fisher_yates::{decode_pair, sample};

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub n: usize,
    pub runs: usize,
    pub median_secs: f64,
    pub per_element_ns: f64,
}

impl BenchReport {
    pub fn median(&self) -> Duration {
        Duration::from_secs_f64(self.median_secs)
    }
}

/// Times `decode_pair` on one seeded random permutation of size `n`,
/// reporting the median over `runs` repetitions.
pub fn bench_decode(n: usize, seed: u64, runs: usize) -> BenchReport {
    let runs = runs.max(1);
    let p = sample(n, seed);
    let mut times: Vec<Duration> = (0..runs)
        .map(|_| {
            let start = Instant::now();
            let out = decode_pair(&p);
            let elapsed = start.elapsed();
            std::hint::black_box(out);
            elapsed
        })
        .collect();
    times.sort();
    let median = times[runs / 2];
    BenchReport {
        n,
        runs,
        median_secs: median.as_secs_f64(),
        per_element_ns: median.as_nanos() as f64 / n as f64,
    }
}
