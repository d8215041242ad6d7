//! Exhaustive enumeration of S_n with optional partitioning across threads.
//!
//! The lexicographic rank range `0..n!` is cut into contiguous chunks; each
//! chunk folds its own accumulator and the accumulators are merged in chunk
//! order, so the result does not depend on the thread count as long as the
//! merge is associative and commutative.

use std::thread;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub const DEFAULT_CEILING: usize = 10;
pub const CEILING_ENV: &str = "PERMSTAT_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    ceiling: usize,
    threads: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            ceiling: DEFAULT_CEILING,
            threads: 1,
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Default enumerator with the ceiling taken from `PERMSTAT_MAX_N` when set.
    pub fn from_env() -> Self {
        let ceiling = std::env::var(CEILING_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_CEILING);
        Enumerator::default().with_ceiling(ceiling)
    }

    pub fn with_ceiling(mut self, ceiling: usize) -> Self {
        // n! must fit in u64
        self.ceiling = ceiling.min(20);
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn ceiling(&self) -> usize {
        self.ceiling
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Size {
                family: "enumeration",
                n,
            });
        }
        if n > self.ceiling {
            return Err(Error::TooLarge {
                n,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }

    pub fn fold<T, I, F, M>(&self, n: usize, init: I, step: F, merge: M) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        F: Fn(&mut T, &Permutation) + Sync,
        M: Fn(T, T) -> T,
    {
        self.check(n)?;
        let total: u64 = (1..=n as u64).product();
        let chunks = (self.threads as u64).min(total);
        let bounds: Vec<(u64, u64)> = (0..chunks)
            .map(|c| (c * total / chunks, (c + 1) * total / chunks))
            .collect();
        let run = |(lo, hi): (u64, u64)| {
            let mut acc = init();
            let mut cur = Permutation::unrank_lex(n, lo);
            for rank in lo..hi {
                step(&mut acc, &cur);
                if rank + 1 < hi {
                    cur.advance_lex();
                }
            }
            acc
        };
        let parts: Vec<T> = if chunks == 1 {
            vec![run(bounds[0])]
        } else {
            thread::scope(|s| {
                let handles: Vec<_> = bounds
                    .iter()
                    .map(|&b| {
                        let run = &run;
                        s.spawn(move || run(b))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("enumeration worker panicked"))
                    .collect()
            })
        };
        Ok(parts.into_iter().reduce(merge).expect("at least one chunk"))
    }

    pub fn count(&self, n: usize) -> Result<u64> {
        self.fold(n, || 0u64, |acc, _| *acc += 1, |a, b| a + b)
    }

    /// Collects S_n in lexicographic order.
    pub fn all(&self, n: usize) -> Result<Vec<Permutation>> {
        self.fold(
            n,
            Vec::new,
            |acc, p| acc.push(p.clone()),
            |mut a, b| {
                a.extend(b);
                a
            },
        )
    }
}

/// Every permutation of size `n` in lexicographic order, without a ceiling.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next = (n >= 1).then(|| Permutation::identity(n));
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        if succ.advance_lex() {
            next = Some(succ);
        }
        Some(cur)
    })
}
