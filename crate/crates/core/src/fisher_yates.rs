//! Coordinates coming from the random-permutation shuffle.
//!
//! Starting from the identity, step `i = n, n-1, ..., 1` swaps the entries
//! at positions `j_i` and `i` with `1 <= j_i <= i`. The sequence
//! `(j_1, ..., j_n)` is a subexcedant sequence and determines the result
//! uniquely. At step `i` one letter travels right by `d_i = i - j_i`.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// `(j_1, ..., j_n)` with `1 <= j_i <= i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubexcedantSeq(Vec<u32>);

/// `(d_1, ..., d_n)` with `0 <= d_i <= i - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceSeq(Vec<u32>);

impl SubexcedantSeq {
    pub fn new(j: Vec<u32>) -> Result<Self> {
        if let Some((idx, &v)) = j
            .iter()
            .enumerate()
            .find(|&(idx, &v)| v == 0 || v as usize > idx + 1)
        {
            return Err(Error::Range {
                index: idx + 1,
                value: v as usize,
            });
        }
        Ok(SubexcedantSeq(j))
    }

    /// `(1, 2, ..., n)`, which encodes the identity.
    pub fn identity(n: usize) -> Self {
        SubexcedantSeq((1..=n as u32).collect())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn distances(&self) -> DistanceSeq {
        DistanceSeq(
            self.0
                .iter()
                .enumerate()
                .map(|(idx, &j)| idx as u32 + 1 - j)
                .collect(),
        )
    }

    /// Every subexcedant sequence of length `n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = SubexcedantSeq> {
        let mut next = Some(vec![1u32; n]);
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            let mut idx = n;
            while idx > 0 {
                idx -= 1;
                if succ[idx] < idx as u32 + 1 {
                    succ[idx] += 1;
                    next = Some(succ);
                    break;
                }
                succ[idx] = 1;
            }
            Some(SubexcedantSeq(cur))
        })
    }
}

impl DistanceSeq {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&d| u64::from(d)).sum()
    }
}

pub fn encode(j: &SubexcedantSeq) -> Permutation {
    let n = j.len();
    let mut word: Vec<u32> = (1..=n as u32).collect();
    for i in (1..=n).rev() {
        word.swap(j.0[i - 1] as usize - 1, i - 1);
    }
    Permutation::from_word_unchecked(word)
}

/// Same as [`encode`] but validates a raw sequence first.
pub fn encode_raw(j: Vec<u32>) -> Result<Permutation> {
    Ok(encode(&SubexcedantSeq::new(j)?))
}

pub fn decode(p: &Permutation) -> SubexcedantSeq {
    decode_pair(p).0
}

/// Decodes `p` and `p^{-1}` together in linear time.
///
/// Both words are kept as mutual inverses. At step `i` the letter at
/// position `i` is `j_i(p)`, and the position of letter `i` is
/// `j_i(p^{-1})`; exchanging letters `j_i` and `i` then touches two cells
/// of each word.
pub fn decode_pair(p: &Permutation) -> (SubexcedantSeq, SubexcedantSeq) {
    let mut word = p.word().to_vec();
    let mut inv = p.inverse().into_word();
    let n = word.len();
    let mut j = vec![0u32; n];
    let mut j_inv = vec![0u32; n];
    for i in (1..=n).rev() {
        let letter = word[i - 1];
        let pos = inv[i - 1];
        j[i - 1] = letter;
        j_inv[i - 1] = pos;
        // letter `i` moves to position i, `letter` to where `i` was
        word[pos as usize - 1] = letter;
        word[i - 1] = i as u32;
        inv[letter as usize - 1] = pos;
        inv[i - 1] = i as u32;
    }
    (SubexcedantSeq(j), SubexcedantSeq(j_inv))
}

/// Total rightward distance travelled, `sum (i - j_i)`.
pub fn stat(p: &Permutation) -> u64 {
    stat_of(&decode(p))
}

pub fn stati(p: &Permutation) -> u64 {
    stat_of(&decode_pair(p).1)
}

/// Both statistics from a single decoding pass.
pub fn stat_pair(p: &Permutation) -> (u64, u64) {
    let (j, j_inv) = decode_pair(p);
    (stat_of(&j), stat_of(&j_inv))
}

fn stat_of(j: &SubexcedantSeq) -> u64 {
    j.distances().total()
}

/// Eulerian partner of `stat`.
///
/// Reads `d_1, ..., d_n` and keeps a record starting at 0; each `d_i`
/// larger than the record bumps the record by one. The result is the
/// final record.
pub fn ska(p: &Permutation) -> u64 {
    ska_of(&decode(p).distances())
}

pub fn ska_of(d: &DistanceSeq) -> u64 {
    d.0.iter().fold(
        0u64,
        |rec, &di| if u64::from(di) > rec { rec + 1 } else { rec },
    )
}

/// Shuffle sampler: `j_i` uniform on `[1, i]` for `i = n` down to 1, drawn
/// from ChaCha8 seeded with `seed`.
pub fn sample(n: usize, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with(n, &mut rng)
}

pub fn sample_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    assert!(n >= 1, "permutations have n >= 1");
    let mut word: Vec<u32> = (1..=n as u32).collect();
    for i in (1..=n).rev() {
        let j = rng.gen_range(1..=i);
        word.swap(j - 1, i - 1);
    }
    Permutation::from_word_unchecked(word)
}

/// A seeded stream of samples sharing one generator.
pub struct Sampler {
    n: usize,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(n: usize, seed: u64) -> Self {
        Sampler {
            n,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Iterator for Sampler {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        Some(sample_with(self.n, &mut self.rng))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Moments {
    pub mean: Ratio<i128>,
    pub variance: Ratio<i128>,
}

/// Exact mean and variance of `stat` over S_n: a sum of independent
/// uniforms on `0..=i-1`.
pub fn stat_moments(n: usize) -> Moments {
    let mut mean = Ratio::from_integer(0);
    let mut variance = Ratio::from_integer(0);
    for i in 1..=n as i128 {
        mean += Ratio::new(i - 1, 2);
        variance += Ratio::new(i * i - 1, 12);
    }
    Moments { mean, variance }
}
