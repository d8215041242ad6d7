//! Descent and excedance partial statistics and the classical Mahonian
//! statistics built from them.
//!
//! Descent bottoms come in two flavours. The index-based one sums the
//! positions `i` of descents; the value-based one sums the letters
//! `p(i+1)`. `mak`/`mad` are Mahonian only with the value-based bottoms.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Maximal strictly decreasing runs, as 0-based position ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentBlocks {
    blocks: Vec<Range<usize>>,
}

impl DescentBlocks {
    pub fn of(p: &Permutation) -> Self {
        let w = p.word();
        let mut blocks = Vec::new();
        let mut start = 0;
        for i in 1..w.len() {
            if w[i] > w[i - 1] {
                blocks.push(start..i);
                start = i;
            }
        }
        blocks.push(start..w.len());
        DescentBlocks { blocks }
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    /// Blocks as letter words, e.g. `[2][541][3]` for 25413.
    pub fn words<'a>(&'a self, p: &'a Permutation) -> impl Iterator<Item = &'a [u32]> + 'a {
        self.blocks.iter().map(move |r| &p.word()[r.clone()])
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DescentPartials {
    pub des: u64,
    pub maj: u64,
    pub dtop: u64,
    pub dbot_idx: u64,
    pub dbot_val: u64,
}

impl DescentPartials {
    pub fn ddif_idx(&self) -> i64 {
        self.dtop as i64 - self.dbot_idx as i64
    }

    pub fn ddif_val(&self) -> u64 {
        self.dtop - self.dbot_val
    }
}

pub fn descent_partials(p: &Permutation) -> DescentPartials {
    let w = p.word();
    let mut out = DescentPartials::default();
    for (i, pair) in w.windows(2).enumerate() {
        if pair[0] > pair[1] {
            out.des += 1;
            out.maj += i as u64 + 1;
            out.dtop += u64::from(pair[0]);
            out.dbot_idx += i as u64 + 1;
            out.dbot_val += u64::from(pair[1]);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExcedancePartials {
    pub exc: u64,
    pub ebot: u64,
    pub etop: u64,
}

impl ExcedancePartials {
    pub fn edif(&self) -> u64 {
        self.etop - self.ebot
    }
}

pub fn excedance_partials(p: &Permutation) -> ExcedancePartials {
    let mut out = ExcedancePartials::default();
    for (idx, &v) in p.word().iter().enumerate() {
        let i = idx as u64 + 1;
        if u64::from(v) > i {
            out.exc += 1;
            out.ebot += i;
            out.etop += u64::from(v);
        }
    }
    out
}

/// Letters at excedance positions and the rest, each in original order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcedanceSplit {
    pub positions: Vec<usize>,
    pub excedant: Vec<u32>,
    pub rest: Vec<u32>,
}

pub fn exc_split(p: &Permutation) -> ExcedanceSplit {
    let mut split = ExcedanceSplit {
        positions: Vec::new(),
        excedant: Vec::new(),
        rest: Vec::new(),
    };
    for (idx, &v) in p.word().iter().enumerate() {
        if v as usize > idx + 1 {
            split.positions.push(idx + 1);
            split.excedant.push(v);
        } else {
            split.rest.push(v);
        }
    }
    split
}

/// Inversions of an arbitrary word of distinct letters, by merge sort.
pub fn word_inversions(word: &[u32]) -> u64 {
    fn sort_count(buf: &mut [u32], scratch: &mut [u32]) -> u64 {
        let n = buf.len();
        if n < 2 {
            return 0;
        }
        let mid = n / 2;
        let mut count = {
            let (lo, hi) = buf.split_at_mut(mid);
            let (slo, shi) = scratch.split_at_mut(mid);
            sort_count(lo, slo) + sort_count(hi, shi)
        };
        let (mut a, mut b, mut k) = (0, mid, 0);
        while a < mid && b < n {
            if buf[a] <= buf[b] {
                scratch[k] = buf[a];
                a += 1;
            } else {
                scratch[k] = buf[b];
                count += (mid - a) as u64;
                b += 1;
            }
            k += 1;
        }
        scratch[k..k + mid - a].copy_from_slice(&buf[a..mid]);
        k += mid - a;
        scratch[k..k + n - b].copy_from_slice(&buf[b..n]);
        buf.copy_from_slice(&scratch[..n]);
        count
    }
    let mut buf = word.to_vec();
    let mut scratch = vec![0u32; word.len()];
    sort_count(&mut buf, &mut scratch)
}

pub fn inv(p: &Permutation) -> u64 {
    word_inversions(p.word())
}

pub fn des(p: &Permutation) -> u64 {
    descent_partials(p).des
}

pub fn maj(p: &Permutation) -> u64 {
    descent_partials(p).maj
}

pub fn exc(p: &Permutation) -> u64 {
    excedance_partials(p).exc
}

/// Sum of right embracing numbers.
///
/// A block `B` of length >= 2 strictly right of letter `a`'s block embraces
/// `a` when `o(B) < a < c(B)` (last letter < a < first letter).
pub fn res(p: &Permutation) -> u64 {
    let blocks = DescentBlocks::of(p);
    let w = p.word();
    let spans: Vec<(u32, u32)> = blocks
        .blocks()
        .iter()
        .map(|r| (w[r.start], w[r.end - 1]))
        .collect();
    let mut total = 0;
    for (bi, r) in blocks.blocks().iter().enumerate() {
        for &a in &w[r.clone()] {
            total += spans[bi + 1..]
                .iter()
                .filter(|&&(closer, opener)| opener < a && a < closer)
                .count() as u64;
        }
    }
    total
}

pub fn ine(p: &Permutation) -> u64 {
    let split = exc_split(p);
    word_inversions(&split.excedant) + word_inversions(&split.rest)
}

/// Sum over excedance bottoms `i` of `#{k < i : p(k) <= i}`.
pub fn hag_e(p: &Permutation) -> u64 {
    let w = p.word();
    let mut total = 0;
    for (idx, &v) in w.iter().enumerate() {
        let i = idx + 1;
        if v as usize > i {
            total += w[..idx].iter().filter(|&&x| x as usize <= i).count() as u64;
        }
    }
    total
}

pub fn den(p: &Permutation) -> u64 {
    excedance_partials(p).ebot + ine(p)
}

pub fn mak_idx(p: &Permutation) -> u64 {
    descent_partials(p).dbot_idx + res(p)
}

pub fn mak_val(p: &Permutation) -> u64 {
    descent_partials(p).dbot_val + res(p)
}

/// Signed: index-based descent bottoms can exceed the tops.
pub fn mad_idx(p: &Permutation) -> i64 {
    descent_partials(p).ddif_idx() + res(p) as i64
}

pub fn mad_val(p: &Permutation) -> u64 {
    descent_partials(p).ddif_val() + res(p)
}

pub fn hag(p: &Permutation) -> u64 {
    let split = exc_split(p);
    let edif = excedance_partials(p).edif() as i64;
    let value = edif + word_inversions(&split.excedant) as i64
        - word_inversions(&split.rest) as i64
        + hag_e(p) as i64;
    u64::try_from(value).expect("hag is nonnegative")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Composite {
    Den,
    MakIdx,
    MakVal,
    MadIdx,
    MadVal,
    Hag,
}

impl Composite {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "den" => Composite::Den,
            "mak_idx" => Composite::MakIdx,
            "mak_val" => Composite::MakVal,
            "mad_idx" => Composite::MadIdx,
            "mad_val" => Composite::MadVal,
            "hag" => Composite::Hag,
            _ => return Err(Error::UnknownName(name.to_string())),
        })
    }

    pub fn eval(self, p: &Permutation) -> i64 {
        match self {
            Composite::Den => den(p) as i64,
            Composite::MakIdx => mak_idx(p) as i64,
            Composite::MakVal => mak_val(p) as i64,
            Composite::MadIdx => mad_idx(p),
            Composite::MadVal => mad_val(p) as i64,
            Composite::Hag => hag(p) as i64,
        }
    }
}

pub fn composite(name: &str, p: &Permutation) -> Result<i64> {
    Ok(Composite::parse(name)?.eval(p))
}
