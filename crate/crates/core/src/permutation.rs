//! One-line permutations of `1..=n`.
//!
//! Values and positions are 1-based at the API boundary. Storage is a
//! 0-indexed `Vec<u32>` of 1-based letters, so `word()[i - 1] == p(i)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

/// The families of special permutations used throughout the audits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Special {
    /// `12...n`
    Identity,
    /// `n(n-1)...1`
    Pi0,
    /// `23...n1`
    Pi1,
    /// `n12...(n-1)`
    Pi1Inv,
    /// `n23...(n-1)1`, the transposition `(1 n)`
    Pi2,
    /// `2134...n`
    NearIdentity,
}

impl Special {
    pub const ALL: [Special; 6] = [
        Special::Identity,
        Special::Pi0,
        Special::Pi1,
        Special::Pi1Inv,
        Special::Pi2,
        Special::NearIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Special::Identity => "identity",
            Special::Pi0 => "pi0",
            Special::Pi1 => "pi1",
            Special::Pi1Inv => "pi1inv",
            Special::Pi2 => "pi2",
            Special::NearIdentity => "near_identity",
        }
    }
}

impl FromStr for Special {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Special::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown special family {s:?}")))
    }
}

impl Permutation {
    /// Validates that `word` is a permutation of `1..=word.len()`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::Malformed("empty word".into()));
        }
        let mut seen = vec![false; n];
        for &v in &word {
            let idx = v as usize;
            if idx == 0 || idx > n {
                return Err(Error::Malformed(format!("letter {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[idx - 1], true) {
                return Err(Error::Malformed(format!("letter {v} repeated")));
            }
        }
        Ok(Permutation { word })
    }

    /// Callers must guarantee the permutation invariant.
    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have n >= 1");
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// Accepts the digit form (`25413`, only for n <= 9) or the
    /// comma-separated form (`10,2,3,...`).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Malformed("empty input".into()));
        }
        let word = if text.contains(',') {
            text.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u32>()
                        .map_err(|_| Error::Malformed(format!("bad letter {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            if !text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Malformed(format!("bad digit word {text:?}")));
            }
            if text.len() > 9 {
                return Err(Error::Ambiguous(text.len()));
            }
            text.bytes().map(|b| u32::from(b - b'0')).collect()
        };
        Permutation::new(word)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    // n >= 1 always holds; kept for clippy's len/is_empty pairing.
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// `p(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    pub fn reverse(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    pub fn complement(&self) -> Permutation {
        let top = self.word.len() as u32 + 1;
        Permutation {
            word: self.word.iter().map(|&v| top - v).collect(),
        }
    }

    /// Appends `k` fixed points `n+1, ..., n+k`.
    pub fn embed(&self, k: usize) -> Permutation {
        let n = self.word.len() as u32;
        let mut word = self.word.clone();
        word.extend(n + 1..=n + k as u32);
        Permutation { word }
    }

    pub fn special(kind: Special, n: usize) -> Result<Permutation> {
        let min = match kind {
            Special::Pi2 | Special::NearIdentity => 2,
            _ => 1,
        };
        if n < min {
            return Err(Error::Size {
                family: kind.name(),
                n,
            });
        }
        let n32 = n as u32;
        let word: Vec<u32> = match kind {
            Special::Identity => (1..=n32).collect(),
            Special::Pi0 => (1..=n32).rev().collect(),
            Special::Pi1 => (2..=n32).chain(std::iter::once(1)).collect(),
            Special::Pi1Inv => std::iter::once(n32).chain(1..n32).collect(),
            Special::Pi2 => {
                let mut w: Vec<u32> = (1..=n32).collect();
                w.swap(0, n - 1);
                w
            }
            Special::NearIdentity => {
                let mut w: Vec<u32> = (1..=n32).collect();
                w.swap(0, 1);
                w
            }
        };
        Ok(Permutation { word })
    }

    /// Rearranges into the lexicographically next permutation; returns
    /// `false` (leaving the word untouched) at the last one.
    pub(crate) fn advance_lex(&mut self) -> bool {
        let w = &mut self.word;
        let n = w.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && w[i - 1] > w[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while w[j] < w[i - 1] {
            j -= 1;
        }
        w.swap(i - 1, j);
        w[i..].reverse();
        true
    }

    /// The permutation of lexicographic rank `rank` (0-based) in S_n.
    pub(crate) fn unrank_lex(n: usize, mut rank: u64) -> Permutation {
        let mut pool: Vec<u32> = (1..=n as u32).collect();
        let mut word = Vec::with_capacity(n);
        let mut fact: u64 = (1..n as u64).product();
        for k in (1..=n).rev() {
            let idx = (rank / fact) as usize;
            rank %= fact;
            word.push(pool.remove(idx));
            if k > 1 {
                fact /= k as u64 - 1;
            }
        }
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    /// Digit form for n <= 9, comma form above.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.word.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("25413").word(), &[2, 5, 4, 1, 3]);
        assert_eq!(p("1").word(), &[1]);
        let ten = p("10,2,3,4,5,6,7,8,9,1");
        assert_eq!(ten.len(), 10);
        assert_eq!(ten.at(1), 10);
        assert_eq!(p(" 3, 1 ,2 ").word(), &[3, 1, 2]);
    }

    #[test]
    fn parse_rejects() {
        assert!(matches!(
            Permutation::parse("1224"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(Permutation::parse("0"), Err(Error::Malformed(_))));
        assert!(matches!(
            Permutation::parse("135"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(Permutation::parse(""), Err(Error::Malformed(_))));
        assert!(matches!(
            Permutation::parse("12a"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            Permutation::parse("1,2,,3"),
            Err(Error::Malformed(_))
        ));
        assert_eq!(Permutation::parse("1234567890"), Err(Error::Ambiguous(10)));
    }

    #[test]
    fn display_switches_to_commas() {
        assert_eq!(p("25413").to_string(), "25413");
        assert_eq!(
            p("10,2,3,4,5,6,7,8,9,1").to_string(),
            "10,2,3,4,5,6,7,8,9,1"
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("25413").inverse(), p("41532"));
        assert_eq!(Permutation::identity(6).inverse(), Permutation::identity(6));
    }

    #[test]
    fn embed_appends_fixed_points() {
        assert_eq!(p("25413").embed(1), p("254136"));
        assert_eq!(p("25413").embed(0), p("25413"));
        assert_eq!(p("21").embed(3), p("21345"));
    }

    #[test]
    fn special_families() {
        assert_eq!(Permutation::special(Special::Pi1, 5).unwrap(), p("23451"));
        assert_eq!(
            Permutation::special(Special::Pi1Inv, 5).unwrap(),
            p("51234")
        );
        assert_eq!(Permutation::special(Special::Pi0, 5).unwrap(), p("54321"));
        assert_eq!(Permutation::special(Special::Pi2, 5).unwrap(), p("52341"));
        assert_eq!(
            Permutation::special(Special::NearIdentity, 4).unwrap(),
            p("2134")
        );
        assert_eq!(Permutation::special(Special::Pi1, 1).unwrap(), p("1"));
        assert!(matches!(
            Permutation::special(Special::Pi2, 1),
            Err(Error::Size { n: 1, .. })
        ));
        assert!(Permutation::special(Special::NearIdentity, 1).is_err());
    }

    #[test]
    fn pi1_inverse_matches_family() {
        for n in 1..=12 {
            let a = Permutation::special(Special::Pi1, n).unwrap();
            let b = Permutation::special(Special::Pi1Inv, n).unwrap();
            assert_eq!(a.inverse(), b);
        }
    }

    #[test]
    fn pi0_is_involution() {
        for n in 1..=20 {
            let pi0 = Permutation::special(Special::Pi0, n).unwrap();
            assert_eq!(pi0.inverse(), pi0);
        }
    }

    #[test]
    fn lex_order_and_unrank_agree() {
        let mut cur = Permutation::identity(5);
        let mut rank = 0u64;
        loop {
            assert_eq!(Permutation::unrank_lex(5, rank), cur);
            rank += 1;
            if !cur.advance_lex() {
                break;
            }
        }
        assert_eq!(rank, 120);
        assert_eq!(cur, p("54321"));
    }
}
