//! Vincular pattern occurrences.
//!
//! Patterns are written with lowercase letters ranking the values (`a`
//! smallest). Letters written next to each other must match adjacent
//! positions; a dash between two letters lifts that requirement. So `cb-a`
//! is a descent followed, anywhere to the right, by a smaller letter.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub const MAX_PATTERN_LEN: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VincularPattern {
    /// Relative rank of each letter, 0-based.
    ranks: Vec<usize>,
    /// `adjacent[m]` requires the (m+1)-th letter to sit right after the m-th.
    adjacent: Vec<bool>,
}

impl VincularPattern {
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut adjacent = Vec::new();
        let mut pending_dash = false;
        for ch in text.trim().chars() {
            match ch {
                'a'..='d' => {
                    if !letters.is_empty() {
                        adjacent.push(!pending_dash);
                    } else if pending_dash {
                        return Err(Error::Pattern(format!("leading dash in {text:?}")));
                    }
                    pending_dash = false;
                    letters.push(ch);
                }
                '-' if !pending_dash => pending_dash = true,
                _ => return Err(Error::Pattern(format!("unexpected {ch:?} in {text:?}"))),
            }
        }
        if letters.is_empty() || pending_dash {
            return Err(Error::Pattern(format!("incomplete pattern {text:?}")));
        }
        if letters.len() > MAX_PATTERN_LEN {
            return Err(Error::Pattern(format!(
                "{text:?} longer than {MAX_PATTERN_LEN}"
            )));
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != letters.len() {
            return Err(Error::Pattern(format!("repeated letter in {text:?}")));
        }
        let ranks = letters
            .iter()
            .map(|c| sorted.binary_search(c).unwrap())
            .collect();
        Ok(VincularPattern { ranks, adjacent })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Number of index tuples `i_1 < ... < i_k` whose letters are
    /// order-isomorphic to the pattern and respect the adjacency marks.
    pub fn count(&self, p: &Permutation) -> u64 {
        let word = p.word();
        if self.len() > word.len() {
            return 0;
        }
        let mut chosen = [0u32; MAX_PATTERN_LEN];
        self.extend(word, 0, 0, &mut chosen)
    }

    fn extend(&self, word: &[u32], depth: usize, from: usize, chosen: &mut [u32]) -> u64 {
        if depth == self.len() {
            return 1;
        }
        let candidates = if depth > 0 && self.adjacent[depth - 1] {
            from..(from + 1).min(word.len())
        } else {
            from..word.len()
        };
        let mut total = 0;
        for pos in candidates {
            let v = word[pos];
            // rank consistency against every earlier letter
            let ok = (0..depth).all(|m| (chosen[m] < v) == (self.ranks[m] < self.ranks[depth]));
            if ok {
                chosen[depth] = v;
                total += self.extend(word, depth + 1, pos + 1, chosen);
            }
        }
        total
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, &r) in self.ranks.iter().enumerate() {
            if m > 0 && !self.adjacent[m - 1] {
                f.write_str("-")?;
            }
            write!(f, "{}", (b'a' + r as u8) as char)?;
        }
        Ok(())
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VincularPattern::parse(s)
    }
}

pub fn count_vincular(p: &Permutation, pattern: &VincularPattern) -> u64 {
    pattern.count(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::Special;

    fn pat(s: &str) -> VincularPattern {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["ba", "cba", "cb-a", "c-ba", "b-a", "a", "bd-a-c"] {
            assert_eq!(pat(s).to_string(), s);
        }
        assert_eq!(pat("db").to_string(), "ba");
        for bad in ["", "-a", "a-", "a--b", "aa", "abcde", "ae", "a b"] {
            assert!(VincularPattern::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn pi0_counts() {
        let pi0 = Permutation::special(Special::Pi0, 6).unwrap();
        assert_eq!(pat("ba").count(&pi0), 5);
        assert_eq!(pat("cba").count(&pi0), 4);
        assert_eq!(pat("cb-a").count(&pi0), 10);
        assert_eq!(pat("c-ba").count(&pi0), 10);
    }

    #[test]
    fn identity_has_no_descents() {
        assert_eq!(pat("ba").count(&Permutation::identity(7)), 0);
        assert_eq!(pat("a").count(&Permutation::identity(7)), 7);
    }

    #[test]
    fn c_ba_on_running_example() {
        let p = perm("25413");
        let w = p.word();
        let mut brute = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() - 1 {
                let k = j + 1;
                if w[i] > w[j] && w[j] > w[k] {
                    brute += 1;
                }
            }
        }
        assert_eq!(pat("c-ba").count(&p), brute);
        assert_eq!(brute, 1);
    }

    #[test]
    fn pattern_longer_than_word() {
        assert_eq!(pat("cba").count(&perm("21")), 0);
    }
}
