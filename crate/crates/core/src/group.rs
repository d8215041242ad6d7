//! The order-8 group generated by inverse (I), reverse (R) and complement (C).
//!
//! Elements act on the right and multi-letter names apply left to right:
//! `p^{IC}` is `complement(inverse(p))`. Using `RI = IC` and `CI = IR`
//! every word rewrites to the normal form `I^a R^b C^c`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    inverse: bool,
    reverse: bool,
    complement: bool,
}

impl GroupElement {
    pub const E: GroupElement = GroupElement::from_flags(false, false, false);
    pub const I: GroupElement = GroupElement::from_flags(true, false, false);
    pub const R: GroupElement = GroupElement::from_flags(false, true, false);
    pub const C: GroupElement = GroupElement::from_flags(false, false, true);
    pub const IR: GroupElement = GroupElement::from_flags(true, true, false);
    pub const IC: GroupElement = GroupElement::from_flags(true, false, true);
    pub const RC: GroupElement = GroupElement::from_flags(false, true, true);
    pub const IRC: GroupElement = GroupElement::from_flags(true, true, true);

    pub const ALL: [GroupElement; 8] = [
        GroupElement::E,
        GroupElement::I,
        GroupElement::R,
        GroupElement::C,
        GroupElement::IR,
        GroupElement::IC,
        GroupElement::RC,
        GroupElement::IRC,
    ];

    const fn from_flags(inverse: bool, reverse: bool, complement: bool) -> Self {
        GroupElement {
            inverse,
            reverse,
            complement,
        }
    }

    pub fn name(self) -> &'static str {
        match (self.inverse, self.reverse, self.complement) {
            (false, false, false) => "e",
            (true, false, false) => "I",
            (false, true, false) => "R",
            (false, false, true) => "C",
            (true, true, false) => "IR",
            (true, false, true) => "IC",
            (false, true, true) => "RC",
            (true, true, true) => "IRC",
        }
    }

    /// `p^self`.
    pub fn apply(self, p: &Permutation) -> Permutation {
        let mut out = if self.inverse { p.inverse() } else { p.clone() };
        if self.reverse {
            out = out.reverse();
        }
        if self.complement {
            out = out.complement();
        }
        out
    }

    /// The element acting as `self` followed by `then`.
    pub fn compose(self, then: GroupElement) -> GroupElement {
        if then.inverse {
            // R^b C^c I = I R^c C^b
            GroupElement::from_flags(
                !self.inverse,
                self.complement ^ then.reverse,
                self.reverse ^ then.complement,
            )
        } else {
            GroupElement::from_flags(
                self.inverse,
                self.reverse ^ then.reverse,
                self.complement ^ then.complement,
            )
        }
    }

    pub fn inverse_element(self) -> GroupElement {
        GroupElement::ALL
            .into_iter()
            .find(|&g| self.compose(g) == GroupElement::E)
            .expect("group is closed")
    }

    /// Parses any word over `{I, R, C}` (or `e`) and reduces it.
    pub fn parse_word(word: &str) -> Result<GroupElement> {
        if word == "e" || word.is_empty() {
            return Ok(GroupElement::E);
        }
        word.chars().try_fold(GroupElement::E, |acc, ch| {
            let g = match ch {
                'I' => GroupElement::I,
                'R' => GroupElement::R,
                'C' => GroupElement::C,
                _ => return Err(Error::GroupElement(word.to_string())),
            };
            Ok(acc.compose(g))
        })
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupElement::parse_word(s)
    }
}

/// `{ p^g : g in G }`.
pub fn orbit(p: &Permutation) -> BTreeSet<Permutation> {
    GroupElement::ALL.iter().map(|g| g.apply(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::Special;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn all_perms(n: usize) -> Vec<Permutation> {
        let mut cur = Permutation::identity(n);
        let mut out = vec![cur.clone()];
        while cur.advance_lex() {
            out.push(cur.clone());
        }
        out
    }

    #[test]
    fn running_example_images() {
        let x = p("25413");
        assert_eq!(GroupElement::I.apply(&x), p("41532"));
        assert_eq!(GroupElement::R.apply(&x), p("31452"));
        assert_eq!(GroupElement::C.apply(&x), p("41253"));
        assert_eq!(GroupElement::IC.apply(&x), p("25134"));
        assert_eq!(GroupElement::IR.apply(&x), p("23514"));
        assert_eq!(GroupElement::RC.apply(&x), p("35214"));
        // printed as 41532 in the source table; left-to-right gives this
        assert_eq!(GroupElement::IRC.apply(&x), p("43152"));
    }

    #[test]
    fn compose_matches_sequential_application() {
        for p in all_perms(5) {
            for g in GroupElement::ALL {
                for h in GroupElement::ALL {
                    assert_eq!(g.compose(h).apply(&p), h.apply(&g.apply(&p)));
                }
            }
        }
    }

    #[test]
    fn relations() {
        use GroupElement as G;
        assert_eq!(G::R.compose(G::C), G::C.compose(G::R));
        assert_eq!(G::I.compose(G::I), G::E);
        assert_eq!(G::I.compose(G::R), G::C.compose(G::I));
        assert_eq!(G::I.compose(G::C), G::R.compose(G::I));
        for p in all_perms(5) {
            assert_eq!(G::I.compose(G::R).apply(&p), G::C.compose(G::I).apply(&p));
            assert_eq!(G::I.compose(G::C).apply(&p), G::R.compose(G::I).apply(&p));
        }
    }

    #[test]
    fn closure_has_eight_elements() {
        let mut seen: BTreeSet<GroupElement> = [GroupElement::E].into();
        loop {
            let before = seen.len();
            let snapshot: Vec<_> = seen.iter().copied().collect();
            for g in snapshot {
                for gen in [GroupElement::I, GroupElement::R, GroupElement::C] {
                    seen.insert(g.compose(gen));
                }
            }
            if seen.len() == before {
                break;
            }
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn group_axioms_on_s4() {
        let perms = all_perms(4);
        for g in GroupElement::ALL {
            let gi = g.inverse_element();
            for q in &perms {
                assert_eq!(g.compose(gi).apply(q), *q);
                assert_eq!(GroupElement::E.compose(g).apply(q), g.apply(q));
            }
            for h in GroupElement::ALL {
                for k in GroupElement::ALL {
                    let left = g.compose(h).compose(k);
                    let right = g.compose(h.compose(k));
                    for q in &perms {
                        assert_eq!(left.apply(q), right.apply(q));
                    }
                }
            }
        }
    }

    #[test]
    fn action_is_faithful() {
        for n in 3..=5 {
            let perms = all_perms(n);
            for (a, g) in GroupElement::ALL.iter().enumerate() {
                for h in &GroupElement::ALL[a + 1..] {
                    assert!(perms.iter().any(|q| g.apply(q) != h.apply(q)));
                }
            }
        }
    }

    #[test]
    fn word_parsing_reduces() {
        assert_eq!("RI".parse::<GroupElement>().unwrap(), GroupElement::IC);
        assert_eq!("CI".parse::<GroupElement>().unwrap(), GroupElement::IR);
        assert_eq!("CR".parse::<GroupElement>().unwrap(), GroupElement::RC);
        assert_eq!("IRRI".parse::<GroupElement>().unwrap(), GroupElement::E);
        for g in GroupElement::ALL {
            assert_eq!(g.name().parse::<GroupElement>().unwrap(), g);
        }
        assert!("IX".parse::<GroupElement>().is_err());
    }

    #[test]
    fn orbits() {
        let pi0 = Permutation::special(Special::Pi0, 5).unwrap();
        let expected: BTreeSet<_> = [Permutation::identity(5), pi0.clone()].into();
        assert_eq!(orbit(&pi0), expected);
        assert_eq!(orbit(&Permutation::identity(5)), expected);

        let pi1 = Permutation::special(Special::Pi1, 5).unwrap();
        let expected: BTreeSet<_> = [p("23451"), p("51234"), p("15432"), p("43215")].into();
        assert_eq!(orbit(&pi1), expected);

        for q in all_perms(4) {
            assert_eq!(8 % orbit(&q).len(), 0);
        }
    }
}
