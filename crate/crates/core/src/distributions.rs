//! Distributions of statistics over S_n and the comparisons built on them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::Enumerator;
use crate::error::Result;
use crate::group::GroupElement;
use crate::registry::{registry, Registry, StatisticDescriptor};

/// Value counts of a statistic over S_n, lowest value first.
///
/// `offset` is the value counted by `coeffs[0]`: zero for nonnegative
/// statistics, negative otherwise. Trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistPolynomial {
    pub n: usize,
    pub offset: i64,
    pub coeffs: Vec<u64>,
}

impl DistPolynomial {
    pub fn new(n: usize, coeffs: Vec<u64>) -> Self {
        let mut d = DistPolynomial {
            n,
            offset: 0,
            coeffs,
        };
        d.trim();
        d
    }

    fn from_tally(n: usize, tally: &BTreeMap<i64, u64>) -> Self {
        let lo = tally.keys().next().copied().unwrap_or(0).min(0);
        let hi = tally.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![0u64; (hi - lo + 1) as usize];
        for (&v, &c) in tally {
            coeffs[(v - lo) as usize] = c;
        }
        let mut d = DistPolynomial {
            n,
            offset: lo,
            coeffs,
        };
        d.trim();
        d
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Highest value with a nonzero count.
    pub fn degree(&self) -> i64 {
        self.offset + self.coeffs.len() as i64 - 1
    }

    /// Count of permutations taking value `v`.
    pub fn coeff(&self, v: i64) -> u64 {
        usize::try_from(v - self.offset)
            .ok()
            .and_then(|i| self.coeffs.get(i).copied())
            .unwrap_or(0)
    }
}

/// Coefficients of `prod_{i=1}^{n} (1 + q + ... + q^{i-1})`.
pub fn qfactorial(n: usize) -> DistPolynomial {
    let mut coeffs = vec![1u64];
    for i in 1..=n {
        let mut next = vec![0u64; coeffs.len() + i - 1];
        for (k, &c) in coeffs.iter().enumerate() {
            for slot in &mut next[k..k + i] {
                *slot = slot
                    .checked_add(c)
                    .expect("q-factorial coefficient overflow");
            }
        }
        coeffs = next;
    }
    DistPolynomial::new(n, coeffs)
}

/// Joint counts over (Eulerian value, Mahonian value) pairs, dense.
///
/// Rows cover at least `0..n` and columns at least `0..=n(n-1)/2`; both
/// extend further (including below zero) when the data require it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JointDist {
    pub n: usize,
    pub row_offset: i64,
    pub col_offset: i64,
    pub rows: Vec<Vec<u64>>,
}

impl JointDist {
    fn from_tally(n: usize, tally: &BTreeMap<(i64, i64), u64>) -> Self {
        let max_mahonian = (n * (n - 1) / 2) as i64;
        let (mut rlo, mut rhi, mut clo, mut chi) = (0, n as i64 - 1, 0, max_mahonian);
        for &(e, m) in tally.keys() {
            rlo = rlo.min(e);
            rhi = rhi.max(e);
            clo = clo.min(m);
            chi = chi.max(m);
        }
        let width = (chi - clo + 1) as usize;
        let mut rows = vec![vec![0u64; width]; (rhi - rlo + 1) as usize];
        for (&(e, m), &c) in tally {
            rows[(e - rlo) as usize][(m - clo) as usize] = c;
        }
        JointDist {
            n,
            row_offset: rlo,
            col_offset: clo,
            rows,
        }
    }

    pub fn total(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().map(|r| r[c]).sum())
            .collect()
    }

    pub fn get(&self, e: i64, m: i64) -> u64 {
        let (Ok(r), Ok(c)) = (
            usize::try_from(e - self.row_offset),
            usize::try_from(m - self.col_offset),
        ) else {
            return 0;
        };
        self.rows
            .get(r)
            .and_then(|row| row.get(c))
            .copied()
            .unwrap_or(0)
    }
}

/// A surviving `(candidate, g)` with `candidate(p^g) = target(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub candidate: String,
    pub element: String,
}

/// Distribution queries against the statistic registry.
#[derive(Debug, Clone, Copy)]
pub struct Engine {
    registry: &'static Registry,
    enumerator: Enumerator,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(Enumerator::default())
    }
}

impl Engine {
    pub fn new(enumerator: Enumerator) -> Self {
        Engine {
            registry: registry(),
            enumerator,
        }
    }

    pub fn enumerator(&self) -> &Enumerator {
        &self.enumerator
    }

    fn stat(&self, name: &str) -> Result<&'static StatisticDescriptor> {
        self.registry.lookup(name)
    }

    pub fn distribution(&self, name: &str, n: usize) -> Result<DistPolynomial> {
        let stat = self.stat(name)?;
        let tally = self.enumerator.fold(
            n,
            BTreeMap::new,
            |acc: &mut BTreeMap<i64, u64>, p| *acc.entry(stat.eval(p)).or_default() += 1,
            merge_tallies,
        )?;
        Ok(DistPolynomial::from_tally(n, &tally))
    }

    pub fn is_mahonian(&self, name: &str, n: usize) -> Result<bool> {
        Ok(self.distribution(name, n)? == qfactorial(n))
    }

    pub fn is_eulerian(&self, name: &str, n: usize) -> Result<bool> {
        Ok(self.distribution(name, n)? == self.distribution("des", n)?)
    }

    pub fn joint(&self, eulerian: &str, mahonian: &str, n: usize) -> Result<JointDist> {
        let e = self.stat(eulerian)?;
        let m = self.stat(mahonian)?;
        let tally = self.enumerator.fold(
            n,
            BTreeMap::new,
            |acc: &mut BTreeMap<(i64, i64), u64>, p| {
                *acc.entry((e.eval(p), m.eval(p))).or_default() += 1
            },
            merge_tallies,
        )?;
        Ok(JointDist::from_tally(n, &tally))
    }

    pub fn equidistributed(
        &self,
        first: (&str, &str),
        second: (&str, &str),
        n: usize,
    ) -> Result<bool> {
        Ok(self.joint(first.0, first.1, n)? == self.joint(second.0, second.1, n)?)
    }

    /// Groups statistics whose joint distribution with `eulerian` agrees.
    /// Classes and their members keep the input order.
    pub fn partition_classes(
        &self,
        names: &[&str],
        eulerian: &str,
        n: usize,
    ) -> Result<Vec<Vec<String>>> {
        let mut classes: Vec<(JointDist, Vec<String>)> = Vec::new();
        for &name in names {
            let j = self.joint(eulerian, name, n)?;
            match classes.iter_mut().find(|(k, _)| *k == j) {
                Some((_, members)) => members.push(name.to_string()),
                None => classes.push((j, vec![name.to_string()])),
            }
        }
        Ok(classes.into_iter().map(|(_, m)| m).collect())
    }

    /// All `(S, g)` with `S(p^g) = target(p)` on every `p` in S_n for
    /// `2 <= n <= n_max`.
    pub fn equiv_search(
        &self,
        target: &str,
        candidates: &[&str],
        n_max: usize,
    ) -> Result<Vec<Equivalence>> {
        let target = self.stat(target)?;
        let cands = candidates
            .iter()
            .map(|c| self.stat(c))
            .collect::<Result<Vec<_>>>()?;
        self.enumerator.check(n_max.max(1))?;
        // (candidate, index into GroupElement::ALL)
        let pairs: Vec<(&StatisticDescriptor, usize)> = cands
            .iter()
            .flat_map(|&c| (0..GroupElement::ALL.len()).map(move |g| (c, g)))
            .collect();
        let mut alive = vec![true; pairs.len()];
        for n in 2..=n_max {
            let failed = self.enumerator.fold(
                n,
                || vec![false; pairs.len()],
                |acc: &mut Vec<bool>, p| {
                    let t = target.eval(p);
                    let images: Vec<_> = GroupElement::ALL.iter().map(|g| g.apply(p)).collect();
                    for (k, &(s, g)) in pairs.iter().enumerate() {
                        if !acc[k] {
                            acc[k] = s.eval(&images[g]) != t;
                        }
                    }
                },
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x |= y);
                    a
                },
            )?;
            for (a, f) in alive.iter_mut().zip(failed) {
                *a &= !f;
            }
        }
        Ok(pairs
            .iter()
            .zip(alive)
            .filter(|(_, a)| *a)
            .map(|((s, g), _)| Equivalence {
                candidate: s.name.to_string(),
                element: GroupElement::ALL[*g].name().to_string(),
            })
            .collect())
    }
}

fn merge_tallies<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}
