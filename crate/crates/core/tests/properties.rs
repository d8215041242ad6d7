//! Invariants checked exhaustively at small n and by proptest beyond.

use std::collections::{BTreeMap, HashSet};

use num_rational::Ratio;
use permstat::classical::{self, exc_split, excedance_partials, word_inversions};
use permstat::enumerate::permutations;
use permstat::fisher_yates::{self, decode, decode_pair, encode, stat, stati, SubexcedantSeq};
use permstat::pattern::VincularPattern;
use permstat::{registry, Engine, Enumerator, GroupElement, Kind, Permutation, Special};
use proptest::prelude::*;

/// Quadratic decode that searches for letter `i` at each step.
fn decode_by_search(p: &Permutation) -> Vec<u32> {
    let mut w = p.word().to_vec();
    let n = w.len();
    let mut j = vec![0; n];
    for i in (1..=n).rev() {
        let letter = w[i - 1];
        j[i - 1] = letter;
        let pos_i = w.iter().position(|&x| x as usize == i).unwrap();
        w.swap(pos_i, i - 1);
    }
    j
}

fn brute_inv(w: &[u32]) -> u64 {
    let mut c = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            c += u64::from(w[a] > w[b]);
        }
    }
    c
}

/// Mahonian numbers by the recurrence M(n, k) = sum_{i < n} M(n-1, k-i).
fn mahonian_numbers(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 1..=n {
        let mut next = vec![0u64; row.len() + m - 1];
        for (k, slot) in next.iter_mut().enumerate() {
            for i in 0..m {
                if k >= i && k - i < row.len() {
                    *slot += row[k - i];
                }
            }
        }
        row = next;
    }
    row
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

#[test]
fn qfactorial_matches_recurrence() {
    for n in 0..=12 {
        assert_eq!(permstat::qfactorial(n).coeffs, mahonian_numbers(n), "n={n}");
    }
}

#[test]
fn parse_format_round_trip_s7() {
    for p in permutations(7) {
        assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }
}

#[test]
fn inverse_is_involution_s5() {
    for p in permutations(5) {
        assert_eq!(p.inverse().inverse(), p);
        for i in 1..=5 {
            assert_eq!(p.inverse().at(p.at(i)), i);
        }
    }
}

#[test]
fn decode_agrees_with_search_oracle_s7() {
    for p in permutations(7) {
        assert_eq!(decode(&p).as_slice(), decode_by_search(&p).as_slice());
    }
}

#[test]
fn encode_is_bijective_s7() {
    let mut seen = HashSet::new();
    for j in SubexcedantSeq::all(7) {
        let p = encode(&j);
        assert_eq!(decode(&p), j);
        assert!(seen.insert(p));
    }
    assert_eq!(seen.len(), 5040);
}

#[test]
fn decode_pair_components_swap_under_inverse() {
    for p in permutations(6) {
        let (a, b) = decode_pair(&p);
        let (c, d) = decode_pair(&p.inverse());
        assert_eq!(a, d);
        assert_eq!(b, c);
    }
}

#[test]
fn complement_identity_s6() {
    for p in permutations(6) {
        let j = decode(&p);
        let n = p.len() as u64;
        let shifted: u64 = j.as_slice().iter().map(|&x| u64::from(x) - 1).sum();
        assert_eq!(stat(&p) + shifted, n * (n - 1) / 2);
    }
}

#[test]
fn distances_bounded_and_sum_to_stat() {
    for p in permutations(6) {
        let d = decode(&p).distances();
        for (idx, &di) in d.as_slice().iter().enumerate() {
            assert!(di as usize <= idx);
        }
        assert_eq!(d.total(), stat(&p));
    }
}

#[test]
fn stat_via_encode_oracle() {
    // value assigned from the generating sequence, never decoding
    for j in SubexcedantSeq::all(6) {
        let expected: u64 = j
            .as_slice()
            .iter()
            .enumerate()
            .map(|(idx, &x)| idx as u64 + 1 - u64::from(x))
            .sum();
        assert_eq!(stat(&encode(&j)), expected);
    }
}

#[test]
fn stati_equals_stat_on_involutions_s6() {
    let mut involutions = 0;
    for p in permutations(6) {
        if p.inverse() == p {
            involutions += 1;
            assert_eq!(stati(&p), stat(&p));
        }
    }
    assert_eq!(involutions, 76);
}

#[test]
fn ska_bounds_and_zero_only_on_identity() {
    for n in 1..=7 {
        for p in permutations(n) {
            let s = fisher_yates::ska(&p);
            assert!(s < n as u64);
            assert_eq!(s == 0, p.is_identity());
        }
    }
}

#[test]
fn coherence_of_shuffle_statistics_s6() {
    for p in permutations(6) {
        let q = p.embed(1);
        assert_eq!(stat(&q), stat(&p));
        assert_eq!(stati(&q), stati(&p));
        assert_eq!(fisher_yates::ska(&q), fisher_yates::ska(&p));
    }
}

#[test]
fn closed_forms_up_to_64() {
    for n in 2..=64u64 {
        let sp = |k| Permutation::special(k, n as usize).unwrap();
        assert_eq!(stat(&sp(Special::Pi0)), n * n / 4);
        assert_eq!(stat(&sp(Special::Pi1)), n * (n - 1) / 2);
        assert_eq!(stat(&sp(Special::Pi1Inv)), n - 1);
        assert_eq!(stat(&sp(Special::Pi2)), n - 1);
        assert_eq!(fisher_yates::ska(&sp(Special::Pi0)), n / 2);
        assert_eq!(fisher_yates::ska(&sp(Special::Pi1)), n - 1);
        assert_eq!(classical::hag(&sp(Special::Pi2)), 1);
    }
}

#[test]
fn moments_match_exhaustive() {
    for n in 1..=6usize {
        let values: Vec<i128> = permutations(n).map(|p| stat(&p) as i128).collect();
        let count = values.len() as i128;
        let mean = Ratio::new(values.iter().sum::<i128>(), count);
        let second = Ratio::new(values.iter().map(|v| v * v).sum::<i128>(), count);
        let m = fisher_yates::stat_moments(n);
        assert_eq!(m.mean, mean, "n={n}");
        assert_eq!(m.variance, second - mean * mean, "n={n}");
    }
}

#[test]
fn proposition_identities_s6() {
    for p in permutations(6) {
        let split = exc_split(&p);
        let e = excedance_partials(&p);
        let inv_e = word_inversions(&split.excedant);
        let inv_n = word_inversions(&split.rest);
        assert_eq!(brute_inv(p.word()), e.edif() + classical::ine(&p));
        assert_eq!(classical::den(&p), e.ebot + classical::ine(&p));
        assert_eq!(
            classical::hag(&p) as i64,
            e.edif() as i64 + inv_e as i64 - inv_n as i64 + classical::hag_e(&p) as i64
        );
        assert_eq!(classical::inv(&p), brute_inv(p.word()));
    }
}

#[test]
fn maj_is_sum_of_descent_positions() {
    for p in permutations(6) {
        let w = p.word();
        let direct: u64 = (1..w.len())
            .filter(|&i| w[i - 1] > w[i])
            .map(|i| i as u64)
            .sum();
        assert_eq!(classical::maj(&p), direct);
    }
}

#[test]
fn maj_distribution_is_qfactorial_to_8() {
    let e = Engine::default();
    for n in 1..=8 {
        assert!(e.is_mahonian("maj", n).unwrap());
    }
}

#[test]
fn mak_val_mad_val_mahonian_to_8() {
    let e = Engine::new(Enumerator::new().with_threads(4));
    for n in 1..=8 {
        assert!(e.is_mahonian("mak_val", n).unwrap(), "mak_val n={n}");
        assert!(e.is_mahonian("mad_val", n).unwrap(), "mad_val n={n}");
    }
}

#[test]
fn registry_kinds_certified_to_6() {
    let e = Engine::default();
    for d in registry().entries() {
        for n in 1..=6 {
            match d.kind {
                Kind::Mahonian => assert!(e.is_mahonian(d.name, n).unwrap(), "{} n={n}", d.name),
                Kind::Eulerian => assert!(e.is_eulerian(d.name, n).unwrap(), "{} n={n}", d.name),
                Kind::Partial => {}
            }
        }
    }
}

#[test]
fn registry_is_coherent_s5() {
    for d in registry().entries() {
        for p in permutations(5) {
            assert_eq!(d.eval(&p.embed(1)), d.eval(&p), "{} on {p}", d.name);
        }
    }
}

#[test]
fn b_dash_a_counts_inversions_s6() {
    let pat = VincularPattern::parse("b-a").unwrap();
    for p in permutations(6) {
        assert_eq!(pat.count(&p), classical::inv(&p));
    }
}

#[test]
fn ba_counts_descents_and_cba_brute() {
    let ba = VincularPattern::parse("ba").unwrap();
    let cb_a = VincularPattern::parse("cb-a").unwrap();
    for p in permutations(6) {
        assert_eq!(ba.count(&p), classical::des(&p));
        let w = p.word();
        let mut brute = 0;
        for i in 0..w.len() - 1 {
            for k in i + 2..w.len() {
                brute += u64::from(w[i] > w[i + 1] && w[i + 1] > w[k]);
            }
        }
        assert_eq!(cb_a.count(&p), brute);
    }
}

#[test]
fn joint_margins() {
    let e = Engine::default();
    for (eul, mah) in [
        ("exc", "stat"),
        ("des", "stati"),
        ("ska", "stat"),
        ("des", "maj"),
    ] {
        let j = e.joint(eul, mah, 6).unwrap();
        assert_eq!(j.total(), 720);
        assert_eq!(j.col_sums(), permstat::qfactorial(6).coeffs);
        assert_eq!(j.row_sums(), e.distribution("des", 6).unwrap().coeffs);
    }
}

#[test]
fn partitioned_enumeration_is_deterministic() {
    let seq = Engine::default().distribution("stat", 7).unwrap();
    let par = Engine::new(Enumerator::new().with_threads(8))
        .distribution("stat", 7)
        .unwrap();
    assert_eq!(seq, par);
    let a = Engine::default().joint("ska", "stat", 6).unwrap();
    let b = Engine::new(Enumerator::new().with_threads(5))
        .joint("ska", "stat", 6)
        .unwrap();
    assert_eq!(a, b);
}

#[test]
fn equidistribution_is_an_equivalence_at_5() {
    let e = Engine::default();
    let pairs = [
        ("des", "maj"),
        ("exc", "den"),
        ("ska", "stat"),
        ("des", "inv"),
        ("exc", "stat"),
    ];
    let joints: Vec<_> = pairs
        .iter()
        .map(|&(a, b)| e.joint(a, b, 5).unwrap())
        .collect();
    for x in 0..pairs.len() {
        assert!(e.equidistributed(pairs[x], pairs[x], 5).unwrap());
        for y in 0..pairs.len() {
            let xy = e.equidistributed(pairs[x], pairs[y], 5).unwrap();
            assert_eq!(xy, e.equidistributed(pairs[y], pairs[x], 5).unwrap());
            assert_eq!(xy, joints[x] == joints[y]);
            for z in 0..pairs.len() {
                if xy && joints[y] == joints[z] {
                    assert_eq!(joints[x], joints[z]);
                }
            }
        }
    }
    // classical: (exc, den) ~ (des, maj)
    assert!(e
        .equidistributed(("exc", "den"), ("des", "maj"), 5)
        .unwrap());
    assert!(!e
        .equidistributed(("des", "stat"), ("des", "maj"), 5)
        .unwrap());
}

#[test]
fn stat_classes_exclude_classical_at_5() {
    let names = [
        "inv", "maj", "den", "mak_val", "mad_val", "hag", "stat", "stati",
    ];
    let classes = Engine::default()
        .partition_classes(&names, "des", 5)
        .unwrap();
    let covered: usize = classes.iter().map(Vec::len).sum();
    assert_eq!(covered, names.len());
    for class in &classes {
        if class.iter().any(|m| m == "stat" || m == "stati") {
            assert!(
                class.iter().all(|m| m == "stat" || m == "stati"),
                "{class:?}"
            );
        }
    }
}

#[test]
fn inv_is_invariant_under_inverse() {
    let found = Engine::default().equiv_search("inv", &["inv"], 5).unwrap();
    let elems: Vec<_> = found.iter().map(|f| f.element.as_str()).collect();
    assert!(elems.contains(&"e"));
    assert!(elems.contains(&"I"));
}

#[test]
fn orbit_stabiliser_s4() {
    for p in permutations(4) {
        let orbit = permstat::group::orbit(&p);
        let stab = GroupElement::ALL
            .iter()
            .filter(|g| g.apply(&p) == p)
            .count();
        assert_eq!(orbit.len() * stab, 8);
    }
}

#[test]
fn near_identity_is_one_for_mahonian() {
    for n in 2..=8 {
        let p = Permutation::special(Special::NearIdentity, n).unwrap();
        for d in registry().of_kind(Kind::Mahonian) {
            assert_eq!(d.eval(&p), 1, "{} n={n}", d.name);
        }
    }
}

#[test]
fn extremes_values_tally() {
    let mut tally: BTreeMap<u64, usize> = BTreeMap::new();
    for p in permutations(6) {
        *tally.entry(stat(&p)).or_default() += 1;
    }
    assert_eq!(tally[&0], 1);
    assert_eq!(tally[&15], 1);
}

proptest! {
    #[test]
    fn decode_pair_is_two_decodes(p in arb_perm(200)) {
        let (a, b) = decode_pair(&p);
        prop_assert_eq!(a.as_slice().to_vec(), decode_by_search(&p));
        prop_assert_eq!(b.as_slice().to_vec(), decode_by_search(&p.inverse()));
    }

    #[test]
    fn encode_decode_round_trip(p in arb_perm(300)) {
        prop_assert_eq!(encode(&decode(&p)), p);
    }

    #[test]
    fn group_action_preserves_size_and_validity(p in arb_perm(30), g in 0usize..8) {
        let q = GroupElement::ALL[g].apply(&p);
        prop_assert_eq!(q.len(), p.len());
        prop_assert!(Permutation::new(q.into_word()).is_ok());
    }

    #[test]
    fn inv_equals_brute(p in arb_perm(60)) {
        prop_assert_eq!(classical::inv(&p), brute_inv(p.word()));
    }
}
