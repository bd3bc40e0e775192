//! Library results against brute-force oracles that do not share its code.

mod common;

use quotient::alphabet::Symbol;
use quotient::automata::{kappa, Dfa};
use quotient::ideals::{check_freeness, closure, min_generator, IdealType};
use quotient::regex::Regex;
use quotient::verify::{bound_value, BoundParams, BoundTag};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::checks::{derivative_closed_forms, membership_agreement};
use common::{is_factor, is_subword, letters, quotient_count, random_rx, words};

#[test]
fn derivative_automata_agree_with_the_span_matcher() {
    membership_agreement(150, 4, 7, 5).unwrap();
}

#[test]
fn derivative_closed_forms_hold() {
    derivative_closed_forms(20, 3, 6).unwrap();
}

fn subwords(w: &[Symbol]) -> Vec<Vec<Symbol>> {
    (0u32..1 << w.len())
        .map(|mask| {
            w.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect()
        })
        .collect()
}

fn closure_member(t: IdealType, w: &[Symbol], l: impl Fn(&[Symbol]) -> bool) -> bool {
    let n = w.len();
    match t {
        IdealType::Right => (0..=n).any(|i| l(&w[..i])),
        IdealType::Left => (0..=n).any(|i| l(&w[i..])),
        IdealType::TwoSided => (0..=n).any(|i| (i..=n).any(|j| l(&w[i..j]))),
        IdealType::AllSided => subwords(w).iter().any(|u| l(u)),
    }
}

#[test]
fn closures_match_their_definitions() {
    let sigma = letters("ab");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let all = words(2, 7);
    let mut checked = 0;
    while checked < 60 {
        let rx = random_rx(&mut rng, 4, 2);
        let d = Regex::parse(&rx.render(&["a", "b"]), &sigma)
            .unwrap()
            .to_dfa()
            .unwrap();
        if d.is_empty_language() {
            continue;
        }
        for t in IdealType::ALL {
            let c = closure(&d, t).unwrap();
            for w in &all {
                let expected = closure_member(t, w, |u| rx.matches(u));
                assert_eq!(c.accepts(w), expected, "{t} closure of {d:?} on {w:?}");
            }
        }
        checked += 1;
    }
}

#[test]
fn factor_and_subword_helpers() {
    let w = letters("ab").parse_word("abba").unwrap();
    let ab = letters("ab").parse_word("ab").unwrap();
    let aa = letters("ab").parse_word("aa").unwrap();
    assert!(is_factor(&ab, &w));
    assert!(!is_factor(&aa, &w));
    assert!(is_subword(&aa, &w));
}

/// Minimal generator membership straight from the definitions.
fn generator_member(t: IdealType, w: &[Symbol], l: &Dfa) -> bool {
    if !l.accepts(w) {
        return false;
    }
    let n = w.len();
    match t {
        IdealType::Right => (0..n).all(|i| !l.accepts(&w[..i])),
        IdealType::Left => (1..=n).all(|i| !l.accepts(&w[i..])),
        IdealType::TwoSided => (0..=n)
            .flat_map(|i| (i..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| j - i < n)
            .all(|(i, j)| !l.accepts(&w[i..j])),
        IdealType::AllSided => subwords(w).iter().filter(|u| u.len() < n).all(|u| !l.accepts(u)),
    }
}

fn four_state(edges: [(usize, char, usize); 6]) -> Dfa {
    let sigma = letters("ab");
    let mut delta = vec![3; 8];
    for (p, a, q) in edges {
        delta[p * 2 + (a as usize - 'a' as usize)] = q;
    }
    Dfa::new(sigma, delta, 0, vec![false, false, false, true]).unwrap()
}

fn generator_exceeds_bound(l: Dfa, t: IdealType, expected: usize) {
    assert_eq!(kappa(&l), 4);
    assert!(closure(&l, t).map(|c| quotient::automata::equivalent(&c, &l).unwrap()).unwrap());
    let g = min_generator(&l, t).unwrap();
    assert!(g.freeness_verified);
    assert!(check_freeness(&g.generator, t));
    for w in words(2, 8) {
        assert_eq!(g.generator.accepts(&w), generator_member(t, &w, &l), "{w:?}");
    }
    let brute = quotient_count(2, |w| generator_member(t, w, &l), 5, 6);
    assert_eq!(brute, expected);
    assert_eq!(kappa(&g.generator), expected);
    let bound = bound_value(BoundTag::T13, BoundParams::n(4)).unwrap();
    assert!(expected as u64 > bound, "bound {bound}");
}

#[test]
fn factor_free_generator_of_a_four_quotient_ideal_has_six_quotients() {
    let l = four_state([(0, 'a', 1), (0, 'b', 2), (1, 'a', 3), (1, 'b', 1), (2, 'a', 1), (2, 'b', 1)]);
    generator_exceeds_bound(l, IdealType::TwoSided, 6);
}

#[test]
fn subword_free_generator_of_a_four_quotient_ideal_has_six_quotients() {
    let l = four_state([(0, 'a', 1), (0, 'b', 2), (1, 'a', 2), (1, 'b', 3), (2, 'a', 3), (2, 'b', 3)]);
    generator_exceeds_bound(l, IdealType::AllSided, 6);
}

#[test]
fn quotient_count_matches_kappa_on_random_languages() {
    let sigma = letters("ab");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..80 {
        let rx = random_rx(&mut rng, 3, 2);
        let d = Regex::parse(&rx.render(&["a", "b"]), &sigma)
            .unwrap()
            .to_dfa()
            .unwrap();
        let k = kappa(&d);
        if k <= 5 {
            assert_eq!(quotient_count(2, |w| rx.matches(w), 5, 6), k, "{}", rx.render(&["a", "b"]));
        }
    }
}
