//! Ideal languages: closures, classification and minimal generators.
//!
//! A non-empty language `L` is a right ideal if `L = LΣ*`, a left ideal if
//! `L = Σ*L`, a two-sided ideal if `L = Σ*LΣ*`, and an all-sided ideal if it
//! equals the shuffle `Σ* ⧢ L`, i.e. it is closed upward under the subword
//! (subsequence) order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automata::{
    boolean_combine, concatenate, determinize, equivalent, minimize, AutomatonError, BoolOp, Dfa,
    Nfa,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealType {
    Right,
    Left,
    TwoSided,
    AllSided,
}

impl IdealType {
    pub const ALL: [IdealType; 4] = [
        IdealType::Right,
        IdealType::Left,
        IdealType::TwoSided,
        IdealType::AllSided,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealType::Right => "right",
            IdealType::Left => "left",
            IdealType::TwoSided => "two-sided",
            IdealType::AllSided => "all-sided",
        }
    }

    /// The kind of freeness the minimal generator has.
    pub fn freeness(self) -> &'static str {
        match self {
            IdealType::Right => "prefix-free",
            IdealType::Left => "suffix-free",
            IdealType::TwoSided => "factor-free",
            IdealType::AllSided => "subword-free",
        }
    }
}

impl fmt::Display for IdealType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "right" => Ok(IdealType::Right),
            "left" => Ok(IdealType::Left),
            "two" | "two-sided" | "2-sided" => Ok(IdealType::TwoSided),
            "all" | "all-sided" => Ok(IdealType::AllSided),
            _ => Err(format!(
                "unknown ideal type `{s}` (expected right, left, two-sided or all-sided)"
            )),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals are non-empty; the input language is empty")]
    EmptyLanguage,
    #[error("the language is not a {0} ideal")]
    NotAnIdeal(IdealType),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

/// Minimal DFA of `LΣ*`, `Σ*L`, `Σ*LΣ*` or `Σ* ⧢ L`.
pub fn closure(d: &Dfa, t: IdealType) -> Result<Dfa, IdealError> {
    if d.is_empty_language() {
        return Err(IdealError::EmptyLanguage);
    }
    Ok(match t {
        IdealType::Right => right_closure(d),
        IdealType::Left => left_closure(d),
        IdealType::TwoSided => right_closure(&left_closure(d)),
        IdealType::AllSided => minimize(&determinize(&insertion_nfa(d))),
    })
}

/// Accept as soon as some prefix is in `L`: every final state becomes a sink.
fn right_closure(d: &Dfa) -> Dfa {
    let n = d.state_count();
    let absorbed = Dfa::from_fn(
        d.alphabet().clone(),
        n,
        d.initial(),
        |q, a| if d.is_final(q) { q } else { d.next(q, a) },
        |q| d.is_final(q),
    )
    .expect("valid");
    minimize(&absorbed)
}

/// Σ*-prefix: the start state also loops on every symbol.
fn left_closure(d: &Dfa) -> Dfa {
    let mut nfa = d.to_nfa();
    for a in d.alphabet().symbols() {
        nfa.add_edge(d.initial(), a, d.initial());
    }
    minimize(&determinize(&nfa))
}

/// `d` with a self-loop on every symbol at every state: accepts every word
/// obtained from a word of `L` by inserting letters.
fn insertion_nfa(d: &Dfa) -> Nfa {
    let mut nfa = d.to_nfa();
    for q in 0..d.state_count() {
        for a in d.alphabet().symbols() {
            nfa.add_edge(q, a, q);
        }
    }
    nfa
}

/// Words having a proper subword in `L`: a copy of `d` with a flag bit that
/// is set by any inserted letter; accept when `d` accepts and the flag is set.
fn proper_insertion_nfa(d: &Dfa) -> Nfa {
    let n = d.state_count();
    let mut nfa = Nfa::new(d.alphabet().clone(), 2 * n);
    for q in 0..n {
        for a in d.alphabet().symbols() {
            let r = d.next(q, a);
            nfa.add_edge(q, a, r);
            nfa.add_edge(n + q, a, n + r);
            nfa.add_edge(q, a, n + q);
            nfa.add_edge(n + q, a, n + q);
        }
        nfa.set_final(n + q, d.is_final(q));
    }
    nfa.add_start(d.initial());
    nfa
}

/// The ideal types `d` belongs to; decided by comparing `d` with each closure.
pub fn classify(d: &Dfa) -> BTreeSet<IdealType> {
    if d.is_empty_language() {
        return BTreeSet::new();
    }
    IdealType::ALL
        .into_iter()
        .filter(|&t| {
            let c = closure(d, t).expect("non-empty");
            equivalent(d, &c).expect("same alphabet")
        })
        .collect()
}

pub fn is_ideal(d: &Dfa, t: IdealType) -> bool {
    !d.is_empty_language() && equivalent(d, &closure(d, t).expect("non-empty")).expect("same alphabet")
}

/// Membership of an ideal class read directly off the automaton structure:
///
/// * right: every successor of a reachable final state is final;
/// * left: `L ⊆ L_u` for every `u`, i.e. the initial state's language is
///   included in that of every reachable state;
/// * all-sided: `L_u ⊆ L_{ua}` for every reachable state and letter.
pub fn is_ideal_structural(d: &Dfa, t: IdealType) -> bool {
    if d.is_empty_language() {
        return false;
    }
    let reachable = d.reachable();
    let sigma = d.alphabet();
    let right = || {
        reachable
            .iter()
            .filter(|&&q| d.is_final(q))
            .all(|&q| sigma.symbols().all(|a| d.is_final(d.next(q, a))))
    };
    let n = d.state_count();
    match t {
        IdealType::Right => right(),
        IdealType::Left => {
            let incl = d.inclusion_relation();
            reachable.iter().all(|&q| incl[d.initial() * n + q])
        }
        IdealType::TwoSided => right() && is_ideal_structural(d, IdealType::Left),
        IdealType::AllSided => {
            let incl = d.inclusion_relation();
            reachable
                .iter()
                .all(|&q| sigma.symbols().all(|a| incl[q * n + d.next(q, a)]))
        }
    }
}

/// `Σ⁺`-style padding languages used by generator extraction.
fn one_letter(d: &Dfa) -> Dfa {
    Dfa::lengths(d.alphabet().clone(), 1, Some(1))
}

fn nonempty_words(d: &Dfa) -> Dfa {
    Dfa::lengths(d.alphabet().clone(), 1, None)
}

fn concat(x: &Dfa, y: &Dfa) -> Dfa {
    concatenate(x, y).expect("same alphabet")
}

fn combine(x: &Dfa, y: &Dfa, op: BoolOp) -> Dfa {
    minimize(&boolean_combine(x, y, op).expect("same alphabet"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorResult {
    pub generator: Dfa,
    pub ideal_type: IdealType,
    /// The generator passed [`check_freeness`] for its type.
    pub freeness_verified: bool,
}

/// Minimal DFA of the minimal generator of the ideal `d`.
///
/// Right: `L \ LΣ`; left: `L \ ΣL`; two-sided: `L \ (ΣL ∪ LΣ)`; all-sided:
/// `L` minus the words having a proper subword in `L`.
pub fn min_generator(d: &Dfa, t: IdealType) -> Result<GeneratorResult, IdealError> {
    if !is_ideal(d, t) {
        return Err(IdealError::NotAnIdeal(t));
    }
    let sigma = one_letter(d);
    let removed = match t {
        IdealType::Right => concat(d, &sigma),
        IdealType::Left => concat(&sigma, d),
        IdealType::TwoSided => combine(&concat(&sigma, d), &concat(d, &sigma), BoolOp::Union),
        IdealType::AllSided => minimize(&determinize(&proper_insertion_nfa(d))),
    };
    let generator = combine(d, &removed, BoolOp::Diff);
    let freeness_verified = check_freeness(&generator, t);
    Ok(GeneratorResult {
        generator,
        ideal_type: t,
        freeness_verified,
    })
}

/// Whether no word of `L` has a proper prefix / suffix / factor / subword
/// (according to `t`) that is also in `L`.
pub fn check_freeness(d: &Dfa, t: IdealType) -> bool {
    let plus = nonempty_words(d);
    let full = Dfa::universal(d.alphabet().clone(), true);
    let expanded = match t {
        IdealType::Right => concat(d, &plus),
        IdealType::Left => concat(&plus, d),
        IdealType::TwoSided => combine(
            &concat(&plus, &concat(d, &full)),
            &concat(&full, &concat(d, &plus)),
            BoolOp::Union,
        ),
        IdealType::AllSided => minimize(&determinize(&proper_insertion_nfa(d))),
    };
    boolean_combine(d, &expanded, BoolOp::Inter)
        .expect("same alphabet")
        .is_empty_language()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::automata::kappa;
    use crate::regex::Regex;

    fn dfa(text: &str, letters: &str) -> Dfa {
        Regex::parse(text, &Alphabet::letters(letters).unwrap())
            .unwrap()
            .to_dfa()
            .unwrap()
    }

    #[test]
    fn empty_language_errors() {
        let d = dfa("0", "ab");
        assert_eq!(closure(&d, IdealType::Left), Err(IdealError::EmptyLanguage));
        assert!(classify(&d).is_empty());
        assert_eq!(
            min_generator(&d, IdealType::Right),
            Err(IdealError::NotAnIdeal(IdealType::Right))
        );
    }

    #[test]
    fn sigma_star_is_every_ideal() {
        let d = dfa(".*", "ab");
        assert_eq!(classify(&d), IdealType::ALL.into_iter().collect());
    }

    #[test]
    fn closures_of_a_word() {
        let d = dfa("ab", "ab");
        assert!(equivalent(&closure(&d, IdealType::Right).unwrap(), &dfa("ab.*", "ab")).unwrap());
        assert!(equivalent(&closure(&d, IdealType::Left).unwrap(), &dfa(".*ab", "ab")).unwrap());
        assert!(
            equivalent(&closure(&d, IdealType::TwoSided).unwrap(), &dfa(".*ab.*", "ab")).unwrap()
        );
        assert!(equivalent(
            &closure(&d, IdealType::AllSided).unwrap(),
            &dfa(".*a.*b.*", "ab")
        )
        .unwrap());
    }

    #[test]
    fn shuffle_closure_of_aa() {
        let c = closure(&dfa("aa", "ab"), IdealType::AllSided).unwrap();
        assert_eq!(kappa(&c), 3);
    }

    #[test]
    fn unary_generator() {
        let d = dfa("aaaaa*", "a");
        let g = min_generator(&d, IdealType::Right).unwrap();
        assert!(equivalent(&g.generator, &dfa("aaaa", "a")).unwrap());
        assert_eq!(kappa(&g.generator), 6);
        assert!(g.freeness_verified);
    }

    #[test]
    fn freeness() {
        assert!(check_freeness(&dfa("aaaa", "a"), IdealType::Right));
        assert!(check_freeness(&dfa("a(a|b)^2", "ab"), IdealType::Left));
        assert!(!check_freeness(&dfa("a|aa", "a"), IdealType::Right));
        assert!(!check_freeness(&dfa("ab|aab", "ab"), IdealType::Left));
        assert!(check_freeness(&dfa("ab|ba", "ab"), IdealType::TwoSided));
        assert!(!check_freeness(&dfa("ab|aab", "ab"), IdealType::TwoSided));
        assert!(!check_freeness(&dfa("ab|acb", "abc"), IdealType::AllSided));
        assert!(check_freeness(&dfa("ab|ba", "ab"), IdealType::AllSided));
        assert!(check_freeness(&dfa("aa|bb", "ab"), IdealType::AllSided));
    }

    #[test]
    fn structural_checks_match_closures() {
        for text in [".*", "a.*", ".*a", ".*a.*", ".*a.*b.*", "ab", "(ab)*", "a|b.*"] {
            let d = dfa(text, "ab");
            for t in IdealType::ALL {
                assert_eq!(is_ideal_structural(&d, t), is_ideal(&d, t), "{text} {t}");
            }
        }
    }

    #[test]
    fn parses_type_names() {
        assert_eq!("all".parse::<IdealType>(), Ok(IdealType::AllSided));
        assert_eq!("two-sided".parse::<IdealType>(), Ok(IdealType::TwoSided));
        assert!("middle".parse::<IdealType>().is_err());
    }
}
