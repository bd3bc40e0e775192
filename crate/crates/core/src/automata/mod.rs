//! Complete DFAs, ε-free NFAs, and the constructions built on them.
//!
//! A [`Dfa`] is always complete: every `(state, symbol)` pair has exactly one
//! successor, so the empty quotient is an explicit state whenever it is
//! reachable. The quotient complexity of a language is the state count of its
//! minimal complete DFA, see [`kappa`].

mod format;
mod minimize;
mod nfa;
mod ops;
mod subset;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::alphabet::{Alphabet, Symbol};

pub use format::FormatError;
pub use minimize::minimize;
pub use nfa::Nfa;
pub use ops::{
    boolean_combine, complement, concatenate, contains, enumerate_words, equivalent, kappa,
    reverse, star, BoolOp,
};
pub use subset::{determinize, determinize_labeled};

pub type State = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutomatonError {
    #[error("alphabet mismatch: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("state {state} out of range (automaton has {states} states)")]
    StateOutOfRange { state: usize, states: usize },
    #[error("transition table has {got} entries, expected {expected}")]
    TableSize { got: usize, expected: usize },
}

pub(crate) fn check_alphabets(a: &Alphabet, b: &Alphabet) -> Result<(), AutomatonError> {
    if a == b {
        Ok(())
    } else {
        Err(AutomatonError::AlphabetMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

/// Complete deterministic finite automaton.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    // row-major: delta[q * |Σ| + a]
    delta: Vec<State>,
    initial: State,
    finals: Vec<bool>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        delta: Vec<State>,
        initial: State,
        finals: Vec<bool>,
    ) -> Result<Self, AutomatonError> {
        let states = finals.len();
        if states == 0 {
            return Err(AutomatonError::NoStates);
        }
        let expected = states * alphabet.len();
        if delta.len() != expected {
            return Err(AutomatonError::TableSize {
                got: delta.len(),
                expected,
            });
        }
        if let Some(&state) = delta.iter().chain([&initial]).find(|&&q| q >= states) {
            return Err(AutomatonError::StateOutOfRange { state, states });
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            finals,
        })
    }

    /// Builds a DFA from a transition function and a finality predicate.
    pub fn from_fn(
        alphabet: Alphabet,
        states: usize,
        initial: State,
        mut next: impl FnMut(State, Symbol) -> State,
        mut is_final: impl FnMut(State) -> bool,
    ) -> Result<Self, AutomatonError> {
        let delta = (0..states)
            .flat_map(|q| alphabet.symbols().map(move |a| (q, a)))
            .map(|(q, a)| next(q, a))
            .collect();
        let finals = (0..states).map(&mut is_final).collect();
        Dfa::new(alphabet, delta, initial, finals)
    }

    /// The one-state automaton for Σ* (`full`) or ∅.
    pub fn universal(alphabet: Alphabet, full: bool) -> Self {
        Dfa::from_fn(alphabet, 1, 0, |_, _| 0, |_| full).expect("valid")
    }

    /// The automaton for `{ε}`.
    pub fn epsilon(alphabet: Alphabet) -> Self {
        Dfa::from_fn(alphabet, 2, 0, |_, _| 1, |q| q == 0).expect("valid")
    }

    /// The automaton for the single word `w`.
    pub fn word(alphabet: Alphabet, w: &[Symbol]) -> Self {
        let dead = w.len() + 1;
        Dfa::from_fn(
            alphabet,
            w.len() + 2,
            0,
            |q, a| if q < w.len() && w[q] == a { q + 1 } else { dead },
            |q| q == w.len(),
        )
        .expect("valid")
    }

    /// The automaton for `Σ^lo ∪ … ∪ Σ^hi` (or `Σ^lo Σ*` when `hi` is `None`).
    pub fn lengths(alphabet: Alphabet, lo: usize, hi: Option<usize>) -> Self {
        match hi {
            None => Dfa::from_fn(alphabet, lo + 1, 0, |q, _| (q + 1).min(lo), |q| q == lo),
            Some(hi) => {
                let dead = hi + 1;
                Dfa::from_fn(
                    alphabet,
                    hi + 2,
                    0,
                    |q, _| (q + 1).min(dead),
                    |q| q >= lo && q <= hi,
                )
            }
        }
        .expect("valid")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    #[inline]
    pub fn next(&self, q: State, a: Symbol) -> State {
        self.delta[q * self.alphabet.len() + a.index()]
    }

    #[inline]
    pub fn is_final(&self, q: State) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = State> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(q, &f)| f.then_some(q))
    }

    pub fn final_count(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    pub fn run_from(&self, from: State, word: &[Symbol]) -> State {
        word.iter().fold(from, |q, &a| self.next(q, a))
    }

    pub fn run(&self, word: &[Symbol]) -> State {
        self.run_from(self.initial, word)
    }

    pub fn accepts(&self, word: &[Symbol]) -> bool {
        self.is_final(self.run(word))
    }

    /// Same automaton with a different initial state.
    pub fn with_initial(&self, q: State) -> Dfa {
        assert!(q < self.state_count());
        Dfa {
            initial: q,
            ..self.clone()
        }
    }

    /// States reachable from the initial state, in BFS order with the
    /// alphabet's symbol order.
    pub fn reachable(&self) -> Vec<State> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in self.alphabet.symbols() {
                let r = self.next(q, a);
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
        }
        order
    }

    /// `L(q) = ∅` for each state.
    pub fn dead_states(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut preds: Vec<Vec<State>> = vec![Vec::new(); n];
        for q in 0..n {
            for a in self.alphabet.symbols() {
                preds[self.next(q, a)].push(q);
            }
        }
        let mut live = self.finals.clone();
        let mut queue: VecDeque<State> = self.finals().collect();
        while let Some(q) = queue.pop_front() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    queue.push_back(p);
                }
            }
        }
        live.into_iter().map(|l| !l).collect()
    }

    pub fn is_empty_language(&self) -> bool {
        self.dead_states()[self.initial]
    }

    /// Language inclusion between states: `incl[p * n + q]` iff `L(p) ⊆ L(q)`.
    ///
    /// Greatest fixed point of `incl(p, q) ⇒ (p ∈ F ⇒ q ∈ F) ∧ ∀a incl(pa, qa)`.
    pub fn inclusion_relation(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut incl: Vec<bool> = (0..n * n)
            .map(|i| !(self.finals[i / n] && !self.finals[i % n]))
            .collect();
        let mut changed = true;
        while changed {
            changed = false;
            for p in 0..n {
                for q in 0..n {
                    if incl[p * n + q]
                        && self
                            .alphabet
                            .symbols()
                            .any(|a| !incl[self.next(p, a) * n + self.next(q, a)])
                    {
                        incl[p * n + q] = false;
                        changed = true;
                    }
                }
            }
        }
        incl
    }

    /// View as an NFA with a single start state.
    pub fn to_nfa(&self) -> Nfa {
        let mut nfa = Nfa::new(self.alphabet.clone(), self.state_count());
        for q in 0..self.state_count() {
            for a in self.alphabet.symbols() {
                nfa.add_edge(q, a, self.next(q, a));
            }
            nfa.set_final(q, self.is_final(q));
        }
        nfa.add_start(self.initial);
        nfa
    }

    /// Line-oriented text serialization.
    pub fn to_text(&self) -> String {
        format::write_dfa(self)
    }

    pub fn from_text(text: &str) -> Result<Dfa, FormatError> {
        format::read_dfa(text)
    }
}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Quick structural features of quotients, read off a minimal DFA.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QuotientFeatures {
    /// Σ*: an accepting state looping on every symbol.
    pub sigma_star: bool,
    /// ∅: a rejecting state looping on every symbol.
    pub empty: bool,
    /// {ε}: an accepting state whose successors are all ∅.
    pub epsilon: bool,
    /// Σ⁺: a rejecting state whose successors are all Σ*.
    pub sigma_plus: bool,
}

impl QuotientFeatures {
    /// Expects a minimal DFA (every state reachable, no two equivalent).
    pub fn of(d: &Dfa) -> Self {
        let n = d.state_count();
        let sink = |q: State| d.alphabet.symbols().all(|a| d.next(q, a) == q);
        let full: Vec<bool> = (0..n).map(|q| d.is_final(q) && sink(q)).collect();
        let empty: Vec<bool> = (0..n).map(|q| !d.is_final(q) && sink(q)).collect();
        let all_to = |q: State, target: &[bool]| d.alphabet.symbols().all(|a| target[d.next(q, a)]);
        QuotientFeatures {
            sigma_star: full.iter().any(|&b| b),
            empty: empty.iter().any(|&b| b),
            epsilon: (0..n).any(|q| d.is_final(q) && all_to(q, &empty)),
            sigma_plus: (0..n).any(|q| !d.is_final(q) && all_to(q, &full)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::letters("ab").unwrap()
    }

    #[test]
    fn constructor_validation() {
        assert_eq!(
            Dfa::new(ab(), vec![], 0, vec![]),
            Err(AutomatonError::NoStates)
        );
        assert_eq!(
            Dfa::new(ab(), vec![0], 0, vec![true]),
            Err(AutomatonError::TableSize {
                got: 1,
                expected: 2
            })
        );
        assert_eq!(
            Dfa::new(ab(), vec![0, 3], 0, vec![true]),
            Err(AutomatonError::StateOutOfRange {
                state: 3,
                states: 1
            })
        );
    }

    #[test]
    fn word_and_lengths() {
        let a = Symbol(0);
        let b = Symbol(1);
        let d = Dfa::word(ab(), &[a, b]);
        assert!(d.accepts(&[a, b]));
        assert!(!d.accepts(&[a]));
        assert!(!d.accepts(&[a, b, a]));
        let l = Dfa::lengths(ab(), 2, None);
        assert!(!l.accepts(&[a]));
        assert!(l.accepts(&[a, b, b]));
        let l = Dfa::lengths(ab(), 1, Some(2));
        assert!(!l.accepts(&[]));
        assert!(l.accepts(&[b, b]));
        assert!(!l.accepts(&[b, b, b]));
    }

    #[test]
    fn inclusion_relation_on_lengths() {
        // states of Σ²Σ*: q0 ⊆ q1 ⊆ q2
        let d = Dfa::lengths(ab(), 2, None);
        let incl = d.inclusion_relation();
        assert!(incl[1] && incl[2] && incl[5]);
        assert!(!incl[3] && !incl[6] && !incl[7]);
    }

    #[test]
    fn features() {
        let f = QuotientFeatures::of(&minimize(&Dfa::lengths(ab(), 1, None)));
        assert!(f.sigma_star && f.sigma_plus && !f.empty && !f.epsilon);
        let f = QuotientFeatures::of(&minimize(&Dfa::epsilon(ab())));
        assert!(f.epsilon && f.empty && !f.sigma_star);
    }
}
