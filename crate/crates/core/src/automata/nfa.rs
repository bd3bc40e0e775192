use crate::alphabet::{Alphabet, Symbol};

use super::State;

/// Nondeterministic automaton with a set of start states and no
/// ε-transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    // delta[q * |Σ| + a], each list sorted and duplicate-free
    delta: Vec<Vec<State>>,
    starts: Vec<State>,
    finals: Vec<bool>,
}

impl Nfa {
    /// An NFA with `states` states, no edges, no starts and no finals.
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        Nfa {
            delta: vec![Vec::new(); states * alphabet.len()],
            alphabet,
            starts: Vec::new(),
            finals: vec![false; states],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    /// Appends a fresh state and returns its index.
    pub fn add_state(&mut self) -> State {
        self.finals.push(false);
        self.delta
            .extend(std::iter::repeat_with(Vec::new).take(self.alphabet.len()));
        self.finals.len() - 1
    }

    pub fn add_edge(&mut self, from: State, a: Symbol, to: State) {
        assert!(from < self.state_count() && to < self.state_count());
        let list = &mut self.delta[from * self.alphabet.len() + a.index()];
        if let Err(pos) = list.binary_search(&to) {
            list.insert(pos, to);
        }
    }

    pub fn add_start(&mut self, q: State) {
        assert!(q < self.state_count());
        if let Err(pos) = self.starts.binary_search(&q) {
            self.starts.insert(pos, q);
        }
    }

    pub fn set_final(&mut self, q: State, is_final: bool) {
        self.finals[q] = is_final;
    }

    pub fn successors(&self, q: State, a: Symbol) -> &[State] {
        &self.delta[q * self.alphabet.len() + a.index()]
    }

    pub fn starts(&self) -> &[State] {
        &self.starts
    }

    pub fn is_final(&self, q: State) -> bool {
        self.finals[q]
    }

    /// Membership by direct subset simulation.
    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let n = self.state_count();
        let mut current = vec![false; n];
        for &q in &self.starts {
            current[q] = true;
        }
        for &a in word {
            let mut next = vec![false; n];
            for q in (0..n).filter(|&q| current[q]) {
                for &r in self.successors(q, a) {
                    next[r] = true;
                }
            }
            current = next;
        }
        (0..n).any(|q| current[q] && self.finals[q])
    }
}
