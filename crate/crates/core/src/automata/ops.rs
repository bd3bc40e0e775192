use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::alphabet::Symbol;

use super::{check_alphabets, determinize, minimize, AutomatonError, Dfa, Nfa, State};

/// Binary boolean operation on languages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoolOp {
    Union,
    Inter,
    Diff,
    Xor,
}

impl BoolOp {
    pub const ALL: [BoolOp; 4] = [BoolOp::Union, BoolOp::Inter, BoolOp::Diff, BoolOp::Xor];

    pub fn apply(self, x: bool, y: bool) -> bool {
        match self {
            BoolOp::Union => x || y,
            BoolOp::Inter => x && y,
            BoolOp::Diff => x && !y,
            BoolOp::Xor => x != y,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoolOp::Union => "union",
            BoolOp::Inter => "inter",
            BoolOp::Diff => "diff",
            BoolOp::Xor => "xor",
        }
    }
}

/// Reachable part of the product automaton, finals per `op`.
pub fn boolean_combine(d1: &Dfa, d2: &Dfa, op: BoolOp) -> Result<Dfa, AutomatonError> {
    check_alphabets(d1.alphabet(), d2.alphabet())?;
    let sigma = d1.alphabet();
    let mut index: HashMap<(State, State), State> = HashMap::new();
    let mut pairs = vec![(d1.initial(), d2.initial())];
    index.insert(pairs[0], 0);
    let mut delta = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        head += 1;
        for a in sigma.symbols() {
            let target = (d1.next(p, a), d2.next(q, a));
            let fresh = pairs.len();
            let id = *index.entry(target).or_insert(fresh);
            if id == fresh {
                pairs.push(target);
            }
            delta.push(id);
        }
    }
    let finals = pairs
        .iter()
        .map(|&(p, q)| op.apply(d1.is_final(p), d2.is_final(q)))
        .collect();
    Dfa::new(sigma.clone(), delta, 0, finals)
}

/// `L(sub) ⊆ L(sup)`, decided on the product.
pub fn contains(sup: &Dfa, sub: &Dfa) -> Result<bool, AutomatonError> {
    Ok(boolean_combine(sub, sup, BoolOp::Diff)?.is_empty_language())
}

/// Language equality: the symmetric-difference product has no reachable
/// accepting state.
pub fn equivalent(d1: &Dfa, d2: &Dfa) -> Result<bool, AutomatonError> {
    Ok(boolean_combine(d1, d2, BoolOp::Xor)?.is_empty_language())
}

pub fn complement(d: &Dfa) -> Dfa {
    let n = d.state_count();
    Dfa::from_fn(
        d.alphabet().clone(),
        n,
        d.initial(),
        |q, a| d.next(q, a),
        |q| !d.is_final(q),
    )
    .expect("valid")
}

/// Quotient complexity: the number of states of the minimal complete DFA.
pub fn kappa(d: &Dfa) -> usize {
    minimize(d).state_count()
}

/// Transitions flipped; starts are the old finals and the old initial state
/// is the only final.
pub fn reverse(d: &Dfa) -> Nfa {
    let mut nfa = Nfa::new(d.alphabet().clone(), d.state_count());
    for q in 0..d.state_count() {
        for a in d.alphabet().symbols() {
            nfa.add_edge(d.next(q, a), a, q);
        }
    }
    for q in d.finals() {
        nfa.add_start(q);
    }
    nfa.set_final(d.initial(), true);
    nfa
}

/// Minimal DFA of `L(d1) L(d2)`.
pub fn concatenate(d1: &Dfa, d2: &Dfa) -> Result<Dfa, AutomatonError> {
    check_alphabets(d1.alphabet(), d2.alphabet())?;
    let sigma = d1.alphabet();
    let offset = d1.state_count();
    let mut nfa = Nfa::new(sigma.clone(), offset + d2.state_count());
    let start2 = offset + d2.initial();
    for p in 0..d1.state_count() {
        for a in sigma.symbols() {
            let q = d1.next(p, a);
            nfa.add_edge(p, a, q);
            if d1.is_final(q) {
                nfa.add_edge(p, a, start2);
            }
        }
    }
    for p in 0..d2.state_count() {
        for a in sigma.symbols() {
            nfa.add_edge(offset + p, a, offset + d2.next(p, a));
        }
        nfa.set_final(offset + p, d2.is_final(p));
    }
    nfa.add_start(d1.initial());
    if d1.is_final(d1.initial()) {
        nfa.add_start(start2);
    }
    Ok(minimize(&determinize(&nfa)))
}

/// Minimal DFA of `L(d)*`.
pub fn star(d: &Dfa) -> Dfa {
    let sigma = d.alphabet();
    let n = d.state_count();
    // fresh accepting start state n, behaving like the old initial state
    let mut nfa = Nfa::new(sigma.clone(), n + 1);
    let source = |p: State| if p == n { d.initial() } else { p };
    for p in 0..=n {
        for a in sigma.symbols() {
            let q = d.next(source(p), a);
            nfa.add_edge(p, a, q);
            if d.is_final(q) {
                nfa.add_edge(p, a, d.initial());
            }
        }
        nfa.set_final(p, p == n || d.is_final(p));
    }
    nfa.add_start(n);
    minimize(&determinize(&nfa))
}

/// All accepted words of length at most `max_len`, ordered by length and then
/// lexicographically under the alphabet order.
pub fn enumerate_words(d: &Dfa, max_len: usize) -> Vec<Vec<Symbol>> {
    let dead = d.dead_states();
    let mut out = Vec::new();
    let mut layer: Vec<(Vec<Symbol>, State)> = Vec::new();
    if !dead[d.initial()] {
        layer.push((Vec::new(), d.initial()));
    }
    for len in 0..=max_len {
        for (w, q) in &layer {
            if d.is_final(*q) {
                out.push(w.clone());
            }
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for (w, q) in &layer {
            for a in d.alphabet().symbols() {
                let r = d.next(*q, a);
                if !dead[r] {
                    let mut v = w.clone();
                    v.push(a);
                    next.push((v, r));
                }
            }
        }
        layer = next;
    }
    out
}
