use std::collections::HashMap;

use super::{Dfa, Nfa, State};

/// Fixed-width bitset over NFA states.
#[derive(Clone, PartialEq, Eq, Hash)]
struct StateSet(Vec<u64>);

impl StateSet {
    fn empty(states: usize) -> Self {
        StateSet(vec![0; states.div_ceil(64).max(1)])
    }

    fn insert(&mut self, q: State) {
        self.0[q / 64] |= 1 << (q % 64);
    }

    fn iter(&self) -> impl Iterator<Item = State> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits & (1 << b) != 0).map(move |b| w * 64 + b)
        })
    }
}

/// Subset construction.
///
/// Only subsets reachable from the start set are built; the empty subset is
/// an ordinary (dead) state when reached. States are numbered in BFS
/// discovery order, successors explored in alphabet order.
pub fn determinize(nfa: &Nfa) -> Dfa {
    determinize_labeled(nfa).0
}

/// Like [`determinize`], also returning each DFA state's subset as a sorted
/// list of NFA states.
pub fn determinize_labeled(nfa: &Nfa) -> (Dfa, Vec<Vec<State>>) {
    let n = nfa.state_count();
    let k = nfa.alphabet().len();
    let mut start = StateSet::empty(n);
    for &q in nfa.starts() {
        start.insert(q);
    }
    let mut index: HashMap<StateSet, State> = HashMap::new();
    let mut subsets = vec![start.clone()];
    index.insert(start, 0);
    let mut delta = Vec::new();
    let mut head = 0;
    while head < subsets.len() {
        let current = subsets[head].clone();
        head += 1;
        for a in nfa.alphabet().symbols() {
            let mut next = StateSet::empty(n);
            for q in current.iter() {
                for &r in nfa.successors(q, a) {
                    next.insert(r);
                }
            }
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    index.insert(next.clone(), id);
                    subsets.push(next);
                    id
                }
            };
            delta.push(id);
        }
    }
    debug_assert_eq!(delta.len(), subsets.len() * k);
    let finals = subsets
        .iter()
        .map(|s| s.iter().any(|q| nfa.is_final(q)))
        .collect();
    let labels = subsets.iter().map(|s| s.iter().collect()).collect();
    let dfa = Dfa::new(nfa.alphabet().clone(), delta, 0, finals).expect("subset DFA is well-formed");
    (dfa, labels)
}
