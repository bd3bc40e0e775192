use std::collections::HashMap;

use super::{Dfa, State};

/// Minimal complete DFA with canonical numbering.
///
/// Unreachable states are dropped, equivalent states are merged by Moore-style
/// partition refinement, and the result is renumbered in BFS order from the
/// initial state (successors in alphabet order). Two automata for the same
/// language therefore minimize to structurally equal values.
pub fn minimize(d: &Dfa) -> Dfa {
    let reachable = d.reachable();
    let k = d.alphabet().len();
    let n = d.state_count();

    // block[q] for reachable q; unreachable states keep usize::MAX
    let mut block = vec![usize::MAX; n];
    let any_final = reachable.iter().any(|&q| d.is_final(q));
    let any_nonfinal = reachable.iter().any(|&q| !d.is_final(q));
    for &q in &reachable {
        block[q] = if any_final && any_nonfinal {
            d.is_final(q) as usize
        } else {
            0
        };
    }
    let mut blocks = usize::from(any_final) + usize::from(any_nonfinal);

    let mut signature: HashMap<Vec<usize>, usize> = HashMap::new();
    loop {
        signature.clear();
        let mut next = vec![usize::MAX; n];
        for &q in &reachable {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(block[q]);
            sig.extend(d.alphabet().symbols().map(|a| block[d.next(q, a)]));
            let fresh = signature.len();
            next[q] = *signature.entry(sig).or_insert(fresh);
        }
        let refined = signature.len();
        block = next;
        if refined == blocks {
            break;
        }
        blocks = refined;
    }

    // canonical BFS renumbering over blocks
    let mut rep: Vec<State> = vec![usize::MAX; blocks];
    for &q in &reachable {
        if rep[block[q]] == usize::MAX {
            rep[block[q]] = q;
        }
    }
    let mut number = vec![usize::MAX; blocks];
    let mut order = vec![block[d.initial()]];
    number[block[d.initial()]] = 0;
    let mut head = 0;
    while head < order.len() {
        let b = order[head];
        head += 1;
        for a in d.alphabet().symbols() {
            let t = block[d.next(rep[b], a)];
            if number[t] == usize::MAX {
                number[t] = order.len();
                order.push(t);
            }
        }
    }
    let mut delta = Vec::with_capacity(order.len() * k);
    for &b in &order {
        delta.extend(d.alphabet().symbols().map(|a| number[block[d.next(rep[b], a)]]));
    }
    let finals = order.iter().map(|&b| d.is_final(rep[b])).collect();
    Dfa::new(d.alphabet().clone(), delta, 0, finals).expect("minimal DFA is well-formed")
}
