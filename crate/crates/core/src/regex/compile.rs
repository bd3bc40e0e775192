//! Derivative-free routes from expressions to automata.

use crate::alphabet::Symbol;
use crate::automata::{
    boolean_combine, complement, concatenate, minimize, star, BoolOp, Dfa, Nfa,
};

use super::{Node, Regex};

/// Minimal DFA built bottom-up from automaton operations (product for the
/// boolean operators, NFA constructions for concatenation and star).
pub fn compile_by_composition(r: &Regex) -> Dfa {
    fn go(node: &Node, r: &Regex) -> Dfa {
        let sigma = r.alphabet().clone();
        let fold = |ms: &[super::Expr], op: BoolOp| {
            let mut acc = go(&ms[0], r);
            for m in &ms[1..] {
                acc = minimize(&boolean_combine(&acc, &go(m, r), op).expect("same alphabet"));
            }
            acc
        };
        match node {
            Node::Empty => Dfa::universal(sigma, false),
            Node::Epsilon => Dfa::epsilon(sigma),
            Node::Sym(a) => Dfa::word(sigma, &[*a]),
            Node::Union(ms) => fold(ms, BoolOp::Union),
            Node::Inter(ms) => fold(ms, BoolOp::Inter),
            Node::Concat(x, y) => concatenate(&go(x, r), &go(y, r)).expect("same alphabet"),
            Node::Star(x) => star(&go(x, r)),
            Node::Complement(x) => complement(&go(x, r)),
            Node::Diff(x, y) | Node::Xor(x, y) => {
                let op = if matches!(node, Node::Diff(..)) {
                    BoolOp::Diff
                } else {
                    BoolOp::Xor
                };
                minimize(&boolean_combine(&go(x, r), &go(y, r), op).expect("same alphabet"))
            }
        }
    }
    minimize(&go(r.root(), r))
}

struct Positions {
    nullable: bool,
    first: Vec<usize>,
    last: Vec<usize>,
}

/// Position (Glushkov) automaton for expressions using only ∅, ε, symbols,
/// union, concatenation and star. Returns `None` when a boolean operator
/// occurs.
///
/// State 0 is the start state; state `i > 0` is the i-th symbol occurrence.
pub fn positional_nfa(r: &Regex) -> Option<Nfa> {
    let mut labels: Vec<Symbol> = Vec::new();
    let mut follow: Vec<Vec<usize>> = Vec::new();

    fn go(node: &Node, labels: &mut Vec<Symbol>, follow: &mut Vec<Vec<usize>>) -> Option<Positions> {
        Some(match node {
            Node::Empty => Positions {
                nullable: false,
                first: vec![],
                last: vec![],
            },
            Node::Epsilon => Positions {
                nullable: true,
                first: vec![],
                last: vec![],
            },
            Node::Sym(a) => {
                labels.push(*a);
                follow.push(Vec::new());
                let p = labels.len();
                Positions {
                    nullable: false,
                    first: vec![p],
                    last: vec![p],
                }
            }
            Node::Union(ms) => {
                let mut acc = Positions {
                    nullable: false,
                    first: vec![],
                    last: vec![],
                };
                for m in ms {
                    let sub = go(m, labels, follow)?;
                    acc.nullable |= sub.nullable;
                    acc.first.extend(sub.first);
                    acc.last.extend(sub.last);
                }
                acc
            }
            Node::Concat(x, y) => {
                let px = go(x, labels, follow)?;
                let py = go(y, labels, follow)?;
                for &l in &px.last {
                    follow[l - 1].extend(py.first.iter().copied());
                }
                let mut first = px.first;
                if px.nullable {
                    first.extend(py.first.iter().copied());
                }
                let mut last = py.last;
                if py.nullable {
                    last.extend(px.last.iter().copied());
                }
                Positions {
                    nullable: px.nullable && py.nullable,
                    first,
                    last,
                }
            }
            Node::Star(x) => {
                let px = go(x, labels, follow)?;
                for &l in &px.last {
                    follow[l - 1].extend(px.first.iter().copied());
                }
                Positions {
                    nullable: true,
                    ..px
                }
            }
            Node::Complement(_) | Node::Inter(_) | Node::Diff(..) | Node::Xor(..) => return None,
        })
    }

    let top = go(r.root(), &mut labels, &mut follow)?;
    let mut nfa = Nfa::new(r.alphabet().clone(), labels.len() + 1);
    nfa.add_start(0);
    for &p in &top.first {
        nfa.add_edge(0, labels[p - 1], p);
    }
    for (i, succ) in follow.iter().enumerate() {
        for &p in succ {
            nfa.add_edge(i + 1, labels[p - 1], p);
        }
    }
    nfa.set_final(0, top.nullable);
    for &p in &top.last {
        nfa.set_final(p, true);
    }
    Some(nfa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::automata::{determinize, equivalent};

    #[test]
    fn routes_agree_on_small_cases() {
        let sigma = Alphabet::letters("ab").unwrap();
        for text in ["(a|b)*a(a|b)", "a*b*", "(ab|b)*a", "0", "1", "(a|1)(b|1)"] {
            let r = Regex::parse(text, &sigma).unwrap();
            let derived = minimize(&r.to_dfa().unwrap());
            let composed = compile_by_composition(&r);
            let positional = minimize(&determinize(&positional_nfa(&r).unwrap()));
            assert_eq!(derived, composed, "{text}");
            assert_eq!(derived, positional, "{text}");
            assert!(equivalent(&derived, &composed).unwrap());
        }
    }

    #[test]
    fn positional_rejects_boolean_operators() {
        let sigma = Alphabet::letters("ab").unwrap();
        let r = Regex::parse("a&b", &sigma).unwrap();
        assert!(positional_nfa(&r).is_none());
        assert!(!compile_by_composition(&r).accepts(&[]));
    }
}
