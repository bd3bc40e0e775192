//! Checks shared by the oracle tests and the acceptance suite. Each returns
//! a short summary on success and the first disagreement on failure.

use std::sync::Arc;

use quotient::alphabet::Symbol;
use quotient::automata::{equivalent, minimize};
use quotient::regex::{Expr, Node, Regex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{letters, random_rx, transfer_counts, words};

const NAMES: [&str; 2] = ["a", "b"];

/// Derivative-automaton membership against the span matcher on every word
/// up to `max_len`, plus per-length word counts of the minimal automaton.
pub fn membership_agreement(
    count: usize,
    depth: usize,
    max_len: usize,
    seed: u64,
) -> Result<String, String> {
    let sigma = letters("ab");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = words(2, max_len);
    let mut states = 0;
    for i in 0..count {
        let rx = random_rx(&mut rng, depth, 2);
        let text = rx.render(&NAMES);
        let r = Regex::parse(&text, &sigma).map_err(|e| format!("#{i} `{text}`: {e}"))?;
        let d = r.to_dfa().map_err(|e| format!("#{i} `{text}`: {e}"))?;
        states += d.state_count();
        let mut brute = vec![0u64; max_len + 1];
        for w in &all {
            let expected = rx.matches(w);
            if d.accepts(w) != expected {
                return Err(format!(
                    "#{i} `{text}` on `{}`: automaton {}, matcher {expected}",
                    sigma.format_word(w),
                    !expected
                ));
            }
            brute[w.len()] += expected as u64;
        }
        let counted = transfer_counts(&minimize(&d), max_len);
        if counted != brute {
            return Err(format!("#{i} `{text}`: counts {counted:?}, enumeration {brute:?}"));
        }
    }
    Ok(format!(
        "{count} expressions, {} words each, {states} derivative states",
        all.len()
    ))
}

fn node(n: Node) -> Expr {
    Arc::new(n)
}

fn same(lhs: Expr, rhs: Expr, what: &str, w: &[Symbol]) -> Result<(), String> {
    let sigma = letters("ab");
    let dfa = |e: Expr| {
        Regex::new(sigma.clone(), e)
            .and_then(|r| r.to_dfa())
            .map_err(|e| e.to_string())
    };
    let (l, r) = (dfa(lhs.clone())?, dfa(rhs.clone())?);
    if equivalent(&l, &r).map_err(|e| e.to_string())? {
        Ok(())
    } else {
        let lw = Regex::new(sigma.clone(), lhs).map(|r| r.to_string());
        Err(format!(
            "{what} by `{}`: iterated derivative {lw:?} disagrees with closed form",
            sigma.format_word(w)
        ))
    }
}

/// Closed forms of the derivatives of complement, boolean combinations,
/// product and star against iterated letter derivatives.
pub fn derivative_closed_forms(pairs: usize, max_len: usize, seed: u64) -> Result<String, String> {
    let sigma = letters("ab");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0;
    let parse = |text: &str| Regex::parse(text, &sigma).map_err(|e| e.to_string());
    for _ in 0..pairs {
        let k = parse(&random_rx(&mut rng, 3, 2).render(&NAMES))?;
        let l = parse(&random_rx(&mut rng, 3, 2).render(&NAMES))?;
        let (kr, lr) = (k.root().clone(), l.root().clone());
        let iterated = |e: Expr, w: &[Symbol]| {
            Regex::new(sigma.clone(), e)
                .expect("same alphabet")
                .derivative_word(w)
                .root()
                .clone()
        };
        let star = node(Node::Star(lr.clone()));
        for w in words(2, max_len) {
            let kw = k.derivative_word(&w).root().clone();
            let lw = l.derivative_word(&w).root().clone();

            let lhs = iterated(node(Node::Complement(lr.clone())), &w);
            same(lhs, node(Node::Complement(lw.clone())), "complement", &w)?;

            let binary: [(&str, fn(Expr, Expr) -> Node); 4] = [
                ("union", |x, y| Node::Union(vec![x, y])),
                ("intersection", |x, y| Node::Inter(vec![x, y])),
                ("difference", Node::Diff),
                ("symmetric difference", Node::Xor),
            ];
            for (name, op) in binary {
                let lhs = iterated(node(op(kr.clone(), lr.clone())), &w);
                same(lhs, node(op(kw.clone(), lw.clone())), name, &w)?;
            }

            let mut terms = vec![node(Node::Concat(kw.clone(), lr.clone()))];
            if k.nullable() {
                terms.push(lw.clone());
            }
            for i in 1..w.len() {
                let (u, v) = w.split_at(i);
                if k.derivative_word(u).nullable() {
                    terms.push(l.derivative_word(v).root().clone());
                }
            }
            let lhs = iterated(node(Node::Concat(kr.clone(), lr.clone())), &w);
            same(lhs, node(Node::Union(terms)), "product", &w)?;
            checks += 6;

            if !w.is_empty() {
                let mut inner = vec![lw.clone()];
                for i in 1..w.len() {
                    let (u, v) = w.split_at(i);
                    let star_u = Regex::new(sigma.clone(), star.clone()).expect("same alphabet");
                    if star_u.derivative_word(u).nullable() {
                        inner.push(l.derivative_word(v).root().clone());
                    }
                }
                let rhs = node(Node::Concat(node(Node::Union(inner)), star.clone()));
                same(iterated(star.clone(), &w), rhs, "star", &w)?;
                checks += 1;
            }
        }
    }
    Ok(format!("{pairs} expression pairs, {checks} identities"))
}
