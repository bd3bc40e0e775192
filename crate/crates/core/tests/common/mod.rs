//! Oracles that share no code path with the library: a span-matrix regex
//! matcher over a test-side syntax tree, word enumeration, transfer-matrix
//! word counts and brute-force quotient counting.
#![allow(dead_code)]

use quotient::alphabet::{Alphabet, Symbol};
use quotient::automata::Dfa;
use rand::Rng;

pub mod checks;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rx {
    Empty,
    Eps,
    Sym(u16),
    Any,
    Union(Box<Rx>, Box<Rx>),
    Cat(Box<Rx>, Box<Rx>),
    Star(Box<Rx>),
    Plus(Box<Rx>),
    Pow(Box<Rx>, usize),
    Not(Box<Rx>),
    And(Box<Rx>, Box<Rx>),
    Minus(Box<Rx>, Box<Rx>),
    Xor(Box<Rx>, Box<Rx>),
}

impl Rx {
    /// Fully parenthesized text in the library syntax.
    pub fn render(&self, names: &[&str]) -> String {
        use Rx::*;
        let r = |x: &Rx| x.render(names);
        match self {
            Empty => "0".into(),
            Eps => "1".into(),
            Sym(s) => names[*s as usize].into(),
            Any => ".".into(),
            Union(x, y) => format!("({}|{})", r(x), r(y)),
            Cat(x, y) => format!("({}{})", r(x), r(y)),
            Star(x) => format!("({})*", r(x)),
            Plus(x) => format!("({})+", r(x)),
            Pow(x, k) => format!("(({})^{k})", r(x)),
            Not(x) => format!("(!({}))", r(x)),
            And(x, y) => format!("({}&{})", r(x), r(y)),
            Minus(x, y) => format!("({}-{})", r(x), r(y)),
            Xor(x, y) => format!("({}~{})", r(x), r(y)),
        }
    }

    /// `m[i][j]` holds when the factor `w[i..j]` matches.
    fn spans(&self, w: &[u16]) -> Vec<Vec<bool>> {
        use Rx::*;
        let n = w.len();
        let mut m = vec![vec![false; n + 1]; n + 1];
        let pointwise = |x: &Rx, y: &Rx, f: fn(bool, bool) -> bool| {
            let (a, b) = (x.spans(w), y.spans(w));
            let mut m = vec![vec![false; n + 1]; n + 1];
            for i in 0..=n {
                for j in i..=n {
                    m[i][j] = f(a[i][j], b[i][j]);
                }
            }
            m
        };
        let cat = |a: &[Vec<bool>], b: &[Vec<bool>]| {
            let mut m = vec![vec![false; n + 1]; n + 1];
            for i in 0..=n {
                for j in i..=n {
                    m[i][j] = (i..=j).any(|k| a[i][k] && b[k][j]);
                }
            }
            m
        };
        let star = |a: &[Vec<bool>]| {
            let mut m = vec![vec![false; n + 1]; n + 1];
            for i in (0..=n).rev() {
                m[i][i] = true;
                for j in i + 1..=n {
                    m[i][j] = (i + 1..=j).any(|k| a[i][k] && m[k][j]);
                }
            }
            m
        };
        match self {
            Empty => {}
            Eps => (0..=n).for_each(|i| m[i][i] = true),
            Sym(s) => (0..n).filter(|&i| w[i] == *s).for_each(|i| m[i][i + 1] = true),
            Any => (0..n).for_each(|i| m[i][i + 1] = true),
            Union(x, y) => return pointwise(x, y, |a, b| a || b),
            And(x, y) => return pointwise(x, y, |a, b| a && b),
            Minus(x, y) => return pointwise(x, y, |a, b| a && !b),
            Xor(x, y) => return pointwise(x, y, |a, b| a != b),
            Not(x) => {
                let a = x.spans(w);
                for i in 0..=n {
                    for j in i..=n {
                        m[i][j] = !a[i][j];
                    }
                }
            }
            Cat(x, y) => return cat(&x.spans(w), &y.spans(w)),
            Star(x) => return star(&x.spans(w)),
            Plus(x) => {
                let a = x.spans(w);
                return cat(&a, &star(&a));
            }
            Pow(x, k) => {
                let a = x.spans(w);
                let mut acc = Eps.spans(w);
                for _ in 0..*k {
                    acc = cat(&acc, &a);
                }
                return acc;
            }
        }
        m
    }

    pub fn matches(&self, w: &[Symbol]) -> bool {
        let w: Vec<u16> = w.iter().map(|s| s.0).collect();
        self.spans(&w)[0][w.len()]
    }
}

/// A random expression of depth at most `depth` over `letters` symbols.
pub fn random_rx(rng: &mut impl Rng, depth: usize, letters: u16) -> Rx {
    use Rx::*;
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => Empty,
            1 => Eps,
            2 => Any,
            _ => Sym(rng.gen_range(0..letters)),
        };
    }
    let sub = |rng: &mut _| Box::new(random_rx(rng, depth - 1, letters));
    match rng.gen_range(0..11) {
        0 | 1 => Union(sub(rng), sub(rng)),
        2 | 3 => Cat(sub(rng), sub(rng)),
        4 => Star(sub(rng)),
        5 => Plus(sub(rng)),
        6 => Pow(sub(rng), rng.gen_range(0..3)),
        7 => Not(sub(rng)),
        8 => And(sub(rng), sub(rng)),
        9 => Minus(sub(rng), sub(rng)),
        _ => Xor(sub(rng), sub(rng)),
    }
}

/// All words over `k` letters of length at most `max_len`, shortest first.
pub fn words(k: usize, max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<Symbol>> = layer
            .iter()
            .flat_map(|w: &Vec<Symbol>| {
                (0..k as u16).map(move |a| {
                    let mut v = w.clone();
                    v.push(Symbol(a));
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Number of accepted words of each length `0..=max_len`, by iterating the
/// state-count vector through the transition matrix.
pub fn transfer_counts(d: &Dfa, max_len: usize) -> Vec<u64> {
    let n = d.state_count();
    let mut v = vec![0u64; n];
    v[d.initial()] = 1;
    let mut out = Vec::new();
    for _ in 0..=max_len {
        out.push((0..n).filter(|&q| d.is_final(q)).map(|q| v[q]).sum());
        let mut next = vec![0u64; n];
        for q in 0..n {
            for a in d.alphabet().symbols() {
                next[d.next(q, a)] += v[q];
            }
        }
        v = next;
    }
    out
}

pub fn is_subword(u: &[Symbol], w: &[Symbol]) -> bool {
    let mut it = w.iter();
    u.iter().all(|a| it.any(|b| b == a))
}

pub fn is_factor(u: &[Symbol], w: &[Symbol]) -> bool {
    u.is_empty() || w.windows(u.len()).any(|x| x == u)
}

/// Distinct quotients of a language among words up to `prefix_len`, told
/// apart by suffixes up to `suffix_len`. A lower bound on the quotient
/// complexity that is exact once both lengths are large enough.
pub fn quotient_count(
    k: usize,
    member: impl Fn(&[Symbol]) -> bool,
    prefix_len: usize,
    suffix_len: usize,
) -> usize {
    let suffixes = words(k, suffix_len);
    let mut seen = std::collections::BTreeSet::new();
    for u in words(k, prefix_len) {
        let signature: Vec<bool> = suffixes
            .iter()
            .map(|v| member(&[u.as_slice(), v.as_slice()].concat()))
            .collect();
        seen.insert(signature);
    }
    seen.len()
}

pub fn letters(s: &str) -> Alphabet {
    Alphabet::letters(s).expect("alphabet")
}
