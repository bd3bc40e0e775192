//! Extended regular expressions and their derivatives.
//!
//! Expressions are built over an explicit [`Alphabet`] and support the
//! boolean operators (complement, intersection, difference, symmetric
//! difference) next to union, concatenation and star. The derivative of an
//! expression by a word denotes the left quotient of its language by that
//! word; collecting the dissimilar derivatives of an expression yields its
//! quotient automaton ([`Regex::to_dfa`]).
//!
//! Derivatives are kept in a canonical similarity form (see [`normalize`]) so
//! that the set of derivatives stays finite. Normalization covers
//! idempotence, commutativity and associativity of union, the ∅/ε laws of
//! concatenation, and a few language-preserving rules for the boolean
//! operators; a state budget guards against runaway growth regardless.

mod compile;
mod parse;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::alphabet::{Alphabet, AlphabetError, Symbol};
use crate::automata::Dfa;

pub use compile::{compile_by_composition, positional_nfa};
pub use parse::infer_alphabet;

/// Default cap on the number of dissimilar derivatives explored by
/// [`Regex::to_dfa`].
pub const DEFAULT_STATE_CAP: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegexError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("symbol `{name}` at offset {pos} is not in the alphabet")]
    UnknownSymbol { name: String, pos: usize },
    #[error("symbol index {0} is not in the alphabet")]
    ForeignSymbol(u16),
    #[error("derivative automaton exceeded {cap} states")]
    StateBudgetExceeded { cap: usize },
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

/// Shared expression node.
pub type Expr = Arc<Node>;

/// Syntax tree of an extended regular expression.
///
/// `Union` and `Inter` are n-ary; the derived order on nodes is the total
/// structural order used to sort their members in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Empty,
    Epsilon,
    Sym(Symbol),
    Union(Vec<Expr>),
    Concat(Expr, Expr),
    Star(Expr),
    Complement(Expr),
    Inter(Vec<Expr>),
    Diff(Expr, Expr),
    Xor(Expr, Expr),
}

/// An expression together with the alphabet it is written over.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Regex {
    alphabet: Alphabet,
    root: Expr,
}

/// A regular expression in canonical similarity form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalForm(Regex);

impl NormalForm {
    pub fn as_regex(&self) -> &Regex {
        &self.0
    }

    pub fn into_regex(self) -> Regex {
        self.0
    }
}

impl std::ops::Deref for NormalForm {
    type Target = Regex;
    fn deref(&self) -> &Regex {
        &self.0
    }
}

impl Regex {
    /// Wraps `root`, checking that every symbol belongs to `alphabet`.
    pub fn new(alphabet: Alphabet, root: Expr) -> Result<Self, RegexError> {
        fn check(node: &Node, sigma: &Alphabet) -> Result<(), RegexError> {
            match node {
                Node::Empty | Node::Epsilon => Ok(()),
                Node::Sym(s) if sigma.contains(*s) => Ok(()),
                Node::Sym(s) => Err(RegexError::ForeignSymbol(s.0)),
                Node::Union(ms) | Node::Inter(ms) => ms.iter().try_for_each(|m| check(m, sigma)),
                Node::Concat(x, y) | Node::Diff(x, y) | Node::Xor(x, y) => {
                    check(x, sigma)?;
                    check(y, sigma)
                }
                Node::Star(x) | Node::Complement(x) => check(x, sigma),
            }
        }
        check(&root, &alphabet)?;
        Ok(Regex { alphabet, root })
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self, RegexError> {
        let root = parse::parse(text, alphabet)?;
        Ok(Regex {
            alphabet: alphabet.clone(),
            root,
        })
    }

    /// Parses with the alphabet inferred from the symbols written in `text`.
    pub fn parse_inferred(text: &str) -> Result<Self, RegexError> {
        let sigma = infer_alphabet(text)?;
        Self::parse(text, &sigma)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn root(&self) -> &Expr {
        &self.root
    }

    fn with_root(&self, root: Expr) -> Regex {
        Regex {
            alphabet: self.alphabet.clone(),
            root,
        }
    }

    /// `ε ∈ L(self)`.
    pub fn nullable(&self) -> bool {
        nullable(&self.root)
    }

    pub fn normalize(&self) -> NormalForm {
        NormalForm(self.with_root(normalize(&self.root)))
    }

    /// Derivative by one letter, in normal form.
    pub fn derivative(&self, a: Symbol) -> Regex {
        assert!(self.alphabet.contains(a), "symbol outside the alphabet");
        self.with_root(derivative(&normalize(&self.root), a))
    }

    /// Left fold of [`Regex::derivative`]; the empty word gives the normal form.
    pub fn derivative_word(&self, word: &[Symbol]) -> Regex {
        let mut current = normalize(&self.root);
        for &a in word {
            assert!(self.alphabet.contains(a), "symbol outside the alphabet");
            current = derivative(&current, a);
        }
        self.with_root(current)
    }

    /// Quotient automaton with the default derivative budget.
    pub fn to_dfa(&self) -> Result<Dfa, RegexError> {
        self.to_dfa_with_cap(DEFAULT_STATE_CAP)
    }

    /// Complete DFA whose states are the dissimilar normalized derivatives,
    /// numbered in BFS order from the normalized expression.
    pub fn to_dfa_with_cap(&self, cap: usize) -> Result<Dfa, RegexError> {
        let start = normalize(&self.root);
        let mut index: HashMap<Expr, usize> = HashMap::new();
        let mut states = vec![start.clone()];
        index.insert(start, 0);
        let mut delta = Vec::new();
        let mut head = 0;
        while head < states.len() {
            let current = states[head].clone();
            head += 1;
            for a in self.alphabet.symbols() {
                let d = derivative(&current, a);
                let id = match index.get(&d) {
                    Some(&id) => id,
                    None => {
                        if states.len() >= cap {
                            return Err(RegexError::StateBudgetExceeded { cap });
                        }
                        let id = states.len();
                        index.insert(d.clone(), id);
                        states.push(d);
                        id
                    }
                };
                delta.push(id);
            }
        }
        let finals = states.iter().map(|s| nullable(s)).collect();
        Ok(Dfa::new(self.alphabet.clone(), delta, 0, finals).expect("derivative DFA is well-formed"))
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&parse::print(&self.root, &self.alphabet))
    }
}

impl fmt::Debug for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Regex({self})")
    }
}

pub fn empty() -> Expr {
    Arc::new(Node::Empty)
}

pub fn epsilon() -> Expr {
    Arc::new(Node::Epsilon)
}

pub fn sym(a: Symbol) -> Expr {
    Arc::new(Node::Sym(a))
}

/// ε-function: whether the empty word belongs to the language.
pub fn nullable(node: &Node) -> bool {
    match node {
        Node::Empty | Node::Sym(_) => false,
        Node::Epsilon | Node::Star(_) => true,
        Node::Union(ms) => ms.iter().any(|m| nullable(m)),
        Node::Inter(ms) => ms.iter().all(|m| nullable(m)),
        Node::Concat(x, y) => nullable(x) && nullable(y),
        Node::Complement(x) => !nullable(x),
        Node::Diff(x, y) => nullable(x) && !nullable(y),
        Node::Xor(x, y) => nullable(x) != nullable(y),
    }
}

/// Derivative by a letter. Assumes a normalized argument and returns a
/// normalized result.
pub fn derivative(node: &Expr, a: Symbol) -> Expr {
    match &**node {
        Node::Empty | Node::Epsilon => empty(),
        Node::Sym(b) if *b == a => epsilon(),
        Node::Sym(_) => empty(),
        Node::Union(ms) => mk_union(ms.iter().map(|m| derivative(m, a)).collect()),
        Node::Concat(x, y) => {
            let head = mk_concat(derivative(x, a), y.clone());
            if nullable(x) {
                mk_union(vec![head, derivative(y, a)])
            } else {
                head
            }
        }
        Node::Star(x) => mk_concat(derivative(x, a), node.clone()),
        Node::Complement(x) => mk_complement(derivative(x, a)),
        Node::Inter(ms) => mk_inter(ms.iter().map(|m| derivative(m, a)).collect()),
        Node::Diff(x, y) => mk_diff(derivative(x, a), derivative(y, a)),
        Node::Xor(x, y) => mk_xor(derivative(x, a), derivative(y, a)),
    }
}

/// Canonical similarity form, rebuilt bottom-up through the smart
/// constructors. Idempotent.
pub fn normalize(node: &Expr) -> Expr {
    match &**node {
        Node::Empty | Node::Epsilon | Node::Sym(_) => node.clone(),
        Node::Union(ms) => mk_union(ms.iter().map(normalize).collect()),
        Node::Concat(x, y) => mk_concat(normalize(x), normalize(y)),
        Node::Star(x) => mk_star(normalize(x)),
        Node::Complement(x) => mk_complement(normalize(x)),
        Node::Inter(ms) => mk_inter(ms.iter().map(normalize).collect()),
        Node::Diff(x, y) => mk_diff(normalize(x), normalize(y)),
        Node::Xor(x, y) => mk_xor(normalize(x), normalize(y)),
    }
}

/// Flattened, ∅-free, sorted, duplicate-free union.
pub fn mk_union(members: Vec<Expr>) -> Expr {
    let mut flat = Vec::with_capacity(members.len());
    for m in members {
        match &*m {
            Node::Empty => {}
            Node::Union(inner) => flat.extend(inner.iter().cloned()),
            _ => flat.push(m),
        }
    }
    flat.sort();
    flat.dedup();
    match flat.len() {
        0 => empty(),
        1 => flat.pop().unwrap(),
        _ => Arc::new(Node::Union(flat)),
    }
}

/// Concatenation with `∅L = L∅ = ∅`, `εL = Lε = L`, right-associated.
pub fn mk_concat(x: Expr, y: Expr) -> Expr {
    match (&*x, &*y) {
        (Node::Empty, _) | (_, Node::Empty) => empty(),
        (Node::Epsilon, _) => y,
        (_, Node::Epsilon) => x,
        (Node::Concat(p, q), _) => mk_concat(p.clone(), mk_concat(q.clone(), y)),
        _ => Arc::new(Node::Concat(x, y)),
    }
}

pub fn mk_star(x: Expr) -> Expr {
    match &*x {
        Node::Empty | Node::Epsilon => epsilon(),
        Node::Star(_) => x,
        _ => Arc::new(Node::Star(x)),
    }
}

pub fn mk_complement(x: Expr) -> Expr {
    match &*x {
        Node::Complement(inner) => inner.clone(),
        _ => Arc::new(Node::Complement(x)),
    }
}

/// Flattened, sorted, duplicate-free intersection; `∅` absorbs, and an `ε`
/// member collapses the whole intersection to `ε` or `∅`.
pub fn mk_inter(members: Vec<Expr>) -> Expr {
    let mut flat = Vec::with_capacity(members.len());
    for m in members {
        match &*m {
            Node::Empty => return empty(),
            Node::Inter(inner) => flat.extend(inner.iter().cloned()),
            _ => flat.push(m),
        }
    }
    if flat.iter().any(|m| matches!(**m, Node::Epsilon)) {
        return if flat.iter().all(|m| nullable(m)) {
            epsilon()
        } else {
            empty()
        };
    }
    flat.sort();
    flat.dedup();
    match flat.len() {
        0 => unreachable!("intersection needs at least one member"),
        1 => flat.pop().unwrap(),
        _ => Arc::new(Node::Inter(flat)),
    }
}

pub fn mk_diff(x: Expr, y: Expr) -> Expr {
    match (&*x, &*y) {
        (Node::Empty, _) => empty(),
        (_, Node::Empty) => x,
        _ if x == y => empty(),
        _ => Arc::new(Node::Diff(x, y)),
    }
}

pub fn mk_xor(x: Expr, y: Expr) -> Expr {
    match (&*x, &*y) {
        (Node::Empty, _) => y,
        (_, Node::Empty) => x,
        _ if x == y => empty(),
        _ if x <= y => Arc::new(Node::Xor(x, y)),
        _ => Arc::new(Node::Xor(y, x)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::letters("ab").unwrap()
    }

    fn re(text: &str) -> Regex {
        Regex::parse(text, &Alphabet::letters("abc").unwrap()).unwrap()
    }

    const A: Symbol = Symbol(0);
    const B: Symbol = Symbol(1);

    #[test]
    fn nullable_cases() {
        assert!(re("(ab)*").nullable());
        assert!(!re("0").nullable());
        assert!(re("1").nullable());
        assert!(!re("ab").nullable());
        assert!(re("!a").nullable());
        assert!(!re("a* & b").nullable());
        assert!(re("a* - b").nullable());
        assert!(!re("a* - b*").nullable());
        assert!(re("a* ~ b").nullable());
    }

    #[test]
    fn letter_derivatives() {
        assert_eq!(re("ab").derivative(A), re("b"));
        assert_eq!(re("a*").derivative(A), re("a*"));
        assert_eq!(re("b").derivative(A), re("0"));
        assert_eq!(re("abc").derivative_word(&[A, B]), re("c"));
        let r = re("b|(a|b)");
        assert_eq!(r.derivative_word(&[]), r.normalize().into_regex());
    }

    #[test]
    fn normalization_rules() {
        let u = re("b|(a|b)").normalize();
        assert_eq!(u.root().as_ref(), &Node::Union(vec![sym(A), sym(B)]));
        assert_eq!(re("0(ab)").normalize().root().as_ref(), &Node::Empty);
        assert_eq!(re("1(ab)").normalize(), re("ab").normalize());
        assert_eq!(re("!!a").normalize(), re("a").normalize());
        assert_eq!(re("1 & 1").normalize(), re("1").normalize());
        assert_eq!(re("1 & 0").normalize(), re("0").normalize());
        assert_eq!(re("(ab)c").normalize(), re("a(bc)").normalize());
        assert_eq!(re("a ~ a").normalize(), re("0").normalize());
        assert_eq!(re("b ~ a").normalize(), re("a ~ b").normalize());
    }

    #[test]
    fn quotient_automata() {
        let d = Regex::parse("a*", &Alphabet::letters("a").unwrap())
            .unwrap()
            .to_dfa()
            .unwrap();
        assert_eq!(d.state_count(), 1);
        let d = Regex::parse("a(a|b)*", &ab()).unwrap().to_dfa().unwrap();
        assert!(d.accepts(&[A, B]));
        assert!(!d.accepts(&[B]));
    }

    #[test]
    fn state_budget() {
        let r = Regex::parse("(a|b)*a(a|b)^6", &ab()).unwrap();
        assert_eq!(
            r.to_dfa_with_cap(20),
            Err(RegexError::StateBudgetExceeded { cap: 20 })
        );
        assert_eq!(r.to_dfa().unwrap().state_count(), 128);
    }

    #[test]
    fn foreign_symbols_rejected() {
        assert_eq!(
            Regex::new(ab(), sym(Symbol(5))),
            Err(RegexError::ForeignSymbol(5))
        );
    }
}
