//! Text syntax.
//!
//! ```text
//! 0        ∅                 1        ε
//! a  'a1'  symbols           .        Σ (union of all letters)
//! x|y      union             xy       concatenation
//! x*  x+   star, x x*        x^k      k-fold concatenation (x^0 = ε)
//! !x       complement        x&y      intersection
//! x-y      difference        x~y      symmetric difference
//! ```
//!
//! Binding strength, loosest first: `|`, `~`, `&`, `-`, juxtaposition, `!`,
//! postfix operators. Concatenation chains nest to the right; `~` and `-`
//! associate to the left. Whitespace is ignored.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::alphabet::Alphabet;

use super::{Expr, Node, RegexError};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Empty,
    Epsilon,
    Name(String),
    Dot,
    Bar,
    Tilde,
    Amp,
    Minus,
    Bang,
    Star,
    Plus,
    Power(usize),
    Open,
    Close,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, RegexError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0' => Tok::Empty,
            '1' => Tok::Epsilon,
            '.' => Tok::Dot,
            '|' => Tok::Bar,
            '~' => Tok::Tilde,
            '&' => Tok::Amp,
            '-' => Tok::Minus,
            '!' => Tok::Bang,
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '^' => {
                let mut digits = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let k = digits.parse().map_err(|_| RegexError::Syntax {
                    pos,
                    msg: "expected a number after `^`".into(),
                })?;
                Tok::Power(k)
            }
            '\'' => {
                let mut name = String::new();
                loop {
                    match chars.next() {
                        Some((_, '\'')) => break,
                        Some((_, ch)) => name.push(ch),
                        None => {
                            return Err(RegexError::Syntax {
                                pos,
                                msg: "unterminated quoted symbol".into(),
                            })
                        }
                    }
                }
                if name.is_empty() {
                    return Err(RegexError::Syntax {
                        pos,
                        msg: "empty quoted symbol".into(),
                    });
                }
                Tok::Name(name)
            }
            c if c.is_ascii_alphabetic() => Tok::Name(c.to_string()),
            other => {
                return Err(RegexError::Syntax {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((pos, tok));
    }
    Ok(out)
}

/// The symbols written in `text`, sorted by name.
pub fn infer_alphabet(text: &str) -> Result<Alphabet, RegexError> {
    let names: BTreeSet<String> = lex(text)?
        .into_iter()
        .filter_map(|(_, t)| match t {
            Tok::Name(n) => Some(n),
            _ => None,
        })
        .collect();
    if names.is_empty() {
        // expressions such as `0` or `1` still need some alphabet
        return Ok(Alphabet::letters("a")?);
    }
    Ok(Alphabet::new(names)?)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    sigma: &'a Alphabet,
}

pub(super) fn parse(text: &str, sigma: &Alphabet) -> Result<Expr, RegexError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
        sigma,
    };
    let e = p.union()?;
    match p.peek() {
        None => Ok(e),
        Some(t) => Err(p.error(format!("unexpected {t:?}"))),
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, msg: String) -> RegexError {
        RegexError::Syntax {
            pos: self.offset(),
            msg,
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn union(&mut self) -> Result<Expr, RegexError> {
        let mut members = vec![self.xor()?];
        while self.eat(&Tok::Bar) {
            members.push(self.xor()?);
        }
        Ok(if members.len() == 1 {
            members.pop().unwrap()
        } else {
            Arc::new(Node::Union(members))
        })
    }

    fn xor(&mut self) -> Result<Expr, RegexError> {
        let mut left = self.inter()?;
        while self.eat(&Tok::Tilde) {
            left = Arc::new(Node::Xor(left, self.inter()?));
        }
        Ok(left)
    }

    fn inter(&mut self) -> Result<Expr, RegexError> {
        let mut members = vec![self.diff()?];
        while self.eat(&Tok::Amp) {
            members.push(self.diff()?);
        }
        Ok(if members.len() == 1 {
            members.pop().unwrap()
        } else {
            Arc::new(Node::Inter(members))
        })
    }

    fn diff(&mut self) -> Result<Expr, RegexError> {
        let mut left = self.concat()?;
        while self.eat(&Tok::Minus) {
            left = Arc::new(Node::Diff(left, self.concat()?));
        }
        Ok(left)
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Empty | Tok::Epsilon | Tok::Name(_) | Tok::Dot | Tok::Bang | Tok::Open)
        )
    }

    fn concat(&mut self) -> Result<Expr, RegexError> {
        if !self.starts_factor() {
            return Err(self.error("expected an expression".into()));
        }
        let mut factors = Vec::new();
        while self.starts_factor() {
            factors.push(self.prefix()?);
        }
        Ok(concat_right(factors))
    }

    fn prefix(&mut self) -> Result<Expr, RegexError> {
        if self.eat(&Tok::Bang) {
            Ok(Arc::new(Node::Complement(self.prefix()?)))
        } else {
            self.postfix()
        }
    }

    fn postfix(&mut self) -> Result<Expr, RegexError> {
        let mut e = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => e = Arc::new(Node::Star(e)),
                Some(Tok::Plus) => e = Arc::new(Node::Concat(e.clone(), Arc::new(Node::Star(e)))),
                Some(&Tok::Power(k)) => e = power(e, k),
                _ => return Ok(e),
            }
            self.pos += 1;
        }
    }

    fn atom(&mut self) -> Result<Expr, RegexError> {
        let offset = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error("unexpected end of input".into()));
        };
        self.pos += 1;
        match tok {
            Tok::Empty => Ok(Arc::new(Node::Empty)),
            Tok::Epsilon => Ok(Arc::new(Node::Epsilon)),
            Tok::Dot => Ok(sigma_union(self.sigma)),
            Tok::Name(name) => self
                .sigma
                .lookup(&name)
                .map(|s| Arc::new(Node::Sym(s)))
                .ok_or(RegexError::UnknownSymbol { name, pos: offset }),
            Tok::Open => {
                let e = self.union()?;
                if self.eat(&Tok::Close) {
                    Ok(e)
                } else {
                    Err(self.error("expected `)`".into()))
                }
            }
            other => {
                self.pos -= 1;
                Err(self.error(format!("unexpected {other:?}")))
            }
        }
    }
}

fn concat_right(mut factors: Vec<Expr>) -> Expr {
    let mut acc = factors.pop().expect("at least one factor");
    while let Some(f) = factors.pop() {
        acc = Arc::new(Node::Concat(f, acc));
    }
    acc
}

/// `x^k` as a right-nested k-fold concatenation; `x^0 = ε`.
pub(super) fn power(x: Expr, k: usize) -> Expr {
    if k == 0 {
        return Arc::new(Node::Epsilon);
    }
    concat_right(vec![x; k])
}

/// Σ as the union of all letters (a bare symbol for a one-letter alphabet).
pub(super) fn sigma_union(sigma: &Alphabet) -> Expr {
    let mut letters: Vec<Expr> = sigma.symbols().map(|s| Arc::new(Node::Sym(s))).collect();
    if letters.len() == 1 {
        letters.pop().unwrap()
    } else {
        Arc::new(Node::Union(letters))
    }
}

const UNION: u8 = 1;
const XOR: u8 = 2;
const INTER: u8 = 3;
const DIFF: u8 = 4;
const CONCAT: u8 = 5;
const NOT: u8 = 6;
const POSTFIX: u8 = 7;
const ATOM: u8 = 8;

fn precedence(node: &Node) -> u8 {
    match node {
        Node::Union(_) => UNION,
        Node::Xor(..) => XOR,
        Node::Inter(_) => INTER,
        Node::Diff(..) => DIFF,
        Node::Concat(..) => CONCAT,
        Node::Complement(_) => NOT,
        Node::Star(_) => POSTFIX,
        Node::Empty | Node::Epsilon | Node::Sym(_) => ATOM,
    }
}

/// Prints in the syntax accepted by the parser; `parse(print(e)) == e`.
pub(super) fn print(node: &Node, sigma: &Alphabet) -> String {
    let mut out = String::new();
    write_node(node, sigma, &mut out);
    out
}

fn write_child(node: &Node, sigma: &Alphabet, parens: bool, out: &mut String) {
    if parens {
        out.push('(');
    }
    write_node(node, sigma, out);
    if parens {
        out.push(')');
    }
}

fn write_node(node: &Node, sigma: &Alphabet, out: &mut String) {
    let p = precedence(node);
    match node {
        Node::Empty => out.push('0'),
        Node::Epsilon => out.push('1'),
        Node::Sym(s) => {
            let name = sigma.name(*s);
            let plain = name.len() == 1 && name.chars().all(|c| c.is_ascii_alphabetic());
            if plain {
                out.push_str(name);
            } else {
                out.push('\'');
                out.push_str(name);
                out.push('\'');
            }
        }
        Node::Union(ms) | Node::Inter(ms) => {
            let sep = if p == UNION { "|" } else { "&" };
            for (i, m) in ms.iter().enumerate() {
                if i > 0 {
                    out.push_str(sep);
                }
                write_child(m, sigma, precedence(m) <= p, out);
            }
        }
        Node::Xor(x, y) | Node::Diff(x, y) => {
            write_child(x, sigma, precedence(x) < p, out);
            out.push(if p == XOR { '~' } else { '-' });
            write_child(y, sigma, precedence(y) <= p, out);
        }
        Node::Concat(x, y) => {
            write_child(x, sigma, precedence(x) <= p, out);
            write_child(y, sigma, precedence(y) < p, out);
        }
        Node::Complement(x) => {
            out.push('!');
            write_child(x, sigma, precedence(x) < p, out);
        }
        Node::Star(x) => {
            write_child(x, sigma, precedence(x) < p, out);
            out.push('*');
        }
    }
}
