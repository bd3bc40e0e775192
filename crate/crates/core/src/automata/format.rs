//! Line-oriented DFA text format.
//!
//! ```text
//! # comment
//! alphabet: a b c
//! states: 5
//! initial: 0
//! final: 4
//! trans: 0 a 1
//! ```
//!
//! `final:` takes zero or more states and may be repeated. Every
//! `(state, symbol)` pair must have exactly one `trans:` line.

use std::fmt::Write;

use thiserror::Error;

use crate::alphabet::{Alphabet, AlphabetError};

use super::Dfa;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `{0}:` line")]
    Missing(&'static str),
    #[error("missing transition for state {state} on `{symbol}`")]
    Partial { state: usize, symbol: String },
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

pub(super) fn write_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    let sigma = d.alphabet();
    writeln!(out, "alphabet: {sigma}").unwrap();
    writeln!(out, "states: {}", d.state_count()).unwrap();
    writeln!(out, "initial: {}", d.initial()).unwrap();
    let finals: Vec<String> = d.finals().map(|q| q.to_string()).collect();
    if finals.is_empty() {
        writeln!(out, "final:").unwrap();
    } else {
        writeln!(out, "final: {}", finals.join(" ")).unwrap();
    }
    for q in 0..d.state_count() {
        for a in sigma.symbols() {
            writeln!(out, "trans: {q} {} {}", sigma.name(a), d.next(q, a)).unwrap();
        }
    }
    out
}

pub(super) fn read_dfa(text: &str) -> Result<Dfa, FormatError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut initial: Option<usize> = None;
    let mut finals: Vec<usize> = Vec::new();
    let mut trans: Vec<(usize, usize, String, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| FormatError::Syntax { line: line_no, msg };
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `key: value`, got `{line}`")))?;
        let fields: Vec<&str> = rest.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("expected a state number, got `{s}`")))
        };
        match key.trim() {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err("duplicate `alphabet:` line".into()));
                }
                alphabet = Some(Alphabet::new(fields.iter().copied())?);
            }
            "states" => match fields.as_slice() {
                [n] if states.is_none() => states = Some(num(n)?),
                _ => return Err(err("`states:` takes one number and appears once".into())),
            },
            "initial" => match fields.as_slice() {
                [q] if initial.is_none() => initial = Some(num(q)?),
                _ => return Err(err("`initial:` takes one state and appears once".into())),
            },
            "final" => {
                for f in fields {
                    finals.push(num(f)?);
                }
            }
            "trans" => match fields.as_slice() {
                [p, a, q] => trans.push((line_no, num(p)?, a.to_string(), num(q)?)),
                _ => return Err(err("`trans:` takes `state symbol state`".into())),
            },
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }

    let alphabet = alphabet.ok_or(FormatError::Missing("alphabet"))?;
    let n = states.ok_or(FormatError::Missing("states"))?;
    let initial = initial.ok_or(FormatError::Missing("initial"))?;
    let range = |line: usize, q: usize| {
        if q < n {
            Ok(q)
        } else {
            Err(FormatError::Syntax {
                line,
                msg: format!("state {q} out of range 0..{n}"),
            })
        }
    };
    if n == 0 {
        return Err(FormatError::Syntax {
            line: 0,
            msg: "`states:` must be positive".into(),
        });
    }
    range(0, initial)?;
    let k = alphabet.len();
    let mut delta: Vec<Option<usize>> = vec![None; n * k];
    for (line, p, a, q) in trans {
        let p = range(line, p)?;
        let q = range(line, q)?;
        let sym = alphabet.lookup(&a).ok_or_else(|| FormatError::Syntax {
            line,
            msg: format!("symbol `{a}` not in alphabet"),
        })?;
        let slot = &mut delta[p * k + sym.index()];
        if slot.is_some() {
            return Err(FormatError::Syntax {
                line,
                msg: format!("duplicate transition for state {p} on `{a}`"),
            });
        }
        *slot = Some(q);
    }
    let mut is_final = vec![false; n];
    for f in finals {
        is_final[range(0, f)?] = true;
    }
    let delta = delta
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            t.ok_or_else(|| FormatError::Partial {
                state: i / k,
                symbol: alphabet.names()[i % k].clone(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Dfa::new(alphabet, delta, initial, is_final).expect("validated above"))
}
