//! Finite ordered alphabets.
//!
//! Every automaton and expression carries its alphabet explicitly. The order
//! of the symbols is fixed at construction and drives every deterministic
//! iteration downstream (BFS numbering, word enumeration, output).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// A letter, identified by its index in the owning [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u16);

impl Symbol {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("alphabet must contain at least one symbol")]
    Empty,
    #[error("duplicate symbol name `{0}`")]
    Duplicate(String),
    #[error("invalid symbol name `{0}`")]
    InvalidName(String),
    #[error("alphabets larger than {max} symbols are not supported")]
    TooLarge { max: usize },
}

/// Maximum supported alphabet size.
pub const MAX_SYMBOLS: usize = 64;

/// A non-empty, ordered set of distinct symbol names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Arc<[String]>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, AlphabetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(AlphabetError::Empty);
        }
        if names.len() > MAX_SYMBOLS {
            return Err(AlphabetError::TooLarge { max: MAX_SYMBOLS });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_graphic()) || name.contains('\'')
            {
                return Err(AlphabetError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(AlphabetError::Duplicate(name.clone()));
            }
        }
        Ok(Alphabet { names: names.into() })
    }

    /// One symbol per character, e.g. `Alphabet::letters("abc")`.
    pub fn letters(chars: &str) -> Result<Self, AlphabetError> {
        Self::new(chars.chars().map(String::from))
    }

    /// `prefix1 … prefixN`; used by the growing-alphabet witness families.
    pub fn indexed(prefix: &str, count: usize) -> Result<Self, AlphabetError> {
        Self::new((1..=count).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> impl DoubleEndedIterator<Item = Symbol> + ExactSizeIterator {
        (0..self.names.len() as u16).map(Symbol)
    }

    pub fn name(&self, sym: Symbol) -> &str {
        &self.names[sym.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Symbol(i as u16))
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        sym.index() < self.names.len()
    }

    /// Parse a word written as space-separated symbol names, or as a run of
    /// single-character names when every symbol is one character long.
    pub fn parse_word(&self, text: &str) -> Option<Vec<Symbol>> {
        let text = text.trim();
        if text.contains(char::is_whitespace) || self.names.iter().any(|n| n.len() > 1) {
            text.split_whitespace().map(|t| self.lookup(t)).collect()
        } else {
            text.chars().map(|c| self.lookup(c.encode_utf8(&mut [0; 4]))).collect()
        }
    }

    pub fn format_word(&self, word: &[Symbol]) -> String {
        if word.is_empty() {
            return "ε".to_string();
        }
        let single = self.names.iter().all(|n| n.len() == 1);
        let parts: Vec<&str> = word.iter().map(|&s| self.name(s)).collect();
        if single {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{:?}", &*self.names)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_alphabets() {
        assert_eq!(Alphabet::new(Vec::<String>::new()), Err(AlphabetError::Empty));
        assert_eq!(
            Alphabet::letters("aba"),
            Err(AlphabetError::Duplicate("a".into()))
        );
        assert!(matches!(
            Alphabet::new(["a b"]),
            Err(AlphabetError::InvalidName(_))
        ));
    }

    #[test]
    fn indexed_names() {
        let sigma = Alphabet::indexed("a", 3).unwrap();
        assert_eq!(sigma.names(), ["a1", "a2", "a3"]);
        assert_eq!(sigma.lookup("a2"), Some(Symbol(1)));
        let w = sigma.parse_word("a1 a3").unwrap();
        assert_eq!(w, vec![Symbol(0), Symbol(2)]);
        assert_eq!(sigma.format_word(&w), "a1 a3");
    }

    #[test]
    fn single_letter_words() {
        let sigma = Alphabet::letters("ab").unwrap();
        assert_eq!(sigma.parse_word("abba").unwrap().len(), 4);
        assert_eq!(sigma.parse_word("abc"), None);
        assert_eq!(sigma.format_word(&[]), "ε");
    }
}
