use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::WordError;

/// A finite, totally ordered set of symbols.
///
/// Symbols are identified by their index; the index order is the
/// lexicographic order used everywhere in the crate.
#[derive(Clone)]
pub struct Alphabet {
    symbols: Arc<[char]>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, WordError> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        if symbols.len() > u8::MAX as usize {
            return Err(WordError::AlphabetTooLarge(symbols.len()));
        }
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(WordError::DuplicateSymbol(*c));
            }
            if *c == '?' {
                return Err(WordError::ReservedSymbol(*c));
            }
        }
        Ok(Self {
            symbols: symbols.into(),
        })
    }

    /// `{0, 1}` with `0 < 1`.
    pub fn binary() -> Self {
        Self {
            symbols: Arc::from(['0', '1'].as_slice()),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_binary(&self) -> bool {
        self.symbols.len() == 2
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: u8) -> char {
        self.symbols[index as usize]
    }

    pub fn index_of(&self, symbol: char) -> Option<u8> {
        self.symbols
            .iter()
            .position(|&c| c == symbol)
            .map(|i| i as u8)
    }

    /// Converts a string of symbols to letter indices.
    pub fn encode(&self, text: &str) -> Result<Vec<u8>, WordError> {
        text.chars()
            .map(|c| {
                self.index_of(c).ok_or_else(|| WordError::UnknownSymbol {
                    symbol: c,
                    alphabet: self.to_string(),
                })
            })
            .collect()
    }

    pub fn decode(&self, letters: &[u8]) -> String {
        letters.iter().map(|&l| self.symbol(l)).collect()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.symbols, &other.symbols) || self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.symbols.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Self::binary()
    }
}

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Alphabet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Alphabet::new(s.chars()).map_err(serde::de::Error::custom)
    }
}
