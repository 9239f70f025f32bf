//! Symbol interning and the joint alphabet shared by tapes and machines.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Index of a symbol inside its [`Alphabet`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SymbolId(pub u32);

impl SymbolId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite ordered set of named symbols, optionally with a distinguished
/// blank used for implicit padding beyond the stored part of a tape.
#[derive(Debug)]
pub struct Alphabet {
    names: Vec<String>,
    by_name: HashMap<String, SymbolId>,
    blank: Option<SymbolId>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlphabetError {
    #[error("symbol names must be unique and nonempty: {0:?}")]
    BadSymbolName(String),
    #[error("blank symbol {0:?} is not a member of the alphabet")]
    BlankNotMember(String),
}

impl Alphabet {
    pub fn new<S: Into<String>>(
        symbols: impl IntoIterator<Item = S>,
        blank: Option<&str>,
    ) -> Result<Arc<Self>, AlphabetError> {
        let mut names = Vec::new();
        let mut by_name = HashMap::new();
        for s in symbols {
            let name: String = s.into();
            if name.is_empty() {
                return Err(AlphabetError::BadSymbolName(name));
            }
            let id = SymbolId(names.len() as u32);
            if by_name.insert(name.clone(), id).is_some() {
                return Err(AlphabetError::BadSymbolName(name));
            }
            names.push(name);
        }
        let blank = match blank {
            None => None,
            Some(b) => Some(
                by_name
                    .get(b)
                    .copied()
                    .ok_or_else(|| AlphabetError::BlankNotMember(b.to_string()))?,
            ),
        };
        Ok(Arc::new(Alphabet {
            names,
            by_name,
            blank,
        }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn blank(&self) -> Option<SymbolId> {
        self.blank
    }

    pub fn id(&self, name: &str) -> Option<SymbolId> {
        self.by_name.get(name).copied()
    }

    pub fn name(&self, id: SymbolId) -> &str {
        &self.names[id.index()]
    }

    pub fn contains_id(&self, id: SymbolId) -> bool {
        id.index() < self.names.len()
    }

    pub fn ids(&self) -> impl Iterator<Item = SymbolId> + '_ {
        (0..self.names.len() as u32).map(SymbolId)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    /// Resolve a whitespace-separated word to symbol ids.
    pub fn parse_word(&self, word: &str) -> Result<Vec<SymbolId>, UnknownSymbol> {
        word.split_whitespace()
            .map(|tok| {
                self.id(tok).ok_or_else(|| UnknownSymbol {
                    name: tok.to_string(),
                })
            })
            .collect()
    }

    pub fn format_word(&self, word: &[SymbolId]) -> String {
        word.iter()
            .map(|&id| self.name(id))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown symbol {name:?}")]
pub struct UnknownSymbol {
    pub name: String,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty_names() {
        assert!(Alphabet::new(["a", "a"], None).is_err());
        assert!(Alphabet::new(["a", ""], None).is_err());
    }

    #[test]
    fn blank_must_be_member() {
        assert!(Alphabet::new(["a", "b"], Some("c")).is_err());
        let a = Alphabet::new(["#", "a"], Some("#")).unwrap();
        assert_eq!(a.blank(), a.id("#"));
    }

    #[test]
    fn word_round_trip() {
        let a = Alphabet::new(["NP", "V", "VP", "S"], None).unwrap();
        let w = a.parse_word("S NP V").unwrap();
        assert_eq!(a.format_word(&w), "S NP V");
        assert!(a.parse_word("S Q").is_err());
    }
}
