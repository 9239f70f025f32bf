//! Dotted sequences: bi-infinite blank-padded tapes split at the
//! observation dot, stored canonically as two finite words.

use std::fmt;
use std::sync::Arc;

use super::alphabet::{Alphabet, SymbolId, UnknownSymbol};

/// A bi-infinite symbol sequence split at the dot.
///
/// `stack` holds the symbols left of the dot in top-first order (the first
/// element is adjacent to the dot); `input` holds the symbols right of the
/// dot in reading order. Positions beyond the stored words are implicitly
/// the blank symbol when the alphabet defines one, and empty otherwise.
///
/// Canonical form: neither stored word ends in the blank, so equality of
/// the stored words is equality of the underlying sequences.
#[derive(Clone)]
pub struct DottedSequence {
    alphabet: Arc<Alphabet>,
    stack: Vec<SymbolId>,
    input: Vec<SymbolId>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("symbol id {0:?} is not a member of the alphabet")]
    SymbolOutOfRange(SymbolId),
    #[error(transparent)]
    UnknownSymbol(#[from] UnknownSymbol),
}

impl DottedSequence {
    /// Build a sequence, validating membership and trimming trailing blanks.
    pub fn new(
        alphabet: Arc<Alphabet>,
        mut stack: Vec<SymbolId>,
        mut input: Vec<SymbolId>,
    ) -> Result<Self, SequenceError> {
        for &id in stack.iter().chain(input.iter()) {
            if !alphabet.contains_id(id) {
                return Err(SequenceError::SymbolOutOfRange(id));
            }
        }
        trim_trailing_blank(&mut stack, alphabet.blank());
        trim_trailing_blank(&mut input, alphabet.blank());
        Ok(DottedSequence {
            alphabet,
            stack,
            input,
        })
    }

    /// Build from whitespace-separated words, e.g. `("S", "NP V NP")`.
    pub fn from_words(
        alphabet: &Arc<Alphabet>,
        stack: &str,
        input: &str,
    ) -> Result<Self, SequenceError> {
        let s = alphabet.parse_word(stack)?;
        let i = alphabet.parse_word(input)?;
        Self::new(Arc::clone(alphabet), s, i)
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        DottedSequence {
            alphabet,
            stack: Vec::new(),
            input: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Stored stack word, top-first.
    pub fn stack(&self) -> &[SymbolId] {
        &self.stack
    }

    /// Stored input word, reading order.
    pub fn input(&self) -> &[SymbolId] {
        &self.input
    }

    pub fn is_empty(&self) -> bool {
        self.stack.is_empty() && self.input.is_empty()
    }

    /// Symbol at distance `k` left of the dot (k = 0 is the stack top).
    /// Falls back to the blank beyond the stored word.
    pub fn left_at(&self, k: usize) -> Option<SymbolId> {
        self.stack.get(k).copied().or(self.alphabet.blank())
    }

    /// Symbol at distance `k` right of the dot (k = 0 is under the dot).
    pub fn right_at(&self, k: usize) -> Option<SymbolId> {
        self.input.get(k).copied().or(self.alphabet.blank())
    }

    pub fn stack_names(&self) -> Vec<String> {
        self.stack
            .iter()
            .map(|&id| self.alphabet.name(id).to_string())
            .collect()
    }

    pub fn input_names(&self) -> Vec<String> {
        self.input
            .iter()
            .map(|&id| self.alphabet.name(id).to_string())
            .collect()
    }

    /// Consume into the raw stored words.
    pub fn into_parts(self) -> (Vec<SymbolId>, Vec<SymbolId>) {
        (self.stack, self.input)
    }
}

pub(crate) fn trim_trailing_blank(word: &mut Vec<SymbolId>, blank: Option<SymbolId>) {
    if let Some(b) = blank {
        while word.last() == Some(&b) {
            word.pop();
        }
    }
}

impl PartialEq for DottedSequence {
    fn eq(&self, other: &Self) -> bool {
        self.stack == other.stack && self.input == other.input
    }
}

impl Eq for DottedSequence {}

impl fmt::Display for DottedSequence {
    /// Tape order with an explicit dot: `x 1 . a y`; empty sides print as ε.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let left: Vec<&str> = self
            .stack
            .iter()
            .rev()
            .map(|&id| self.alphabet.name(id))
            .collect();
        let right: Vec<&str> = self
            .input
            .iter()
            .map(|&id| self.alphabet.name(id))
            .collect();
        let left = if left.is_empty() {
            "ε".to_string()
        } else {
            left.join(" ")
        };
        let right = if right.is_empty() {
            "ε".to_string()
        } else {
            right.join(" ")
        };
        write!(f, "{} . {}", left, right)
    }
}

impl fmt::Debug for DottedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DottedSequence({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tm_alphabet() -> Arc<Alphabet> {
        Alphabet::new(["#", "a", "b", "1", "2"], Some("#")).unwrap()
    }

    #[test]
    fn trims_trailing_blanks_on_both_sides() {
        let al = tm_alphabet();
        let s = DottedSequence::from_words(&al, "1 #", "a # #").unwrap();
        assert_eq!(s.stack_names(), ["1"]);
        assert_eq!(s.input_names(), ["a"]);
    }

    #[test]
    fn keeps_interior_blanks() {
        let al = tm_alphabet();
        let s = DottedSequence::from_words(&al, "# 1", "# a").unwrap();
        assert_eq!(s.stack_names(), ["#", "1"]);
        assert_eq!(s.input_names(), ["#", "a"]);
    }

    #[test]
    fn implicit_blank_beyond_stored_words() {
        let al = tm_alphabet();
        let s = DottedSequence::from_words(&al, "1", "a").unwrap();
        let blank = al.id("#").unwrap();
        assert_eq!(s.left_at(0), al.id("1"));
        assert_eq!(s.left_at(5), Some(blank));
        assert_eq!(s.right_at(1), Some(blank));
    }

    #[test]
    fn no_blank_means_no_padding() {
        let al = Alphabet::new(["NP", "V", "VP", "S"], None).unwrap();
        let s = DottedSequence::from_words(&al, "S", "NP V NP").unwrap();
        assert_eq!(s.left_at(1), None);
        assert_eq!(s.right_at(3), None);
    }

    #[test]
    fn display_uses_tape_order() {
        let al = tm_alphabet();
        let s = DottedSequence::from_words(&al, "1 a", "b").unwrap();
        assert_eq!(s.to_string(), "a 1 . b");
        let e = DottedSequence::empty(al);
        assert_eq!(e.to_string(), "ε . ε");
    }
}
