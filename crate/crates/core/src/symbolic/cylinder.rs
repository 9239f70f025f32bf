//! Cylinder sets: all dotted sequences extending a fixed pair of finite
//! words around the dot.

use std::sync::Arc;

use super::alphabet::{Alphabet, SymbolId};
use super::sequence::DottedSequence;

/// The pair of one-sided cylinders fixing `left` symbols before the dot
/// (top-first) and `right` symbols after it.
///
/// An n-cylinder anchored at time `t < 0` with `n > |t|` decomposes into
/// exactly such a pair; the empty pair is the full sequence space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylinderSpec {
    alphabet: Arc<Alphabet>,
    left: Vec<SymbolId>,
    right: Vec<SymbolId>,
}

impl CylinderSpec {
    pub fn new(alphabet: Arc<Alphabet>, left: Vec<SymbolId>, right: Vec<SymbolId>) -> Self {
        CylinderSpec {
            alphabet,
            left,
            right,
        }
    }

    pub fn from_words(
        alphabet: &Arc<Alphabet>,
        left: &str,
        right: &str,
    ) -> Result<Self, super::alphabet::UnknownSymbol> {
        Ok(CylinderSpec::new(
            Arc::clone(alphabet),
            alphabet.parse_word(left)?,
            alphabet.parse_word(right)?,
        ))
    }

    /// Word fixed left of the dot, top-first.
    pub fn left(&self) -> &[SymbolId] {
        &self.left
    }

    /// Word fixed right of the dot, reading order.
    pub fn right(&self) -> &[SymbolId] {
        &self.right
    }

    /// Total fixed block length `n`.
    pub fn block_len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Anchor time of the block relative to the dot (`t = -|left|`).
    pub fn anchor(&self) -> isize {
        -(self.left.len() as isize)
    }

    /// The empty cylinder is the full sequence space.
    pub fn is_full_space(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// Membership: the sequence extends both fixed words, with implicit
    /// blank padding beyond its stored part.
    pub fn contains(&self, s: &DottedSequence) -> bool {
        let side_ok = |word: &[SymbolId], at: &dyn Fn(usize) -> Option<SymbolId>| {
            word.iter()
                .enumerate()
                .all(|(k, &sym)| at(k) == Some(sym))
        };
        side_ok(&self.left, &|k| s.left_at(k)) && side_ok(&self.right, &|k| s.right_at(k))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_cylinder_is_full_space() {
        let al = Alphabet::new(["NP", "V", "VP", "S"], None).unwrap();
        let c = CylinderSpec::from_words(&al, "", "").unwrap();
        assert!(c.is_full_space());
        for (stack, input) in [("", ""), ("S", "NP V NP"), ("VP", "V")] {
            let s = DottedSequence::from_words(&al, stack, input).unwrap();
            assert!(c.contains(&s));
        }
    }

    #[test]
    fn sequence_lies_in_its_own_cylinder() {
        let al = Alphabet::new(["NP", "V", "VP", "S"], None).unwrap();
        let s = DottedSequence::from_words(&al, "S", "NP V NP").unwrap();
        let c = CylinderSpec::new(Arc::clone(&al), s.stack().to_vec(), s.input().to_vec());
        assert!(c.contains(&s));
        assert_eq!(c.block_len(), 4);
        assert_eq!(c.anchor(), -1);
    }

    #[test]
    fn padding_matches_blank_continuations() {
        let al = Alphabet::new(["#", "a", "q"], Some("#")).unwrap();
        let c = CylinderSpec::from_words(&al, "q #", "a").unwrap();
        let s = DottedSequence::from_words(&al, "q", "a").unwrap();
        assert!(c.contains(&s), "implicit blank extends the stack");
        let deep = DottedSequence::from_words(&al, "q a", "a").unwrap();
        assert!(!c.contains(&deep));
    }
}
