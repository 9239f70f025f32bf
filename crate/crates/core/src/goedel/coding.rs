//! Gödel coding of dotted sequences into the unit square.
//!
//! Stack and input sides carry separate digit maps: the stack word
//! `a_{-1} a_{-2} ...` encodes as `x = Σ_k ψ(a_{-k}) b_L^{-k}` and the
//! input word `a_0 a_1 ...` as `y = Σ_k ψ(a_k) b_R^{-k-1}`. A cylinder's
//! two fixed words pin an axis-aligned rectangle, its symbologram image.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::rational::Rat;
use crate::symbolic::{Alphabet, CylinderSpec, DottedSequence, SymbolId};

use super::geometry::{Point, Rect};

/// Digit assignment for both sides of the dot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoedelCoding {
    alphabet: Arc<Alphabet>,
    stack_code: BTreeMap<SymbolId, u32>,
    input_code: BTreeMap<SymbolId, u32>,
    base_left: u32,
    base_right: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodingError {
    #[error("stack-side codes must be a bijection onto 0..{expected}")]
    BadStackCodes { expected: u32 },
    #[error("input-side codes must be a bijection onto 0..{expected}")]
    BadInputCodes { expected: u32 },
    #[error("blank symbol must carry code 0 on every side that codes it")]
    BlankNotZero,
    #[error("symbol {name:?} has no code on the {side} side")]
    UncodedSymbol { name: String, side: &'static str },
}

fn check_bijection(
    codes: &BTreeMap<SymbolId, u32>,
    make_err: impl Fn(u32) -> CodingError,
) -> Result<u32, CodingError> {
    let base = codes.len() as u32;
    let mut seen = vec![false; codes.len()];
    for &c in codes.values() {
        if c >= base || seen[c as usize] {
            return Err(make_err(base));
        }
        seen[c as usize] = true;
    }
    Ok(base)
}

impl GoedelCoding {
    /// Build a coding from explicit digit maps. Codes on each side must be
    /// exactly `{0, ..., len-1}`, and a blank (when the alphabet has one)
    /// must be coded 0 so that blank padding encodes to terminating zeros.
    pub fn new(
        alphabet: Arc<Alphabet>,
        stack_code: BTreeMap<SymbolId, u32>,
        input_code: BTreeMap<SymbolId, u32>,
    ) -> Result<Self, CodingError> {
        let base_left = check_bijection(&stack_code, |expected| CodingError::BadStackCodes {
            expected,
        })?;
        let base_right = check_bijection(&input_code, |expected| CodingError::BadInputCodes {
            expected,
        })?;
        if let Some(b) = alphabet.blank() {
            for codes in [&stack_code, &input_code] {
                if let Some(&c) = codes.get(&b) {
                    if c != 0 {
                        return Err(CodingError::BlankNotZero);
                    }
                }
            }
        }
        Ok(GoedelCoding {
            alphabet,
            stack_code,
            input_code,
            base_left,
            base_right,
        })
    }

    /// Code every alphabet symbol in declaration order on both sides, with
    /// the blank (if any) forced to 0. Suits machine alphabets where stack
    /// and input range over the same symbols.
    pub fn dense(alphabet: Arc<Alphabet>) -> Self {
        let order: Vec<SymbolId> = match alphabet.blank() {
            Some(b) => std::iter::once(b)
                .chain(alphabet.ids().filter(|&id| id != b))
                .collect(),
            None => alphabet.ids().collect(),
        };
        let codes: BTreeMap<SymbolId, u32> = order
            .iter()
            .enumerate()
            .map(|(i, &id)| (id, i as u32))
            .collect();
        GoedelCoding::new(alphabet, codes.clone(), codes).expect("dense coding is a bijection")
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn base_left(&self) -> u32 {
        self.base_left
    }

    pub fn base_right(&self) -> u32 {
        self.base_right
    }

    pub fn stack_codes(&self) -> &BTreeMap<SymbolId, u32> {
        &self.stack_code
    }

    pub fn input_codes(&self) -> &BTreeMap<SymbolId, u32> {
        &self.input_code
    }

    fn code(&self, side: Side, sym: SymbolId) -> Result<u32, CodingError> {
        let map = match side {
            Side::Stack => &self.stack_code,
            Side::Input => &self.input_code,
        };
        map.get(&sym).copied().ok_or_else(|| CodingError::UncodedSymbol {
            name: self.alphabet.name(sym).to_string(),
            side: side.name(),
        })
    }

    /// Value of a finite word as a base-`b` fraction: the first symbol is
    /// the most significant digit.
    fn word_value(&self, side: Side, word: &[SymbolId]) -> Result<Rat, CodingError> {
        let base = Rat::from_int(match side {
            Side::Stack => self.base_left as i64,
            Side::Input => self.base_right as i64,
        });
        // Horner evaluation of Σ ψ(w_k) b^{-k-1}
        let mut acc = Rat::zero();
        for &sym in word.iter().rev() {
            acc = (acc + Rat::from_int(self.code(side, sym)? as i64)) / &base;
        }
        Ok(acc)
    }

    /// Symbologram coordinates of a dotted sequence; both values in `[0,1)`.
    pub fn encode(&self, s: &DottedSequence) -> Result<Point, CodingError> {
        Ok(Point::new(
            self.word_value(Side::Stack, s.stack())?,
            self.word_value(Side::Input, s.input())?,
        ))
    }

    /// Stack-side value of a finite word (the x coordinate it pins).
    pub fn stack_value(&self, word: &[SymbolId]) -> Result<Rat, CodingError> {
        self.word_value(Side::Stack, word)
    }

    /// Input-side value of a finite word (the y coordinate it pins).
    pub fn input_value(&self, word: &[SymbolId]) -> Result<Rat, CodingError> {
        self.word_value(Side::Input, word)
    }

    /// Symbologram rectangle of the cylinder fixing `word_stack` before the
    /// dot and `word_input` after it. Empty words span the full axis.
    pub fn cylinder_rect(
        &self,
        word_stack: &[SymbolId],
        word_input: &[SymbolId],
    ) -> Result<Rect, CodingError> {
        let x_lo = self.word_value(Side::Stack, word_stack)?;
        let y_lo = self.word_value(Side::Input, word_input)?;
        let x_hi = &x_lo + &Rat::int_pow(self.base_left, -(word_stack.len() as i32));
        let y_hi = &y_lo + &Rat::int_pow(self.base_right, -(word_input.len() as i32));
        Ok(Rect::new(x_lo, x_hi, y_lo, y_hi).expect("cylinder bounds lie in the unit square"))
    }

    /// Rectangle of a [`CylinderSpec`].
    pub fn cylinder_rect_of(&self, cyl: &CylinderSpec) -> Result<Rect, CodingError> {
        self.cylinder_rect(cyl.left(), cyl.right())
    }
}

#[derive(Clone, Copy)]
enum Side {
    Stack,
    Input,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Stack => "stack",
            Side::Input => "input",
        }
    }
}
