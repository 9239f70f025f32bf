//! JSON schema for compiled automata: exact rationals as `"num/den"`
//! strings, codes keyed by symbol name.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::rational::Rat;
use crate::symbolic::{Alphabet, SymbolId};

use super::coding::GoedelCoding;
use super::geometry::Rect;
use super::nda::{AffineBranch, CompileError, NdaMachine};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RectFile {
    pub x_lo: Rat,
    pub x_hi: Rat,
    pub y_lo: Rat,
    pub y_hi: Rat,
}

impl From<&Rect> for RectFile {
    fn from(r: &Rect) -> Self {
        RectFile {
            x_lo: r.x_lo.clone(),
            x_hi: r.x_hi.clone(),
            y_lo: r.y_lo.clone(),
            y_hi: r.y_hi.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BranchFile {
    pub label: String,
    pub cell: RectFile,
    pub a_x: Rat,
    pub a_y: Rat,
    pub lambda_x: Rat,
    pub lambda_y: Rat,
}

/// On-disk form of an [`NdaMachine`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NdaFile {
    pub symbols: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blank: Option<String>,
    pub stack_codes: BTreeMap<String, u32>,
    pub input_codes: BTreeMap<String, u32>,
    pub branches: Vec<BranchFile>,
}

#[derive(Debug, thiserror::Error)]
pub enum NdaFileError {
    #[error("invalid automaton file: {0}")]
    Alphabet(#[from] crate::symbolic::AlphabetError),
    #[error("invalid automaton file: code for unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("invalid automaton file: {0}")]
    Coding(#[from] super::coding::CodingError),
    #[error("invalid automaton file: {0}")]
    Machine(#[from] CompileError),
    #[error("invalid automaton file: {0}")]
    Rect(#[from] super::geometry::RectError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl NdaFile {
    pub fn from_machine(m: &NdaMachine) -> Self {
        let alphabet = m.coding().alphabet();
        let named = |codes: &BTreeMap<SymbolId, u32>| -> BTreeMap<String, u32> {
            codes
                .iter()
                .map(|(&id, &c)| (alphabet.name(id).to_string(), c))
                .collect()
        };
        NdaFile {
            symbols: alphabet.names().map(str::to_string).collect(),
            blank: alphabet.blank().map(|b| alphabet.name(b).to_string()),
            stack_codes: named(m.coding().stack_codes()),
            input_codes: named(m.coding().input_codes()),
            branches: m
                .branches()
                .iter()
                .map(|b| BranchFile {
                    label: b.label.clone(),
                    cell: RectFile::from(&b.cell),
                    a_x: b.a_x.clone(),
                    a_y: b.a_y.clone(),
                    lambda_x: b.lambda_x.clone(),
                    lambda_y: b.lambda_y.clone(),
                })
                .collect(),
        }
    }

    pub fn into_machine(self) -> Result<NdaMachine, NdaFileError> {
        let alphabet = Alphabet::new(self.symbols, self.blank.as_deref())?;
        let resolve = |codes: BTreeMap<String, u32>| -> Result<BTreeMap<SymbolId, u32>, NdaFileError> {
            codes
                .into_iter()
                .map(|(name, c)| {
                    alphabet
                        .id(&name)
                        .map(|id| (id, c))
                        .ok_or(NdaFileError::UnknownSymbol(name))
                })
                .collect()
        };
        let coding = GoedelCoding::new(
            std::sync::Arc::clone(&alphabet),
            resolve(self.stack_codes)?,
            resolve(self.input_codes)?,
        )?;
        let branches = self
            .branches
            .into_iter()
            .map(|b| {
                Ok(AffineBranch {
                    cell: Rect::new(b.cell.x_lo, b.cell.x_hi, b.cell.y_lo, b.cell.y_hi)?,
                    a_x: b.a_x,
                    a_y: b.a_y,
                    lambda_x: b.lambda_x,
                    lambda_y: b.lambda_y,
                    label: b.label,
                })
            })
            .collect::<Result<Vec<_>, NdaFileError>>()?;
        Ok(NdaMachine::new(branches, coding)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("automaton files always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, NdaFileError> {
        Ok(serde_json::from_str(text)?)
    }
}
