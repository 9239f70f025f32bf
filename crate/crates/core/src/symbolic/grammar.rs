//! Context-free grammars and their compilation to predict/attach
//! generalized shifts.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::alphabet::{Alphabet, AlphabetError, SymbolId};
use super::shift::{GeneralizedShift, GsError, GsRule, HaltSemantics, Pat};

/// A context-free grammar over a shared alphabet of nonterminals and
/// terminals (no blank).
#[derive(Debug)]
pub struct ContextFreeGrammar {
    alphabet: Arc<Alphabet>,
    nonterminals: BTreeSet<SymbolId>,
    rules: Vec<(SymbolId, Vec<SymbolId>)>,
    start: SymbolId,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CfgError {
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error("unknown symbol {0:?} in rule")]
    UnknownSymbol(String),
    #[error("rule left-hand side {0:?} must be a nonterminal")]
    LhsNotNonterminal(String),
    #[error("rule for {0:?} has an empty right-hand side")]
    EmptyRhs(String),
    #[error("start symbol {0:?} must be a nonterminal")]
    BadStart(String),
    #[error("terminal set entry {0:?} is not an alphabet member")]
    UnknownTerminal(String),
    #[error(transparent)]
    Shift(#[from] GsError),
}

impl ContextFreeGrammar {
    pub fn new(
        nonterminals: Vec<String>,
        terminals: Vec<String>,
        rules: Vec<(String, Vec<String>)>,
        start: &str,
    ) -> Result<Self, CfgError> {
        let names: Vec<String> = nonterminals.iter().chain(&terminals).cloned().collect();
        let alphabet = Alphabet::new(names, None)?;
        let nonterminal_set: BTreeSet<SymbolId> = nonterminals
            .iter()
            .map(|n| alphabet.id(n).expect("just interned"))
            .collect();

        let lookup = |name: &str| -> Result<SymbolId, CfgError> {
            alphabet
                .id(name)
                .ok_or_else(|| CfgError::UnknownSymbol(name.to_string()))
        };
        let mut resolved = Vec::new();
        for (lhs, rhs) in &rules {
            let lhs_id = lookup(lhs)?;
            if !nonterminal_set.contains(&lhs_id) {
                return Err(CfgError::LhsNotNonterminal(lhs.clone()));
            }
            if rhs.is_empty() {
                return Err(CfgError::EmptyRhs(lhs.clone()));
            }
            let rhs_ids = rhs.iter().map(|s| lookup(s)).collect::<Result<Vec<_>, _>>()?;
            resolved.push((lhs_id, rhs_ids));
        }
        let start_id = lookup(start)?;
        if !nonterminal_set.contains(&start_id) {
            return Err(CfgError::BadStart(start.to_string()));
        }
        Ok(ContextFreeGrammar {
            alphabet,
            nonterminals: nonterminal_set,
            rules: resolved,
            start: start_id,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn start(&self) -> SymbolId {
        self.start
    }

    pub fn rules(&self) -> &[(SymbolId, Vec<SymbolId>)] {
        &self.rules
    }

    pub fn is_nonterminal(&self, id: SymbolId) -> bool {
        self.nonterminals.contains(&id)
    }

    /// Compile to a predict/attach generalized shift.
    ///
    /// `which_terminals` is the set of symbols treated as terminals for the
    /// run (attach rules are emitted for exactly these). Grammar rules whose
    /// left-hand side is in `which_terminals` are lexical and skipped; every
    /// other rule `X -> w` becomes a predict rule that pops `X` and pushes
    /// `w` with its first symbol topmost, leaving the input untouched.
    pub fn to_generalized_shift(
        &self,
        which_terminals: &BTreeSet<SymbolId>,
    ) -> Result<GeneralizedShift, CfgError> {
        for id in which_terminals {
            if !self.alphabet.contains_id(*id) {
                return Err(CfgError::UnknownTerminal(format!("{:?}", id)));
            }
        }
        let mut rules = Vec::new();
        let mut predict_index = 0usize;
        for (lhs, rhs) in &self.rules {
            if which_terminals.contains(lhs) {
                continue; // lexical rule
            }
            predict_index += 1;
            rules.push(GsRule {
                label: format!("predict({})", predict_index),
                dod_left: vec![Pat::Sym(*lhs)],
                dod_right: vec![Pat::Any],
                doe_left: rhs.clone(),
                doe_right: Vec::new(),
                shift: 0,
            });
        }
        for &z in which_terminals {
            rules.push(GsRule {
                label: "attach".to_string(),
                dod_left: vec![Pat::Sym(z)],
                dod_right: vec![Pat::Sym(z)],
                doe_left: Vec::new(),
                doe_right: Vec::new(),
                shift: 0,
            });
        }
        Ok(GeneralizedShift::new(
            Arc::clone(&self.alphabet),
            rules,
            HaltSemantics::ParserAccept,
        )?)
    }

    /// Terminal set as declared at construction (alphabet members that are
    /// not nonterminals).
    pub fn declared_terminals(&self) -> BTreeSet<SymbolId> {
        self.alphabet
            .ids()
            .filter(|id| !self.nonterminals.contains(id))
            .collect()
    }
}
