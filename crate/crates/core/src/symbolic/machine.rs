//! Turing machines over a joint alphabet of tape symbols and control
//! states, stepped directly on dotted sequences or compiled to a
//! generalized shift.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::alphabet::{Alphabet, AlphabetError, SymbolId};
use super::sequence::DottedSequence;
use super::shift::{GeneralizedShift, GsError, GsRule, HaltSemantics, Pat};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    Left,
    Right,
}

/// Action taken for one `(state, read symbol)` pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Action {
    pub next: SymbolId,
    pub write: SymbolId,
    pub mv: Move,
}

/// A deterministic Turing machine.
///
/// The alphabet is the joint alphabet: tape symbols first (in declaration
/// order, with the blank among them), then control states. A state
/// description is a dotted sequence whose stack top is the current control
/// state and whose input head is the symbol under the read/write head.
#[derive(Debug)]
pub struct TuringMachine {
    joint: Arc<Alphabet>,
    tape_len: usize,
    input_symbols: Vec<SymbolId>,
    table: BTreeMap<(SymbolId, SymbolId), Action>,
    initial: SymbolId,
    halting: Vec<SymbolId>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TmError {
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error("a blank symbol is required on the tape alphabet")]
    MissingBlank,
    #[error("input symbol {0:?} must be a tape symbol other than the blank")]
    BadInputSymbol(String),
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("unknown tape symbol {0:?}")]
    UnknownTapeSymbol(String),
    #[error("duplicate table entry for ({state:?}, {read:?})")]
    DuplicateEntry { state: String, read: String },
    #[error("halting state {0:?} must not have table entries")]
    EntryForHaltingState(String),
    #[error(transparent)]
    Shift(#[from] GsError),
}

/// Raw transition used while building a machine.
#[derive(Clone, Debug)]
pub struct TransitionSpec {
    pub state: String,
    pub read: String,
    pub next: String,
    pub write: String,
    pub mv: Move,
}

/// Result of one machine step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TmStep {
    Next(DottedSequence),
    /// The current state is halting or the table has no entry.
    Halted,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed state description {state:?}: {reason}")]
pub struct MalformedDescription {
    pub state: String,
    pub reason: String,
}

impl TuringMachine {
    pub fn new(
        states: Vec<String>,
        tape_symbols: Vec<String>,
        blank: &str,
        input_symbols: Vec<String>,
        transitions: Vec<TransitionSpec>,
        initial: &str,
        halting: Vec<String>,
    ) -> Result<Self, TmError> {
        let tape_len = tape_symbols.len();
        let joint_names: Vec<String> = tape_symbols.into_iter().chain(states).collect();
        let joint = Alphabet::new(joint_names, Some(blank))?;
        if joint.blank().is_none() {
            return Err(TmError::MissingBlank);
        }

        let is_tape = |id: SymbolId| id.index() < tape_len;
        let state_id = |name: &str| -> Result<SymbolId, TmError> {
            match joint.id(name) {
                Some(id) if !is_tape(id) => Ok(id),
                _ => Err(TmError::UnknownState(name.to_string())),
            }
        };
        let tape_id = |name: &str| -> Result<SymbolId, TmError> {
            match joint.id(name) {
                Some(id) if is_tape(id) => Ok(id),
                _ => Err(TmError::UnknownTapeSymbol(name.to_string())),
            }
        };

        let input_symbols = input_symbols
            .iter()
            .map(|name| {
                let id = tape_id(name).map_err(|_| TmError::BadInputSymbol(name.clone()))?;
                if Some(id) == joint.blank() {
                    return Err(TmError::BadInputSymbol(name.clone()));
                }
                Ok(id)
            })
            .collect::<Result<Vec<_>, _>>()?;

        let initial = state_id(initial)?;
        let halting = halting
            .iter()
            .map(|name| state_id(name))
            .collect::<Result<Vec<_>, _>>()?;

        let mut table = BTreeMap::new();
        for tr in &transitions {
            let q = state_id(&tr.state)?;
            if halting.contains(&q) {
                return Err(TmError::EntryForHaltingState(tr.state.clone()));
            }
            let key = (q, tape_id(&tr.read)?);
            let action = Action {
                next: state_id(&tr.next)?,
                write: tape_id(&tr.write)?,
                mv: tr.mv,
            };
            if table.insert(key, action).is_some() {
                return Err(TmError::DuplicateEntry {
                    state: tr.state.clone(),
                    read: tr.read.clone(),
                });
            }
        }

        Ok(TuringMachine {
            joint,
            tape_len,
            input_symbols,
            table,
            initial,
            halting,
        })
    }

    /// The joint alphabet (tape symbols then states).
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.joint
    }

    pub fn is_state(&self, id: SymbolId) -> bool {
        id.index() >= self.tape_len && self.joint.contains_id(id)
    }

    pub fn is_tape_symbol(&self, id: SymbolId) -> bool {
        id.index() < self.tape_len
    }

    pub fn tape_symbols(&self) -> impl Iterator<Item = SymbolId> + '_ {
        (0..self.tape_len as u32).map(SymbolId)
    }

    pub fn states(&self) -> impl Iterator<Item = SymbolId> + '_ {
        (self.tape_len as u32..self.joint.len() as u32).map(SymbolId)
    }

    pub fn input_symbols(&self) -> &[SymbolId] {
        &self.input_symbols
    }

    pub fn initial(&self) -> SymbolId {
        self.initial
    }

    pub fn is_halting(&self, id: SymbolId) -> bool {
        self.halting.contains(&id)
    }

    pub fn table(&self) -> &BTreeMap<(SymbolId, SymbolId), Action> {
        &self.table
    }

    /// Initial state description: control state before the leftmost input
    /// symbol.
    pub fn initial_description(
        &self,
        input: Vec<SymbolId>,
    ) -> Result<DottedSequence, super::sequence::SequenceError> {
        DottedSequence::new(Arc::clone(&self.joint), vec![self.initial], input)
    }

    /// Advance a state description by one machine-table entry.
    ///
    /// Returns [`TmStep::Halted`] when the current state is halting or the
    /// table has no entry for `(state, read symbol)`.
    pub fn step(&self, s: &DottedSequence) -> Result<TmStep, MalformedDescription> {
        let malformed = |reason: &str| MalformedDescription {
            state: s.to_string(),
            reason: reason.to_string(),
        };
        let q = *s
            .stack()
            .first()
            .ok_or_else(|| malformed("stack top must be a control state, found blank"))?;
        if !self.is_state(q) {
            return Err(malformed("stack top must be a control state"));
        }
        let a = s
            .right_at(0)
            .expect("machine alphabets always define a blank");
        if !self.is_tape_symbol(a) {
            return Err(malformed("head symbol must be a tape symbol"));
        }

        if self.is_halting(q) {
            return Ok(TmStep::Halted);
        }
        let Some(action) = self.table.get(&(q, a)) else {
            return Ok(TmStep::Halted);
        };

        let blank = self.joint.blank().expect("blank checked at construction");
        let mut stack: Vec<SymbolId> = s.stack().to_vec();
        let mut input: Vec<SymbolId> = s.input().to_vec();
        if input.is_empty() {
            input.push(blank);
        }
        match action.mv {
            Move::Right => {
                // ... c q . a y ...  ->  ... c a' q' . y ...
                stack[0] = action.write;
                stack.insert(0, action.next);
                input.remove(0);
            }
            Move::Left => {
                // ... c q . a y ...  ->  ... q' . c a' y ...
                stack.remove(0);
                let c = if stack.is_empty() { blank } else { stack.remove(0) };
                stack.insert(0, action.next);
                input[0] = action.write;
                input.insert(0, c);
            }
        }
        let next = DottedSequence::new(Arc::clone(&self.joint), stack, input)
            .expect("machine symbols are alphabet members");
        Ok(TmStep::Next(next))
    }

    /// Compile the machine table into a generalized shift.
    ///
    /// A right entry becomes one rule with a length-2 domain of dependence
    /// and dot shift +1. A left entry needs the symbol left of the head, so
    /// it becomes one rule per tape symbol `c`, each with a length-3 domain
    /// and dot shift -1.
    pub fn to_generalized_shift(&self) -> Result<GeneralizedShift, GsError> {
        let mut rules = Vec::new();
        for (&(q, a), action) in &self.table {
            let name = |id: SymbolId| self.joint.name(id).to_string();
            match action.mv {
                Move::Right => rules.push(GsRule {
                    label: format!(
                        "{} {} -> {} {} R",
                        name(q),
                        name(a),
                        name(action.next),
                        name(action.write)
                    ),
                    dod_left: vec![Pat::Sym(q)],
                    dod_right: vec![Pat::Sym(a)],
                    doe_left: vec![action.write],
                    doe_right: vec![action.next],
                    shift: 1,
                }),
                Move::Left => {
                    for c in self.tape_symbols() {
                        rules.push(GsRule {
                            label: format!(
                                "{} {} -> {} {} L [{}]",
                                name(q),
                                name(a),
                                name(action.next),
                                name(action.write),
                                name(c)
                            ),
                            dod_left: vec![Pat::Sym(q), Pat::Sym(c)],
                            dod_right: vec![Pat::Sym(a)],
                            doe_left: vec![c, action.next],
                            doe_right: vec![action.write],
                            shift: -1,
                        });
                    }
                }
            }
        }
        GeneralizedShift::new(Arc::clone(&self.joint), rules, HaltSemantics::MachineHalt)
    }
}
