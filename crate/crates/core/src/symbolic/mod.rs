//! Symbolic layer: alphabets, dotted sequences, Turing machines,
//! context-free grammars, cylinder sets, and generalized shifts.

pub mod alphabet;
pub mod cylinder;
pub mod grammar;
pub mod machine;
pub mod sequence;
pub mod shift;

pub use alphabet::{Alphabet, AlphabetError, SymbolId, UnknownSymbol};
pub use cylinder::CylinderSpec;
pub use grammar::{CfgError, ContextFreeGrammar};
pub use machine::{
    Action, MalformedDescription, Move, TmError, TmStep, TransitionSpec, TuringMachine,
};
pub use sequence::{DottedSequence, SequenceError};
pub use shift::{
    GeneralizedShift, GsError, GsRule, GsStep, HaltSemantics, Pat, RunOutcome, StepError, Trace,
    TraceRecord, TraceStep,
};
