//! Generalized shifts: rewrite a word around the dot and move the dot.
//!
//! A rule reads a dotted word (the domain of dependence), substitutes a
//! replacement word (the domain of effect) and shifts the dot. One step of
//! a Turing machine and one predict/attach move of a deterministic parser
//! are both single rule applications.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, SymbolId};
use super::sequence::{trim_trailing_blank, DottedSequence};

/// One position of a rule's domain of dependence.
///
/// `Any` is a match-any guard: it matches every symbol, including the
/// implicit continuation beyond the stored word, and is neither consumed
/// nor rewritten.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Pat {
    Sym(SymbolId),
    Any,
}

/// A single generalized-shift rule.
///
/// `dod_left`/`doe_left` are top-first (first element adjacent to the dot),
/// `dod_right`/`doe_right` in reading order. `shift` counts dot motion:
/// positive moves the dot rightward, which equals the number of left-shifts
/// applied to the underlying sequence.
#[derive(Clone, Debug)]
pub struct GsRule {
    pub label: String,
    pub dod_left: Vec<Pat>,
    pub dod_right: Vec<Pat>,
    pub doe_left: Vec<SymbolId>,
    pub doe_right: Vec<SymbolId>,
    pub shift: i64,
}

impl GsRule {
    /// Number of stored symbols the rule consumes left of the dot
    /// (the concrete prefix; `Any` guards are not consumed).
    pub fn consumed_left(&self) -> usize {
        concrete_prefix_len(&self.dod_left)
    }

    pub fn consumed_right(&self) -> usize {
        concrete_prefix_len(&self.dod_right)
    }

    fn matches(&self, s: &DottedSequence) -> bool {
        side_matches(&self.dod_left, s.stack(), s.alphabet())
            && side_matches(&self.dod_right, s.input(), s.alphabet())
    }
}

fn concrete_prefix_len(pats: &[Pat]) -> usize {
    pats.iter().position(|p| matches!(p, Pat::Any)).unwrap_or(pats.len())
}

fn side_matches(pats: &[Pat], stored: &[SymbolId], alphabet: &Alphabet) -> bool {
    pats.iter().enumerate().all(|(k, pat)| match pat {
        Pat::Any => true,
        Pat::Sym(want) => match stored.get(k) {
            Some(have) => have == want,
            // beyond the stored word only the blank is present
            None => alphabet.blank() == Some(*want),
        },
    })
}

/// What a failure to match means for [`GeneralizedShift::run`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HaltSemantics {
    /// Parser convention: no rule on the empty sequence accepts, no rule
    /// anywhere else rejects.
    ParserAccept,
    /// Machine convention: no rule means the machine halted.
    MachineHalt,
}

/// A deterministic generalized shift over a fixed alphabet.
#[derive(Debug)]
pub struct GeneralizedShift {
    alphabet: Arc<Alphabet>,
    rules: Vec<GsRule>,
    halt_semantics: HaltSemantics,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GsError {
    #[error("rule {label:?}: domain of dependence must contain at least one position")]
    EmptyDod { label: String },
    #[error("rule {label:?}: match-any positions must form a suffix of each side")]
    WildcardNotSuffix { label: String },
    #[error("rule {label:?} uses a symbol outside the alphabet")]
    SymbolOutOfRange { label: String },
    #[error("rules {first:?} and {second:?} have overlapping domains of dependence")]
    OverlappingRules { first: String, second: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StepError {
    #[error("rules {first:?} and {second:?} both match {state}")]
    AmbiguousMatch {
        first: String,
        second: String,
        state: String,
    },
    #[error("rule {label:?} shifts the dot past the stored sequence and no blank exists")]
    ShiftOffTape { label: String },
}

/// Result of applying a generalized shift to one dotted sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GsStep {
    /// The unique matching rule was applied.
    Next {
        state: DottedSequence,
        label: String,
    },
    /// No rule matches.
    NoRule,
}

impl GeneralizedShift {
    /// Validate the rule set: nonempty DoDs, suffix-only wildcards, and
    /// pairwise non-overlapping domains of dependence.
    pub fn new(
        alphabet: Arc<Alphabet>,
        rules: Vec<GsRule>,
        halt_semantics: HaltSemantics,
    ) -> Result<Self, GsError> {
        for rule in &rules {
            if rule.dod_left.is_empty() && rule.dod_right.is_empty() {
                return Err(GsError::EmptyDod {
                    label: rule.label.clone(),
                });
            }
            for side in [&rule.dod_left, &rule.dod_right] {
                let prefix = concrete_prefix_len(side);
                if side[prefix..].iter().any(|p| matches!(p, Pat::Sym(_))) {
                    return Err(GsError::WildcardNotSuffix {
                        label: rule.label.clone(),
                    });
                }
            }
            let ids = rule
                .dod_left
                .iter()
                .chain(&rule.dod_right)
                .filter_map(|p| match p {
                    Pat::Sym(id) => Some(*id),
                    Pat::Any => None,
                })
                .chain(rule.doe_left.iter().copied())
                .chain(rule.doe_right.iter().copied());
            for id in ids {
                if !alphabet.contains_id(id) {
                    return Err(GsError::SymbolOutOfRange {
                        label: rule.label.clone(),
                    });
                }
            }
        }
        for (i, a) in rules.iter().enumerate() {
            for b in &rules[i + 1..] {
                if dods_overlap(a, b) {
                    return Err(GsError::OverlappingRules {
                        first: a.label.clone(),
                        second: b.label.clone(),
                    });
                }
            }
        }
        Ok(GeneralizedShift {
            alphabet,
            rules,
            halt_semantics,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[GsRule] {
        &self.rules
    }

    pub fn halt_semantics(&self) -> HaltSemantics {
        self.halt_semantics
    }

    /// Apply the unique matching rule to `s`.
    pub fn step(&self, s: &DottedSequence) -> Result<GsStep, StepError> {
        let mut found: Option<&GsRule> = None;
        for rule in &self.rules {
            if rule.matches(s) {
                if let Some(prev) = found {
                    return Err(StepError::AmbiguousMatch {
                        first: prev.label.clone(),
                        second: rule.label.clone(),
                        state: s.to_string(),
                    });
                }
                found = Some(rule);
            }
        }
        let Some(rule) = found else {
            return Ok(GsStep::NoRule);
        };
        let state = apply_rule(rule, s)?;
        Ok(GsStep::Next {
            state,
            label: rule.label.clone(),
        })
    }

    /// Iterate [`GeneralizedShift::step`] from `s0`, recording one trace
    /// record per visited state. The final record carries the outcome.
    pub fn run(&self, s0: DottedSequence, max_steps: usize) -> Result<Trace, StepError> {
        let mut steps = Vec::new();
        let mut state = s0;
        let mut t = 0usize;
        loop {
            match self.step(&state)? {
                GsStep::NoRule => {
                    let outcome = match self.halt_semantics {
                        HaltSemantics::MachineHalt => RunOutcome::Halt,
                        HaltSemantics::ParserAccept => {
                            if state.is_empty() {
                                RunOutcome::Accept
                            } else {
                                RunOutcome::Reject
                            }
                        }
                    };
                    steps.push(TraceStep {
                        t,
                        state,
                        op: outcome.label().to_string(),
                    });
                    return Ok(Trace { steps, outcome });
                }
                GsStep::Next { state: next, label } => {
                    if t == max_steps {
                        steps.push(TraceStep {
                            t,
                            state,
                            op: RunOutcome::BudgetExhausted.label().to_string(),
                        });
                        return Ok(Trace {
                            steps,
                            outcome: RunOutcome::BudgetExhausted,
                        });
                    }
                    steps.push(TraceStep {
                        t,
                        state,
                        op: label,
                    });
                    state = next;
                    t += 1;
                }
            }
        }
    }
}

/// Substitute the DoE for the consumed DoD prefix on each side, then move
/// the dot by `rule.shift`.
fn apply_rule(rule: &GsRule, s: &DottedSequence) -> Result<DottedSequence, StepError> {
    let blank = s.alphabet().blank();
    let rebuild = |doe: &[SymbolId], stored: &[SymbolId], consumed: usize| -> Vec<SymbolId> {
        let mut out = doe.to_vec();
        out.extend_from_slice(&stored[consumed.min(stored.len())..]);
        out
    };
    let mut stack = rebuild(&rule.doe_left, s.stack(), rule.consumed_left());
    let mut input = rebuild(&rule.doe_right, s.input(), rule.consumed_right());

    let (from, to, count) = if rule.shift >= 0 {
        (&mut input, &mut stack, rule.shift as usize)
    } else {
        (&mut stack, &mut input, (-rule.shift) as usize)
    };
    for _ in 0..count {
        let sym = if from.is_empty() {
            blank.ok_or_else(|| StepError::ShiftOffTape {
                label: rule.label.clone(),
            })?
        } else {
            from.remove(0)
        };
        to.insert(0, sym);
    }

    trim_trailing_blank(&mut stack, blank);
    trim_trailing_blank(&mut input, blank);
    Ok(DottedSequence::new(Arc::clone(s.alphabet()), stack, input)
        .expect("rule symbols validated at construction"))
}

/// Two domains of dependence overlap when some dotted sequence matches
/// both, i.e. the per-position symbol constraints intersect on both sides.
fn dods_overlap(a: &GsRule, b: &GsRule) -> bool {
    side_compatible(&a.dod_left, &b.dod_left) && side_compatible(&a.dod_right, &b.dod_right)
}

fn side_compatible(a: &[Pat], b: &[Pat]) -> bool {
    (0..a.len().max(b.len())).all(|k| match (a.get(k), b.get(k)) {
        (Some(Pat::Sym(x)), Some(Pat::Sym(y))) => x == y,
        _ => true,
    })
}

/// Terminal state of a [`Trace`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RunOutcome {
    Accept,
    Reject,
    Halt,
    BudgetExhausted,
}

impl RunOutcome {
    pub fn label(self) -> &'static str {
        match self {
            RunOutcome::Accept => "accept",
            RunOutcome::Reject => "reject",
            RunOutcome::Halt => "halt",
            RunOutcome::BudgetExhausted => "budget-exhausted",
        }
    }
}

/// One visited state with the operation applied there (or the outcome on
/// the final record).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub t: usize,
    pub state: DottedSequence,
    pub op: String,
}

impl TraceStep {
    pub fn to_record(&self) -> TraceRecord {
        TraceRecord {
            t: self.t,
            stack: self.state.stack_names(),
            input: self.state.input_names(),
            op: self.op.clone(),
        }
    }
}

/// JSON-lines trace record: `{"t":0,"stack":["S"],"input":["NP"],"op":"..."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub t: usize,
    pub stack: Vec<String>,
    pub input: Vec<String>,
    pub op: String,
}

/// The full run history of [`GeneralizedShift::run`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
    pub outcome: RunOutcome,
}

impl Trace {
    /// Number of rule applications (trace records minus the final one).
    pub fn transitions(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub fn final_state(&self) -> &DottedSequence {
        &self.steps.last().expect("trace is never empty").state
    }

    pub fn records(&self) -> impl Iterator<Item = TraceRecord> + '_ {
        self.steps.iter().map(TraceStep::to_record)
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{:>4}  {}  [{}]", step.t, step.state, step.op)?;
        }
        Ok(())
    }
}
