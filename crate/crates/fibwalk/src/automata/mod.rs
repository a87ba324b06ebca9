//! Generic multi-track finite-automaton engine.
//!
//! Automata read tuples of digits, one per track, least significant digit
//! first. Tuple symbols are flattened to a single mixed-radix index so that
//! transition tables look the same for 1-, 2- and 3-track automata.

mod alphabet;
mod dfa;
mod nfa;
mod regex;
mod textfmt;

pub use alphabet::Alphabet;
pub use dfa::{BoolOp, Dfa};
pub use nfa::Nfa;
pub use regex::{regex_parse, regex_to_dfa, RegexAst};
pub use textfmt::{deserialize, serialize, to_dot};

use std::sync::atomic::{AtomicUsize, Ordering};

use thiserror::Error;

/// Numeration system attached to a track when integers are bound to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumSys {
    Zeck,
    Cg,
}

impl NumSys {
    /// Largest digit a representation in this system uses.
    pub fn max_digit(self) -> u8 {
        match self {
            NumSys::Zeck => 1,
            NumSys::Cg => 2,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutomataError {
    #[error("alphabet mismatch between operands")]
    AlphabetMismatch,
    #[error("operation needs at least two tracks")]
    SingleTrack,
    #[error("track index {0} out of range")]
    BadTrack(usize),
    #[error("state budget exceeded ({0} states)")]
    StateBudget(usize),
    #[error("regex syntax error at position {pos}: {msg}")]
    RegexSyntax { pos: usize, msg: String },
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}

static STATE_BUDGET: AtomicUsize = AtomicUsize::new(1_000_000);

/// Maximum number of states any single construction may allocate.
pub fn state_budget() -> usize {
    STATE_BUDGET.load(Ordering::Relaxed)
}

pub fn set_state_budget(limit: usize) {
    STATE_BUDGET.store(limit, Ordering::Relaxed);
}

pub(crate) fn check_budget(states: usize) -> Result<(), AutomataError> {
    let limit = state_budget();
    if states > limit {
        Err(AutomataError::StateBudget(limit))
    } else {
        Ok(())
    }
}
