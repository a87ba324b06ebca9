//! First-order formulas over natural numbers read in Fibonacci-based
//! numeration systems, compiled to synchronized automata.
//!
//! Atoms are linear comparisons and applications of named relation
//! automata; connectives map to automaton products and complement,
//! quantifiers to track projection. A closed formula compiles all the way
//! down to a truth value.

mod compile;
mod session;
mod syntax;

pub use compile::{compile_formula, eval_closed, Compiled, FormulaAutomaton};
pub use session::{LineOutcome, Session};
pub use syntax::{parse_formula, CmpOp, Formula, LinearTerm, ParsedFormula};

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::automata::AutomataError;
use crate::relations::{NamedAutomaton, RelationsError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LogicError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown relation '${0}'")]
    UnknownAutomaton(String),
    #[error("'${name}' takes {expected} argument(s), got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("variable '{0}' is used in two different numeration systems")]
    SystemClash(String),
    #[error("variable '{0}' is bound twice")]
    Rebound(String),
    #[error("formula has free variables: {0}")]
    NotClosed(String),
    #[error("formula has no free variables")]
    NotRelation,
    #[error("bad session line: {0}")]
    BadLine(String),
    #[error(transparent)]
    Automata(#[from] AutomataError),
    #[error(transparent)]
    Relations(#[from] RelationsError),
}

/// Named relation automata visible to `$name(...)` applications.
#[derive(Debug, Clone, Default)]
pub struct Environment {
    map: HashMap<String, Arc<NamedAutomaton>>,
}

impl Environment {
    pub fn new() -> Self {
        Environment::default()
    }

    pub fn define(&mut self, name: &str, auto: Arc<NamedAutomaton>) {
        self.map.insert(name.to_string(), auto);
    }

    pub fn get(&self, name: &str) -> Option<&Arc<NamedAutomaton>> {
        self.map.get(name)
    }

    pub fn names(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.map.keys().map(String::as_str).collect();
        v.sort_unstable();
        v
    }
}
