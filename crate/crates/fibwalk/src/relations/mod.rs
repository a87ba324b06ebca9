//! Synthesis of the synchronized relation automata the verification suite
//! relies on: numeration-validity automata, a linear-equation relation
//! builder, the cross-system conversion relation and a library of named
//! builtins.

mod builtins;
mod linear;
mod valid;

pub use builtins::{builtin, builtin_env, builtin_names, NamedAutomaton};
pub use linear::{linear_eq, linear_eq_with_margin, LinearRelation};
pub use valid::{cg_valid, validity, zeck_valid};

use thiserror::Error;

use crate::automata::AutomataError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelationsError {
    #[error("unknown builtin automaton '{0}'")]
    UnknownName(String),
    #[error("linear relation needs at least one nonzero coefficient")]
    NoCoefficients,
    #[error("builtin formula failed to compile: {0}")]
    Formula(String),
    #[error(transparent)]
    Automata(#[from] AutomataError),
}
