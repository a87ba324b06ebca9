//! Exact integer-side ground truth.
//!
//! Everything in this module is computed directly from integer arithmetic
//! and digit strings; nothing here depends on the automata engine. The
//! automata and logic layers are checked *against* these functions.

mod beatty;
mod fib;
mod gamma;
mod quad;
mod sets;
mod shift;
mod words;

pub use beatty::{floor_inv_phi, floor_phi, floor_phi2, isqrt};
pub use fib::{fib, fib_i64, fib_u64, FibCache};
pub use gamma::{gamma_b, GammaForms};
pub use quad::QuadExact;
pub use sets::{enumerate_members, member, sc, Subclass, SetId};
pub use shift::{parity_class, shift_cg2, shift_f, shift_f2, Parity};
pub use words::{
    cg_decode, cg_encode, zeck_decode, zeck_encode, CgWord, WordError, ZeckWord,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumerationError {
    /// Zero has an all-zero representation and no least Fibonacci index.
    #[error("0 belongs to neither F_even nor F_odd")]
    ZeroHasNoParity,
    /// A prefix word for `R_b` or `gamma_b` contained two adjacent ones.
    #[error("prefix word contains adjacent 1s")]
    AdjacentOnes,
    /// A set identifier was constructed with an out-of-range index.
    #[error("invalid set index: {0}")]
    BadSetIndex(String),
}
