//! Fibonacci numeration toolkit.
//!
//! The crate is organised in five layers:
//!
//! * [`numeration`]: exact integer-side ground truth: Fibonacci numbers,
//!   Beatty floors, the Zeckendorf and Chung-Graham codecs, shift operators
//!   and brute-force set membership oracles.
//! * [`automata`]: a generic multi-track DFA engine: regex compilation,
//!   boolean combinations, projection, minimization and serialization.
//! * [`relations`]: synthesis of synchronized relation automata: validity
//!   automata, a linear-equation builder and a library of named builtins.
//! * [`logic`]: a Walnut-style first-order language compiled to automata.
//! * [`paperlab`]: executable re-verification of a catalogue of theorems
//!   about these representations, by brute-force oracle and by the decision
//!   engine.

pub mod automata;
pub mod logic;
pub mod numeration;
pub mod paperlab;
pub mod relations;
