//! Deterministic identity testing for read-once oblivious algebraic
//! branching programs over prime fields, and for the models that reduce to
//! them: set-multilinear ABPs, non-commutative ABPs, and (semi-)diagonal
//! depth-4 circuits.

pub mod diagonal;
pub mod error;
pub mod field;
pub mod format;
pub mod generator;
pub mod linalg;
pub mod noncomm;
pub mod pit;
pub mod roabp;

pub use error::{Error, Result};
pub use field::Field;
