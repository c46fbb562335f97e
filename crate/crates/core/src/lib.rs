//! Commutativity graphs of concretely represented groups, together with
//! re-checkable certificates for the hypotheses of two theorems:
//! a group generated by infinite-order elements whose commutativity graph
//! is connected and carries a rank-2 abelian edge is not strongly
//! relatively hyperbolic, and has one end.

pub mod autfree;
pub mod catalog;
pub mod certify;
pub mod commgraph;
pub mod emit;
pub mod engine;
pub mod error;
pub mod matrix;
pub mod probe;
pub mod thompson;

pub use engine::{commutator, commutes, power, relation_search, ElementKey, EngineId, Group, GroupElement};
pub use error::{Error, Result};
