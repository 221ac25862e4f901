//! Exact matrix realisations of rank-one Yangian modules.
//!
//! [`build_module`] writes down the action of `x^+_n`, `x^-_n` and `xi_n`
//! on the basis `v_0, v_1, ...` of a module with highest l-weight
//! `Psi_{x+k}/Psi_x`, either the finite KR module (`k` a non-negative
//! integer) or a truncation of the infinite one. [`check_relations`] tests
//! the defining relations by exact matrix arithmetic, and [`extract_qchar`]
//! reads the q-character back off the diagonal `xi` action.

mod extract;
mod matrix;
mod module;
mod relations;
mod three_term;

pub use extract::{extract_qchar, state_lweight, MIN_MODES_FOR_EXTRACTION};
pub use matrix::{BigQ, Matrix};
pub use module::{build_module, Sl2Kind, Sl2Module, SAFE_MARGIN};
pub use relations::{check_relations, Relation, RelationFailure, RelationReport};
pub use three_term::{sl2_three_term_symbolic, verify_sl2_three_term};
