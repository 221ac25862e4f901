//! Verifiers for the three-term identities, support constraints and the
//! translation to the multiplicative convention.

pub mod multiplicative;
pub mod spec;
pub mod support;
pub mod tq;
pub mod tsystem;
pub mod two_term;

pub use multiplicative::{
    additive_tq, quantum_tq, to_multiplicative, verify_tq_translation, MultiplicativeMonomial,
    ThreeTerm, TranslationReport,
};
pub use spec::{run_spec, run_suite, IdentityKind, IdentitySpec, Outcome, SuiteEntry};
pub use support::{
    check_demazure_support, check_kr_skeleton, check_m_support, demazure_support_of,
    kr_skeleton_of, m_support_of, SupportReport,
};
pub use tq::{tq_lhs_direct, tq_lhs_via_ses, tq_rhs, verify_factorization, verify_tq, TqReport};
pub use tsystem::verify_tsystem;
pub use two_term::{verify_two_term, TwoTermParams};
