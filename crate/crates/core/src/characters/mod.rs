//! Truncated q-characters and the module families built from them.

pub mod asymptotic;
mod cache;
pub mod character;
pub mod division;
pub mod fm;
pub mod oracle;
pub mod ses;
pub mod weights;

pub use asymptotic::{asymptotic_char, kr_char, prefundamental_char, stabilize, Sign, Stabilized};
pub use character::{char_mul, char_mul_with, char_product, CharacterReport, Mismatch, TruncatedCharacter};
pub use division::divide;
pub use fm::{fm_expand, fm_expand_psi, EngineConfig};
pub use oracle::{sl2_asymptotic_char, sl2_kr_char};
pub use ses::{demazure_char_direct, demazure_char_via_ses};
pub use weights::{
    demazure_chain, demazure_weight, demazure_weight_closed, kr_weight, kr_weight_y, m_factors,
    m_weight, n_factors, n_weight, two_dim_factor,
};
