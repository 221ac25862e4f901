//! The monomial calculus: spectral coordinates, Psi-, Y- and A-monomials,
//! their conversions, dominance and right-negativity, and the text grammar.

pub mod coord;
pub mod expand;
pub mod monomial;
pub mod text;

pub use coord::SpectralCoord;
pub use expand::{
    avector_to_psi, avector_to_y, expand_a_to_psi, expand_a_to_y, expand_y_to_psi, psi_to_y,
    weight_projection, y_to_psi, SymbolicWeight,
};
pub use monomial::{AVector, PsiMonomial, Site, SparseExps, YMonomial};
pub use text::{parse_avector, parse_psi, parse_y};
