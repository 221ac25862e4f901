//! Exact l-weight and q-character calculus for Yangians of finite-type
//! simple Lie algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`cartan`] holds the Cartan data of every finite type together with
//!   exact weight/root lattice arithmetic.
//! * [`lweights`] is the monomial calculus: spectral coordinates with formal
//!   indeterminates, Psi/Y/A monomials, weight projection, dominance and
//!   right-negativity, and the text grammar.
//! * [`characters`] implements truncated q-characters, the expansion engine
//!   for dominant monomials and the named families of modules (KR,
//!   Demazure-type, prime Demazure, asymptotic, prefundamental).
//! * [`identities`] verifies the three-term identities at character level and
//!   translates additive data to the multiplicative (quantum affine)
//!   convention.
//! * [`sl2_explicit`] builds exact matrix realisations of the rank-one
//!   modules and checks the defining relations.
//!
//! Spectral parameters are normalised with `hbar = 1` throughout.

pub mod cartan;
pub mod characters;
pub mod error;
pub mod exec;
pub mod identities;
pub mod lweights;
pub mod rational;
pub mod sl2_explicit;

pub use cartan::{CartanData, LieType, RootVector, Series, Weight};
pub use characters::{CharacterReport, EngineConfig, TruncatedCharacter};
pub use error::{EngineError, ParseError};
pub use exec::Exec;
pub use lweights::{AVector, PsiMonomial, Site, SpectralCoord, YMonomial};
