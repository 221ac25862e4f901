//! KR characters, their stable limits, and the asymptotic and
//! prefundamental characters built from those limits.

use super::cache::{self, Key};
use super::character::TruncatedCharacter;
use super::fm::{fm_expand, EngineConfig};
use super::weights::{kr_weight, kr_weight_y};
use crate::cartan::CartanData;
use crate::error::EngineError;
use crate::lweights::{PsiMonomial, Site, SpectralCoord};

/// q-character of `W^{(i)}_{k,x}` up to height `bound`.
pub fn kr_char(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    bound: Option<u32>,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    cartan.check_node(i)?;
    let key = Key::Kr {
        ty: cartan.lie_type(),
        node: i,
        k,
        bound,
        budget: config.term_budget,
    };
    let at_zero = match cache::get(&key) {
        Some(hit) => hit,
        None => {
            let zero = SpectralCoord::zero();
            let ch = fm_expand(cartan, &kr_weight_y(cartan, i, k, &zero), bound, config)?;
            cache::put(key, (ch, k))
        }
    };
    let ch = at_zero.0.shift(x);
    debug_assert_eq!(ch.top(), &kr_weight(cartan, i, k, x));
    Ok(ch)
}

/// A stable normalized KR character and the first order `k` at which
/// `nchi(W_k) = nchi(W_{k+1})` up to the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilized {
    pub character: TruncatedCharacter,
    pub index: u32,
}

/// Limit of `nchi_N(W^{(i)}_{k,x})` as `k` grows. The returned character has
/// the identity as its top.
pub fn stabilize(
    cartan: &CartanData,
    i: usize,
    x: &SpectralCoord,
    n: u32,
    config: &EngineConfig,
) -> Result<Stabilized, EngineError> {
    cartan.check_node(i)?;
    let key = Key::Stable {
        ty: cartan.lie_type(),
        node: i,
        bound: n,
        budget: config.term_budget,
        ceiling: config.k_ceiling,
    };
    let hit = match cache::get(&key) {
        Some(hit) => hit,
        None => {
            let zero = SpectralCoord::zero();
            let normalized = |k: u32| -> Result<TruncatedCharacter, EngineError> {
                Ok(kr_char(cartan, i, k, &zero, Some(n), config)?.with_top(PsiMonomial::identity()))
            };
            let mut prev = normalized(0)?;
            let mut found = None;
            for k in 0..config.k_ceiling {
                let next = normalized(k + 1)?;
                if next == prev {
                    found = Some((prev, k));
                    break;
                }
                prev = next;
            }
            let value = found.ok_or(EngineError::Stabilization {
                node: i + 1,
                height: n,
                ceiling: config.k_ceiling,
            })?;
            cache::put(key, value)
        }
    };
    Ok(Stabilized {
        character: hit.0.shift(x),
        index: hit.1,
    })
}

/// Character of the asymptotic module with highest l-weight
/// `Psi_{i,y}/Psi_{i,x}`.
pub fn asymptotic_char(
    cartan: &CartanData,
    i: usize,
    y: &SpectralCoord,
    x: &SpectralCoord,
    n: u32,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    let s = stabilize(cartan, i, x, n, config)?;
    let top = PsiMonomial::from_entries([(Site::new(i, y.clone()), 1), (Site::new(i, x.clone()), -1)]);
    Ok(s.character.with_top(top))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// Character of the prefundamental module `L^{+-}_{i,x}`.
pub fn prefundamental_char(
    cartan: &CartanData,
    i: usize,
    x: &SpectralCoord,
    sign: Sign,
    n: u32,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    cartan.check_node(i)?;
    match sign {
        Sign::Positive => Ok(TruncatedCharacter::monomial(PsiMonomial::single(i, x.clone(), 1))),
        Sign::Negative => {
            let s = stabilize(cartan, i, x, n, config)?;
            Ok(s.character.with_top(PsiMonomial::single(i, x.clone(), -1)))
        }
    }
}
