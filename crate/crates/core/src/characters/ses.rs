//! Demazure-type characters from the short exact sequence
//! `0 -> D_{k,(k+1)d_i} -> W_{k,0} (x) W_{k+t,d_i} -> W_{k-1,d_i} (x) W_{k+t+1,0} -> 0`.

use std::collections::BTreeMap;

use super::asymptotic::kr_char;
use super::character::{char_mul_with, TruncatedCharacter};
use super::fm::{fm_expand_psi, EngineConfig};
use super::weights::{demazure_chain, demazure_weight};
use crate::cartan::CartanData;
use crate::error::EngineError;
use crate::lweights::SpectralCoord;
use crate::rational::q;

fn check_kt(k: u32) -> Result<(), EngineError> {
    if k == 0 {
        return Err(EngineError::InvalidParameters("Demazure modules need k >= 1".into()));
    }
    Ok(())
}

/// The two tensor products of the sequence at the base placement, truncated
/// at `bound` relative to their common top.
pub fn ses_products(
    cartan: &CartanData,
    i: usize,
    t: u32,
    k: u32,
    bound: Option<u32>,
    config: &EngineConfig,
) -> Result<(TruncatedCharacter, TruncatedCharacter), EngineError> {
    check_kt(k)?;
    let zero = SpectralCoord::zero();
    let d = SpectralCoord::rational(cartan.d_q(i));
    let kr = |k: u32, x: &SpectralCoord| kr_char(cartan, i, k, x, bound, config);
    let middle = char_mul_with(config.exec, &kr(k, &zero)?, &kr(k + t, &d)?);
    let right = char_mul_with(config.exec, &kr(k - 1, &d)?, &kr(k + t + 1, &zero)?);
    Ok((middle, right))
}

/// `chi(D^{(i,t)}_{k,x})` as the difference of the two products, up to
/// height `n` (`None` for the complete character).
pub fn demazure_char_via_ses(
    cartan: &CartanData,
    i: usize,
    t: u32,
    k: u32,
    x: &SpectralCoord,
    n: Option<u32>,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    let bound = n.map(|n| n + k);
    let (middle, right) = ses_products(cartan, i, t, k, bound, config)?;
    if middle.top() != right.top() {
        return Err(EngineError::TopMismatch(format!(
            "{} vs {}",
            middle.top(),
            right.top()
        )));
    }
    let base = SpectralCoord::rational(cartan.d_q(i) * q(k as i64 + 1));
    let chain = demazure_chain(cartan, i, k, &base);
    let context = || format!("Demazure difference for node {} (k={k}, t={t})", i + 1);
    let mut diff: BTreeMap<_, i64> = middle
        .terms()
        .iter()
        .map(|(v, c)| (v.clone(), *c as i64))
        .collect();
    for (v, c) in right.terms() {
        *diff.entry(v.clone()).or_insert(0) -= *c as i64;
    }
    let mut terms = Vec::new();
    for (v, c) in diff {
        if c == 0 {
            continue;
        }
        if c < 0 {
            return Err(EngineError::NegativeCoefficient {
                context: context(),
                avector: v.to_string(),
                coeff: c,
            });
        }
        let rel = v.checked_div(&chain).ok_or_else(|| EngineError::NegativeCoefficient {
            context: format!("{}: term outside the Demazure cone", context()),
            avector: v.to_string(),
            coeff: c,
        })?;
        terms.push((rel, c as u64));
    }
    let top = middle.lweight(cartan, &chain);
    debug_assert_eq!(top, demazure_weight(cartan, i, t, k, &base));
    let ch = TruncatedCharacter::from_terms(top, terms, n)?;
    Ok(ch.shift(&(x - &base)))
}

/// The same character obtained by expanding the Demazure weight directly.
pub fn demazure_char_direct(
    cartan: &CartanData,
    i: usize,
    t: u32,
    k: u32,
    x: &SpectralCoord,
    n: Option<u32>,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    check_kt(k)?;
    fm_expand_psi(cartan, &demazure_weight(cartan, i, t, k, x), n, config)
}
