//! Support constraints on l-weights: the KR skeleton and the
//! Demazure / prime-Demazure cones.

use serde::Serialize;

use crate::cartan::CartanData;
use crate::characters::{demazure_char_via_ses, kr_char, EngineConfig, TruncatedCharacter};
use crate::error::EngineError;
use crate::lweights::{AVector, SpectralCoord};
use crate::rational::{half, q, qr, Q};

use super::tq::tq_lhs_direct;

#[derive(Clone, Debug, Serialize)]
pub struct SupportReport {
    pub pass: bool,
    pub checked_terms: usize,
    pub violations: Vec<String>,
}

impl SupportReport {
    fn from_violations(checked_terms: usize, violations: Vec<String>) -> Self {
        SupportReport {
            pass: violations.is_empty(),
            checked_terms,
            violations,
        }
    }

    pub fn merge(reports: impl IntoIterator<Item = SupportReport>) -> SupportReport {
        let mut checked = 0;
        let mut violations = Vec::new();
        for r in reports {
            checked += r.checked_terms;
            violations.extend(r.violations);
        }
        Self::from_violations(checked, violations)
    }
}

/// Offsets `z - x` of the set `Z^{(ii')}_{k,x}` of admissible second
/// factors in non-chain KR l-weights.
pub fn denominator_offsets(cartan: &CartanData, i: usize, i2: usize, k: u32) -> Vec<Q> {
    match cartan.c(i, i2) {
        0 | 2 => vec![],
        -1 => vec![cartan.dsym(i, i2)],
        _ if k == 1 => vec![cartan.dsym(i, i2)],
        -2 => vec![q(-1), q(0)],
        -3 if k == 2 => vec![qr(-3, 2), qr(-1, 2)],
        -3 => vec![qr(-3, 2), qr(-1, 2), half()],
        c => unreachable!("Cartan entry {c}"),
    }
}

fn chain(cartan: &CartanData, i: usize, len: u32, x: &SpectralCoord) -> AVector {
    let d = cartan.d_q(i);
    (0..len).fold(AVector::one(), |acc, m| {
        acc.mul(&AVector::inv_root(i, x + d * q(m as i64), 1))
    })
}

/// The KR skeleton of `W^{(i)}_{k,x}` up to height `n`: the multiplicity-one
/// chain of `A^{-1}_{i,x+m d_i}`, and every other term divisible by
/// `A^{-1}_{i,x} A^{-1}_{i',z}` with `z` in the denominator table. All ledger
/// coordinates must lie in `x + Z/2`.
pub fn check_kr_skeleton(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    n: u32,
    config: &EngineConfig,
) -> Result<SupportReport, EngineError> {
    let ch = kr_char(cartan, i, k, x, Some(n), config)?;
    Ok(kr_skeleton_of(cartan, i, k, x, &ch))
}

pub fn kr_skeleton_of(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    ch: &TruncatedCharacter,
) -> SupportReport {
    let n = ch.height_bound().unwrap_or_else(|| ch.max_height());
    let mut violations = Vec::new();
    let chains: Vec<AVector> = (0..=k.min(n)).map(|l| chain(cartan, i, l, x)).collect();
    for (l, c) in chains.iter().enumerate() {
        if ch.coeff(c) != 1 {
            violations.push(format!(
                "chain of length {l} has multiplicity {} instead of 1",
                ch.coeff(c)
            ));
        }
    }
    let first = AVector::inv_root(i, x.clone(), 1);
    for v in ch.terms().keys() {
        if !v.in_half_lattice_of(x) {
            violations.push(format!("{v} leaves x + Z/2"));
        }
        if chains.contains(v) {
            continue;
        }
        let admissible = v.contains(i, x)
            && cartan.nodes().filter(|j| *j != i).any(|j| {
                denominator_offsets(cartan, i, j, k).iter().any(|z| {
                    let site = x + *z;
                    let rest = v.checked_div(&first);
                    rest.is_some_and(|r| r.contains(j, &site))
                })
            });
        if !admissible {
            violations.push(format!("{v} is neither a chain nor in the table cone"));
        }
    }
    SupportReport::from_violations(ch.len(), violations)
}

/// The Demazure cone for `t = 1`: every non-top term is `A^{-1}_{i,x}` or
/// divisible by some `A^{-1}_{i',x-k d_i+z}` with `(i' = i, z = -d_i)` or
/// `(c_{ii'} < 0, -3/2 <= z <= 1/2, z in Z/2)`.
pub fn demazure_support_of(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    ch: &TruncatedCharacter,
) -> SupportReport {
    let di = cartan.d_q(i);
    let base = x - &SpectralCoord::rational(di * q(k as i64));
    let mut allowed = vec![(i, &base - &SpectralCoord::rational(di))];
    for j in cartan.neighbours(i) {
        for twice in -3..=1 {
            allowed.push((j, &base + qr(twice, 2)));
        }
    }
    cone_check(ch, i, x, &allowed)
}

/// The prime-Demazure cone: every non-top term is `A^{-1}_{i,x}` or
/// divisible by some `A^{-1}_{j,x+d_ij-k d_i}` with `c_{ij} < 0`.
pub fn m_support_of(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    ch: &TruncatedCharacter,
) -> SupportReport {
    let shift = SpectralCoord::rational(cartan.d_q(i) * q(k as i64));
    let allowed: Vec<(usize, SpectralCoord)> = cartan
        .neighbours(i)
        .map(|j| (j, &(x + cartan.dsym(i, j)) - &shift))
        .collect();
    cone_check(ch, i, x, &allowed)
}

fn cone_check(
    ch: &TruncatedCharacter,
    i: usize,
    x: &SpectralCoord,
    allowed: &[(usize, SpectralCoord)],
) -> SupportReport {
    let lone = AVector::inv_root(i, x.clone(), 1);
    let mut violations = Vec::new();
    for v in ch.terms().keys() {
        if v.is_one() || *v == lone {
            continue;
        }
        if !v.in_half_lattice_of(x) {
            violations.push(format!("{v} leaves x + Z/2"));
            continue;
        }
        if !allowed.iter().any(|(j, z)| v.contains(*j, z)) {
            violations.push(v.to_string());
        }
    }
    SupportReport::from_violations(ch.len(), violations)
}

pub fn check_demazure_support(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    n: Option<u32>,
    config: &EngineConfig,
) -> Result<SupportReport, EngineError> {
    let ch = demazure_char_via_ses(cartan, i, 1, k, x, n, config)?;
    Ok(demazure_support_of(cartan, i, k, x, &ch))
}

pub fn check_m_support(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    n: u32,
    config: &EngineConfig,
) -> Result<SupportReport, EngineError> {
    if k == 0 || !k.is_multiple_of(6) {
        return Err(EngineError::InvalidParameters(
            "the prime-Demazure cone is stated for k among positive multiples of 6".into(),
        ));
    }
    let ch = tq_lhs_direct(cartan, i, k, x, n, config)?;
    Ok(m_support_of(cartan, i, k, x, &ch))
}
