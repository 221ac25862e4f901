//! Expansion of a dominant monomial into its q-character by node-wise
//! completion with rank-one characters.
//!
//! Terms are processed layer by layer in height. For a term `m` every node
//! `j` carries the multiplicity `s_j(m)` already produced by `j`-strings of
//! higher terms; the coefficient of `m` is `max_j s_j(m)` and every excess
//! `coeff - s_j(m)` spawns a fresh copy of the rank-one character through
//! `m` at node `j`.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::character::TruncatedCharacter;
use crate::cartan::CartanData;
use crate::error::EngineError;
use crate::exec::Exec;
use crate::lweights::{
    avector_to_y, psi_to_y, y_to_psi, AVector, PsiMonomial, SpectralCoord, YMonomial,
};
use crate::rational::{exact_multiple, half, q, Q};

/// Resource limits and execution policy for the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Maximum number of distinct terms an expansion may hold.
    pub term_budget: usize,
    /// Largest KR order tried when searching for a stable limit.
    pub k_ceiling: u32,
    pub exec: Exec,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            term_budget: 1_000_000,
            k_ceiling: 24,
            exec: Exec::default(),
        }
    }
}

impl EngineConfig {
    pub fn with_exec(self, exec: Exec) -> Self {
        EngineConfig { exec, ..self }
    }
}

/// Maximal strings `{a, a+d, ..., a+(L-1)d}` of the positive part of `m` at
/// `node`, as `(a, L)`. The rounds-of-runs decomposition yields strings in
/// general position.
pub(crate) fn strings_at(m: &YMonomial, node: usize, step: Q) -> Vec<(SpectralCoord, u32)> {
    let mut classes: Vec<(SpectralCoord, BTreeMap<i64, u32>)> = Vec::new();
    for (c, e) in m.exps().node_entries(node) {
        if e <= 0 {
            continue;
        }
        let hit = classes.iter_mut().find_map(|(base, pts)| {
            base.offset_to(c)
                .and_then(|d| exact_multiple(&d, &step))
                .map(|n| (n, pts))
        });
        match hit {
            Some((n, pts)) => *pts.entry(n).or_insert(0) += e as u32,
            None => classes.push((c.clone(), BTreeMap::from([(0, e as u32)]))),
        }
    }
    let mut out = Vec::new();
    for (base, mut pts) in classes {
        while !pts.is_empty() {
            let keys: Vec<i64> = pts.keys().copied().collect();
            let mut start = keys[0];
            for w in 0..keys.len() {
                let last = w + 1 == keys.len() || keys[w + 1] != keys[w] + 1;
                if last {
                    let len = (keys[w] - start + 1) as u32;
                    out.push((&base + step * q(start), len));
                    if w + 1 < keys.len() {
                        start = keys[w + 1];
                    }
                }
            }
            for k in keys {
                let c = pts.get_mut(&k).unwrap();
                *c -= 1;
                if *c == 0 {
                    pts.remove(&k);
                }
            }
        }
    }
    out
}

/// Normalized rank-one character of the strings at `node`, truncated at
/// height `limit`, without its leading term.
fn node_character(
    node: usize,
    step: Q,
    strings: &[(SpectralCoord, u32)],
    limit: Option<u32>,
) -> Vec<(AVector, u64)> {
    let mut acc: BTreeMap<AVector, u64> = BTreeMap::from([(AVector::one(), 1)]);
    for (a, len) in strings {
        let first = a - step * half();
        let top = limit.map_or(*len, |l| (*len).min(l));
        let mut chain = vec![AVector::one()];
        for m in 0..top {
            let next = chain[m as usize].mul(&AVector::inv_root(node, &first + step * q(m as i64), 1));
            chain.push(next);
        }
        let mut next: BTreeMap<AVector, u64> = BTreeMap::new();
        for (v, c) in &acc {
            for w in &chain {
                if limit.is_none_or(|l| v.height() + w.height() <= l) {
                    *next.entry(v.mul(w)).or_insert(0) += c;
                }
            }
        }
        acc = next;
    }
    acc.remove(&AVector::one());
    acc.into_iter().collect()
}

type Contribution = (AVector, usize, u64);

fn process(
    cartan: &CartanData,
    top: &YMonomial,
    v: &AVector,
    s: &[u64],
    remaining: Option<u32>,
) -> Result<(u64, Vec<Contribution>), EngineError> {
    let coeff = if v.is_one() {
        1
    } else {
        s.iter().copied().max().unwrap_or(0)
    };
    let m = top.mul(&avector_to_y(cartan, v));
    let mut out = Vec::new();
    if remaining == Some(0) {
        return Ok((coeff, out));
    }
    for j in cartan.nodes() {
        let excess = coeff - s[j];
        if excess == 0 {
            continue;
        }
        if !m.is_node_dominant(j) {
            return Err(EngineError::ExpansionFailure {
                monomial: m.to_string(),
                node: j + 1,
            });
        }
        let strings = strings_at(&m, j, cartan.d_q(j));
        for (w, c) in node_character(j, cartan.d_q(j), &strings, remaining) {
            out.push((v.mul(&w), j, excess * c));
        }
    }
    Ok((coeff, out))
}

/// q-character of the irreducible module with dominant highest l-weight
/// `top`, up to height `bound` (`None` for the complete character).
pub fn fm_expand(
    cartan: &CartanData,
    top: &YMonomial,
    bound: Option<u32>,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    if !top.is_dominant() {
        return Err(EngineError::NonDominant {
            monomial: top.to_string(),
        });
    }
    for (s, _) in top.entries() {
        cartan.check_node(s.node)?;
    }
    let rank = cartan.rank();
    let mut pending: Vec<FxHashMap<AVector, Vec<u64>>> = vec![FxHashMap::default()];
    pending[0].insert(AVector::one(), vec![0; rank]);
    let mut terms: BTreeMap<AVector, u64> = BTreeMap::new();
    let mut h = 0u32;
    while (h as usize) < pending.len() {
        let mut layer: Vec<(AVector, Vec<u64>)> =
            std::mem::take(&mut pending[h as usize]).into_iter().collect();
        layer.sort_by(|a, b| a.0.cmp(&b.0));
        let remaining = bound.map(|b| b - h);
        let results = config
            .exec
            .map(&layer, |(v, s)| process(cartan, top, v, s, remaining));
        let mut queued = 0usize;
        for ((v, _), r) in layer.into_iter().zip(results) {
            let (coeff, contributions) = r?;
            terms.insert(v, coeff);
            for (w, j, c) in contributions {
                let hw = w.height() as usize;
                if pending.len() <= hw {
                    pending.resize_with(hw + 1, FxHashMap::default);
                }
                pending[hw].entry(w).or_insert_with(|| vec![0; rank])[j] += c;
            }
        }
        for p in &pending[h as usize + 1..] {
            queued += p.len();
        }
        if terms.len() + queued > config.term_budget {
            return Err(EngineError::BudgetExceeded {
                budget: config.term_budget,
                height: h,
            });
        }
        h += 1;
    }
    TruncatedCharacter::from_terms(y_to_psi(cartan, top), terms, bound)
}

/// [`fm_expand`] for a highest l-weight given in the Psi basis.
pub fn fm_expand_psi(
    cartan: &CartanData,
    top: &PsiMonomial,
    bound: Option<u32>,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    let y = psi_to_y(cartan, top).ok_or_else(|| EngineError::NonDominant {
        monomial: top.to_string(),
    })?;
    fm_expand(cartan, &y, bound, config)
}
