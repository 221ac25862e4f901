//! The TQ relation at the level of normalized characters:
//! `nchi(M^{(i)}_{k,x}) = (1 + A^{-1}_{i,x}) prod_{c_ij<0} nchi(SL(Psi_{j,x+d_ij} / Psi_{j,x+d_ij-k d_i}))`.
//!
//! The right-hand side is computed once with `k` an indeterminate. The
//! left-hand side can only be expanded for concrete `k in 6Z`; it is obtained
//! by two routes (direct expansion of the highest l-weight, and the Demazure
//! character divided by the KR factors of the complementary weight). Results
//! at different `k` are lifted back to the indeterminate by renaming the
//! coordinates near `x - k d_i`, and compared with each other and with the
//! symbolic right-hand side.

use std::collections::BTreeSet;

use crate::cartan::CartanData;
use crate::characters::{
    asymptotic_char, char_mul_with, char_product, demazure_char_via_ses, divide, fm_expand_psi,
    kr_char, m_weight, n_factors, two_dim_factor, CharacterReport, EngineConfig,
    TruncatedCharacter,
};
use crate::error::EngineError;
use crate::lweights::{AVector, Site, SpectralCoord};
use crate::rational::Q;

/// Name of the indeterminate standing for generic `k`.
pub const K_SYMBOL: &str = "k";

#[derive(Clone, Debug)]
pub struct TqCase {
    pub k: u32,
    /// Direct expansion against the right-hand side at this `k`.
    pub direct: CharacterReport,
    /// Demazure quotient against the right-hand side at this `k`.
    pub via_ses: CharacterReport,
    /// The two routes against each other.
    pub routes: CharacterReport,
    /// Direct route lifted to symbolic `k` against the symbolic side.
    pub lifted: CharacterReport,
}

#[derive(Clone, Debug)]
pub struct TqReport {
    pub pass: bool,
    pub rhs_symbolic: TruncatedCharacter,
    pub cases: Vec<TqCase>,
    /// Lifted direct routes of consecutive `k` values against each other.
    pub proxy: Vec<(u32, u32, CharacterReport)>,
}

/// `(1 + A^{-1}_{i,x}) prod_j nchi(SL(...))` with top `m^{(i)}_{k,x}`.
pub fn tq_rhs(
    cartan: &CartanData,
    i: usize,
    k: &SpectralCoord,
    x: &SpectralCoord,
    n: u32,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    let di = cartan.d_q(i);
    let mut factors = vec![two_dim_factor(i, x).truncate(n)];
    for j in cartan.neighbours(i) {
        let num = x + cartan.dsym(i, j);
        let den = &num - &(k * di);
        factors.push(asymptotic_char(cartan, j, &num, &den, n, config)?);
    }
    let prod = char_product(config.exec, &factors);
    Ok(prod.with_top(m_weight(cartan, i, k, x)))
}

/// Route R1: expand `m^{(i)}_{k,x}` directly.
pub fn tq_lhs_direct(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    n: u32,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    fm_expand_psi(cartan, &m_weight(cartan, i, &SpectralCoord::int(k as i64), x), Some(n), config)
}

/// Route R2: `chi(D^{(i,1)}_{k,x}) / prod chi(KR)` over the factors of
/// `n^{(i)}_{k,x}`.
pub fn tq_lhs_via_ses(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    n: u32,
    config: &EngineConfig,
) -> Result<TruncatedCharacter, EngineError> {
    let d = demazure_char_via_ses(cartan, i, 1, k, x, Some(n), config)?;
    let factors = n_factors(cartan, i, k, x)?
        .into_iter()
        .map(|(j, l, s)| kr_char(cartan, j, l, &s, Some(n), config))
        .collect::<Result<Vec<_>, _>>()?;
    divide(&d, &char_product(config.exec, &factors))
}

/// Coordinates of the symbolic side split by the lattice they live on:
/// offsets from `x` and offsets from `x - k d_i`.
struct Dictionary {
    near: BTreeSet<(usize, Q)>,
    far: BTreeSet<(usize, Q)>,
}

impl Dictionary {
    fn new(rhs: &TruncatedCharacter, x: &SpectralCoord, far_base: &SpectralCoord) -> Self {
        let mut near = BTreeSet::new();
        let mut far = BTreeSet::new();
        for v in rhs.terms().keys() {
            for (s, _) in v.entries() {
                if let Some(r) = x.offset_to(&s.coord) {
                    near.insert((s.node, r));
                } else if let Some(r) = far_base.offset_to(&s.coord) {
                    far.insert((s.node, r));
                }
            }
        }
        Dictionary { near, far }
    }

    fn lift(
        &self,
        v: &AVector,
        x: &SpectralCoord,
        concrete_far: &SpectralCoord,
        symbolic_far: &SpectralCoord,
    ) -> AVector {
        v.map_sites(|s| {
            let near = x
                .offset_to(&s.coord)
                .is_some_and(|r| self.near.contains(&(s.node, r)));
            match concrete_far.offset_to(&s.coord) {
                Some(r) if !near && self.far.contains(&(s.node, r)) => {
                    Site::new(s.node, symbolic_far + r)
                }
                _ => s.clone(),
            }
        })
    }
}

fn lift_character(
    ch: &TruncatedCharacter,
    dict: &Dictionary,
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
) -> Result<TruncatedCharacter, EngineError> {
    let di = cartan.d_q(i);
    let ksym = SpectralCoord::symbol(K_SYMBOL);
    let concrete_far = x - &SpectralCoord::rational(di * Q::from(k as i64));
    let symbolic_far = x - &(&ksym * di);
    let top = if ch.top() == &m_weight(cartan, i, &SpectralCoord::int(k as i64), x) {
        m_weight(cartan, i, &ksym, x)
    } else {
        ch.top().clone()
    };
    TruncatedCharacter::from_terms(
        top,
        ch.terms()
            .iter()
            .map(|(v, c)| (dict.lift(v, x, &concrete_far, &symbolic_far), *c)),
        ch.height_bound(),
    )
}

pub fn verify_tq(
    cartan: &CartanData,
    i: usize,
    x: &SpectralCoord,
    ks: &[u32],
    n: u32,
    config: &EngineConfig,
) -> Result<TqReport, EngineError> {
    cartan.check_node(i)?;
    if x.symbols().any(|s| s == K_SYMBOL) {
        return Err(EngineError::InvalidParameters(format!(
            "the indeterminate '{K_SYMBOL}' is reserved for generic k"
        )));
    }
    if ks.is_empty() || ks.iter().any(|k| *k == 0 || k % 6 != 0) {
        return Err(EngineError::InvalidParameters(
            "TQ routes need k among positive multiples of 6".into(),
        ));
    }
    let ksym = SpectralCoord::symbol(K_SYMBOL);
    let rhs_symbolic = tq_rhs(cartan, i, &ksym, x, n, config)?;
    let far_base = x - &(&ksym * cartan.d_q(i));
    let dict = Dictionary::new(&rhs_symbolic, x, &far_base);
    let mut cases = Vec::new();
    let mut lifted_direct = Vec::new();
    for &k in ks {
        let kc = SpectralCoord::int(k as i64);
        let rhs = rhs_symbolic.substitute(K_SYMBOL, &kc);
        let direct = tq_lhs_direct(cartan, i, k, x, n, config)?;
        let via_ses = tq_lhs_via_ses(cartan, i, k, x, n, config)?;
        let lifted = lift_character(&direct, &dict, cartan, i, k, x)?;
        lifted_direct.push((k, lifted.clone()));
        cases.push(TqCase {
            k,
            direct: CharacterReport::compare(direct.clone(), rhs.clone()),
            via_ses: CharacterReport::compare(via_ses.clone(), rhs),
            routes: CharacterReport::compare(direct, via_ses),
            lifted: CharacterReport::compare(lifted, rhs_symbolic.clone()),
        });
    }
    let proxy: Vec<(u32, u32, CharacterReport)> = lifted_direct
        .windows(2)
        .map(|w| (w[0].0, w[1].0, CharacterReport::compare(w[0].1.clone(), w[1].1.clone())))
        .collect();
    let pass = cases
        .iter()
        .all(|c| c.direct.pass && c.via_ses.pass && c.routes.pass && c.lifted.pass)
        && proxy.iter().all(|p| p.2.pass);
    Ok(TqReport {
        pass,
        rhs_symbolic,
        cases,
        proxy,
    })
}

/// Check the product of the two prime factors against the Demazure
/// character: `L(m n) = L(m) (x) L(n)` for `k in 6Z`.
pub fn verify_factorization(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
    n: u32,
    config: &EngineConfig,
) -> Result<CharacterReport, EngineError> {
    cartan.check_node(i)?;
    if k == 0 || !k.is_multiple_of(6) {
        return Err(EngineError::InvalidParameters(
            "the factorization is stated for k among positive multiples of 6".into(),
        ));
    }
    let d = demazure_char_via_ses(cartan, i, 1, k, x, Some(n), config)?;
    let m = tq_lhs_direct(cartan, i, k, x, n, config)?;
    let mut prod = m;
    for (j, l, s) in n_factors(cartan, i, k, x)? {
        prod = char_mul_with(config.exec, &prod, &kr_char(cartan, j, l, &s, Some(n), config)?);
    }
    Ok(CharacterReport::compare(d, prod))
}
