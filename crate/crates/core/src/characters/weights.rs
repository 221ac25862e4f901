//! Highest l-weights of the module families: KR, Demazure-type and the
//! prime factors `m`, `n`.

use super::character::TruncatedCharacter;
use crate::cartan::CartanData;
use crate::error::EngineError;
use crate::lweights::{
    avector_to_psi, AVector, PsiMonomial, Site, SpectralCoord, YMonomial,
};
use crate::rational::{half, q, Q};

fn ratio(node: usize, num: SpectralCoord, den: SpectralCoord) -> PsiMonomial {
    PsiMonomial::from_entries([(Site::new(node, num), 1), (Site::new(node, den), -1)])
}

/// `w^{(i)}_{k,x} = Psi_{i,x+k d_i} / Psi_{i,x}`.
pub fn kr_weight(cartan: &CartanData, i: usize, k: u32, x: &SpectralCoord) -> PsiMonomial {
    ratio(i, x + cartan.d_q(i) * q(k as i64), x.clone())
}

/// The same weight as `Y_{i,x+d_i/2} Y_{i,x+3d_i/2} ... Y_{i,x+(k-1/2)d_i}`.
pub fn kr_weight_y(cartan: &CartanData, i: usize, k: u32, x: &SpectralCoord) -> YMonomial {
    let d = cartan.d_q(i);
    YMonomial::from_entries(
        (0..k).map(|m| (Site::new(i, x + d * (q(m as i64) + half())), 1)),
    )
}

/// `A^{-1}_{i,x-d_i} A^{-1}_{i,x-2d_i} ... A^{-1}_{i,x-k d_i}`.
pub fn demazure_chain(cartan: &CartanData, i: usize, k: u32, x: &SpectralCoord) -> AVector {
    let d = cartan.d_q(i);
    AVector::try_from_entries((1..=k).map(|m| (Site::new(i, x - d * q(m as i64)), 1)))
        .expect("positive exponents")
}

/// `d^{(i,t)}_{k,x} = w_{k,x-(k+1)d_i} w_{k+t,x-k d_i} A^{-1}_{i,x-d_i} ... A^{-1}_{i,x-k d_i}`.
pub fn demazure_weight(
    cartan: &CartanData,
    i: usize,
    t: u32,
    k: u32,
    x: &SpectralCoord,
) -> PsiMonomial {
    let d = cartan.d_q(i);
    let w1 = kr_weight(cartan, i, k, &(x - d * q(k as i64 + 1)));
    let w2 = kr_weight(cartan, i, k + t, &(x - d * q(k as i64)));
    w1.mul(&w2)
        .mul(&avector_to_psi(cartan, &demazure_chain(cartan, i, k, x)))
}

/// The closed Psi-form of [`demazure_weight`]:
/// `Psi_{i,x+t d_i}/Psi_{i,x} * prod_{c_ij<0} Psi_{j,x+d_ij}/Psi_{j,x+d_ij-k d_i}`
/// times the extra factors at neighbours with `c_ij = -2, -3`.
pub fn demazure_weight_closed(
    cartan: &CartanData,
    i: usize,
    t: u32,
    k: u32,
    x: &SpectralCoord,
) -> PsiMonomial {
    let kc = SpectralCoord::int(k as i64);
    ratio(i, x + cartan.d_q(i) * q(t as i64), x.clone())
        .mul(&m_weight(cartan, i, &kc, x).div(&ratio(i, x + cartan.d_q(i), x.clone())))
        .mul(&n_weight(cartan, i, &kc, x))
}

/// `m^{(i)}_{k,x} = Psi_{i,x+d_i}/Psi_{i,x} * prod_{c_ij<0} Psi_{j,x+d_ij}/Psi_{j,x+d_ij-k d_i}`;
/// `k` may be symbolic.
pub fn m_weight(cartan: &CartanData, i: usize, k: &SpectralCoord, x: &SpectralCoord) -> PsiMonomial {
    let di = cartan.d_q(i);
    let mut out = ratio(i, x + di, x.clone());
    for j in cartan.neighbours(i) {
        let b = x + cartan.dsym(i, j);
        let low = &b - &(k * di);
        out = out.mul(&ratio(j, b, low));
    }
    out
}

pub fn n_weight(cartan: &CartanData, i: usize, k: &SpectralCoord, x: &SpectralCoord) -> PsiMonomial {
    let mut out = PsiMonomial::identity();
    for j in cartan.neighbours(i) {
        let offsets: Vec<Q> = match cartan.c(i, j) {
            -2 => vec![q(0)],
            -3 => vec![half(), -half()],
            _ => vec![],
        };
        for o in offsets {
            let b = x + o;
            out = out.mul(&ratio(j, b.clone(), &b - k));
        }
    }
    out
}

/// The KR modules whose tensor product has highest l-weight `n_weight`, as
/// `(node, order, spectral parameter)`. Requires `k` divisible by `d_j`.
pub fn n_factors(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
) -> Result<Vec<(usize, u32, SpectralCoord)>, EngineError> {
    let mut out = Vec::new();
    for j in cartan.neighbours(i) {
        let offsets: Vec<Q> = match cartan.c(i, j) {
            -2 => vec![q(0)],
            -3 => vec![half(), -half()],
            _ => continue,
        };
        let dj = cartan.d(j) as u32;
        if !k.is_multiple_of(dj) {
            return Err(EngineError::InvalidParameters(format!(
                "k = {k} is not divisible by d_{} = {dj}",
                j + 1
            )));
        }
        for o in offsets {
            out.push((j, k / dj, &(x + o) - &SpectralCoord::int(k as i64)));
        }
    }
    Ok(out)
}

/// The KR modules realising `m_weight` for concrete `k`: `W^{(i)}_{1,x}` and
/// `W^{(j)}_{k d_i/d_j, x+d_ij-k d_i}`. Requires `k d_i` divisible by each
/// neighbouring `d_j`.
pub fn m_factors(
    cartan: &CartanData,
    i: usize,
    k: u32,
    x: &SpectralCoord,
) -> Result<Vec<(usize, u32, SpectralCoord)>, EngineError> {
    let di = cartan.d(i) as u32;
    let mut out = vec![(i, 1, x.clone())];
    for j in cartan.neighbours(i) {
        let dj = cartan.d(j) as u32;
        if !(k * di).is_multiple_of(dj) {
            return Err(EngineError::InvalidParameters(format!(
                "k d_{} = {} is not divisible by d_{} = {dj}",
                i + 1,
                k * di,
                j + 1
            )));
        }
        let start = &(x + cartan.dsym(i, j)) - &SpectralCoord::int((k * di) as i64);
        out.push((j, k * di / dj, start));
    }
    Ok(out)
}

/// `1 + A^{-1}_{i,x}` with trivial top.
pub fn two_dim_factor(i: usize, x: &SpectralCoord) -> TruncatedCharacter {
    TruncatedCharacter::from_terms(
        PsiMonomial::identity(),
        [(AVector::one(), 1), (AVector::inv_root(i, x.clone(), 1), 1)],
        None,
    )
    .expect("leading term present")
}
