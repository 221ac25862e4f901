use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::{BigQ, Matrix};
use super::module::Sl2Module;
use crate::cartan::CartanData;
use crate::characters::TruncatedCharacter;
use crate::error::EngineError;
use crate::lweights::{expand_a_to_psi, AVector, PsiMonomial, Site, SpectralCoord};
use crate::rational::Q;

/// Fewest stored modes that determine a ratio of two quadratics and leave
/// one coefficient to confirm it.
pub const MIN_MODES_FOR_EXTRACTION: usize = 6;

fn failure(message: impl Into<String>) -> EngineError {
    EngineError::InvalidParameters(format!("l-weight extraction failed: {}", message.into()))
}

/// Solve a small square system exactly; `None` if singular.
#[allow(clippy::needless_range_loop)]
fn solve(mut a: Vec<Vec<BigQ>>, mut b: Vec<BigQ>) -> Option<Vec<BigQ>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Write the series `s_0 = 1, s_1, ...` as `P(t)/Q(t)` with `P(0) = Q(0) = 1`
/// and the least common degree consistent with every coefficient.
fn pade(s: &[BigQ]) -> Option<(Vec<BigQ>, Vec<BigQ>)> {
    let at = |m: isize| -> BigQ {
        if m < 0 {
            BigQ::zero()
        } else {
            s[m as usize].clone()
        }
    };
    let top = s.len() - 1;
    for d in 0..=top / 2 {
        if 2 * d + 1 > top && d > 0 {
            break;
        }
        let q_tail = if d == 0 {
            Vec::new()
        } else {
            let rows = (d + 1..=2 * d)
                .map(|m| (1..=d).map(|j| at(m as isize - j as isize)).collect())
                .collect();
            let rhs = (d + 1..=2 * d).map(|m| -at(m as isize)).collect();
            match solve(rows, rhs) {
                Some(v) => v,
                None => continue,
            }
        };
        let mut qs = vec![BigQ::one()];
        qs.extend(q_tail);
        let conv = |m: usize| -> BigQ { (0..=d.min(m)).map(|j| &qs[j] * at((m - j) as isize)).sum() };
        if (d + 1..=top).all(|m| conv(m).is_zero()) {
            let ps = (0..=d).map(conv).collect();
            return Some((ps, qs));
        }
    }
    None
}

fn eval(coeffs: &[BigQ], z: &BigQ) -> BigQ {
    coeffs.iter().fold(BigQ::zero(), |acc, c| acc * z + c)
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

/// All roots, with multiplicity, of a polynomial (highest degree first),
/// provided every root is rational.
fn rational_roots(mut coeffs: Vec<BigQ>) -> Option<Vec<BigQ>> {
    let mut roots = Vec::new();
    while coeffs.len() > 1 {
        if coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
            roots.push(BigQ::zero());
            continue;
        }
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigQ::from_integer(lcm.clone())).to_integer()).collect();
        let ps = divisors(ints.last()?)?;
        let qs = divisors(&ints[0])?;
        let root = ps
            .iter()
            .flat_map(|p| qs.iter().map(move |q| (p, q)))
            .flat_map(|(p, q)| {
                let r = BigQ::new(BigInt::from(*p), BigInt::from(*q));
                [r.clone(), -r]
            })
            .find(|r| eval(&coeffs, r).is_zero())?;
        // Synthetic division by (z - root).
        let mut quotient = Vec::with_capacity(coeffs.len() - 1);
        let mut acc = BigQ::zero();
        for c in &coeffs[..coeffs.len() - 1] {
            acc = acc * &root + c;
            quotient.push(acc.clone());
        }
        coeffs = quotient;
        roots.push(root);
    }
    Some(roots)
}

/// The `b_j` in `prod_j (1 + b_j t)` from its coefficients `e_0 = 1, e_1, ...`.
fn shifts(e: &[BigQ]) -> Option<Vec<BigQ>> {
    let poly = e
        .iter()
        .enumerate()
        .map(|(m, c)| if m % 2 == 0 { c.clone() } else { -c })
        .collect();
    rational_roots(poly)
}

fn small(v: &BigQ) -> Option<Q> {
    Some(Q::new(v.numer().to_i64()?, v.denom().to_i64()?))
}

/// The l-weight of `v_i`: the eigenvalue series of `xi(u)` read back as a
/// ratio of shifted linear factors `u + a`.
pub fn state_lweight(module: &Sl2Module, i: usize) -> Result<PsiMonomial, EngineError> {
    if module.stored_modes() < MIN_MODES_FOR_EXTRACTION {
        return Err(failure(format!(
            "need at least {MIN_MODES_FOR_EXTRACTION} stored modes, module has {}",
            module.stored_modes()
        )));
    }
    if !module.xi.iter().all(Matrix::is_diagonal) {
        return Err(failure("xi matrices are not diagonal"));
    }
    let mut series = vec![BigQ::one()];
    series.extend(module.xi_eigenvalues(i));
    let (p, q) = pade(&series).ok_or_else(|| failure(format!("no rational eigenvalue on v_{i}")))?;
    let zeros = shifts(&p).ok_or_else(|| failure(format!("irrational zero on v_{i}")))?;
    let poles = shifts(&q).ok_or_else(|| failure(format!("irrational pole on v_{i}")))?;
    let mut entries = Vec::new();
    for (vals, e) in [(zeros, 1), (poles, -1)] {
        for v in vals {
            let c = small(&v).ok_or_else(|| failure("coordinate overflows 64 bits"))?;
            entries.push((Site::new(0, SpectralCoord::rational(c)), e));
        }
    }
    Ok(PsiMonomial::from_entries(entries))
}

/// Factor `ratio` as a product of `A^{-1}_{x}` by repeatedly removing the
/// root whose denominator sits at the rightmost coordinate.
fn peel(cartan: &CartanData, ratio: &PsiMonomial, limit: usize) -> Option<AVector> {
    let mut rest = ratio.clone();
    let mut ledger = AVector::one();
    for _ in 0..=limit {
        if rest.is_identity() {
            return Some(ledger);
        }
        let (site, e) = rest
            .entries()
            .iter()
            .max_by(|a, b| a.0.coord.as_rational().cmp(&b.0.coord.as_rational()))?;
        if *e > 0 || site.node != 0 {
            return None;
        }
        let c = &site.coord - &SpectralCoord::int(1);
        rest = rest.mul(&expand_a_to_psi(cartan, 0, &c));
        ledger = ledger.mul(&AVector::inv_root(0, c, 1));
    }
    None
}

/// q-character of the explicit module, assembled from the l-weights of its
/// basis vectors. A truncated module yields a character bounded at height
/// `dim - 1`.
pub fn extract_qchar(module: &Sl2Module) -> Result<TruncatedCharacter, EngineError> {
    let cartan = CartanData::of("A1")?;
    let weights = (0..module.dim())
        .map(|i| state_lweight(module, i))
        .collect::<Result<Vec<_>, _>>()?;
    let top = weights[0].clone();
    let mut terms: BTreeMap<AVector, u64> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        let limit = 2 * module.dim() + 2;
        let v = peel(&cartan, &w.div(&top), limit)
            .ok_or_else(|| failure(format!("l-weight of v_{i} is not below the top")))?;
        *terms.entry(v).or_insert(0) += 1;
    }
    let bound = match module.kind {
        super::Sl2Kind::Finite { .. } => None,
        super::Sl2Kind::Truncated { dim, .. } => Some(dim as u32 - 1),
    };
    TruncatedCharacter::from_terms(top, terms, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::sl2_kr_char;
    use crate::rational::{q, qr};
    use crate::sl2_explicit::{build_module, Sl2Kind};

    fn big(n: i64) -> BigQ {
        BigQ::from_integer(BigInt::from(n))
    }

    #[test]
    fn pade_recovers_quadratic_ratio() {
        // (1+2t)(1-t) / (1+3t) = 1 - 2t + 4t^2 - 12t^3 + ...
        let mut s = vec![big(1)];
        let num = [big(1), big(1), big(-2)];
        for m in 1..7 {
            let n = num.get(m).cloned().unwrap_or_default();
            s.push(n - big(3) * &s[m - 1]);
        }
        let (p, q) = pade(&s).unwrap();
        assert_eq!(q, vec![big(1), big(3), big(0)]);
        assert_eq!(p, vec![big(1), big(1), big(-2)]);
        assert_eq!(shifts(&q).unwrap(), vec![big(0), big(3)]);
    }

    #[test]
    fn roots_with_zero_and_repeats() {
        // z^3 - z^2 / 2 = z^2 (z - 1/2)
        let r = rational_roots(vec![big(1), BigQ::new(BigInt::from(-1), BigInt::from(2)), big(0), big(0)]).unwrap();
        assert_eq!(r, vec![big(0), big(0), BigQ::new(BigInt::from(1), BigInt::from(2))]);
        assert!(rational_roots(vec![big(1), big(0), big(-2)]).is_none());
    }

    #[test]
    fn finite_characters_match_closed_form() {
        for k in 0..=4u32 {
            let x = qr(3, 5);
            let m = build_module(Sl2Kind::Finite { k }, &x, 2).unwrap();
            let c = extract_qchar(&m).unwrap();
            assert_eq!(c, sl2_kr_char(k, &SpectralCoord::rational(x), None), "k = {k}");
            assert_eq!(c.len(), k as usize + 1);
        }
    }

    #[test]
    fn truncated_character_matches_engine() {
        let cartan = CartanData::of("A1").unwrap();
        let config = crate::characters::EngineConfig::default();
        for k in [qr(7, 3), qr(-5, 2)] {
            let x = qr(1, 4);
            let m = build_module(Sl2Kind::Truncated { k, dim: 5 }, &x, 2).unwrap();
            let c = extract_qchar(&m).unwrap();
            let (xs, ys) = (SpectralCoord::rational(x), SpectralCoord::rational(x + k));
            let engine = crate::characters::asymptotic_char(&cartan, 0, &ys, &xs, 4, &config).unwrap();
            assert_eq!(c, engine);
        }
    }

    #[test]
    fn top_lweight_is_a_single_ratio() {
        let m = build_module(Sl2Kind::Finite { k: 2 }, &q(0), 2).unwrap();
        let w = state_lweight(&m, 0).unwrap();
        assert_eq!(w, PsiMonomial::from_entries([(Site::new(0, q(2)), 1), (Site::new(0, q(0)), -1)]));
    }

    #[test]
    fn too_few_modes_rejected() {
        let m = build_module(Sl2Kind::Finite { k: 2 }, &q(0), 1).unwrap();
        assert!(extract_qchar(&m).is_err());
    }
}
