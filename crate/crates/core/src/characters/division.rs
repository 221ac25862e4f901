//! Exact division of normalized characters, degree by degree in height.

use std::collections::BTreeMap;

use super::character::TruncatedCharacter;
use crate::error::EngineError;
use crate::lweights::AVector;

/// `numer / denom` on the A-ledger. The quotient is truncated at the
/// numerator's bound, and every coefficient must come out positive.
pub fn divide(
    numer: &TruncatedCharacter,
    denom: &TruncatedCharacter,
) -> Result<TruncatedCharacter, EngineError> {
    let bound = numer.height_bound();
    if let (Some(b), Some(d)) = (bound, denom.height_bound()) {
        if d < b {
            return Err(EngineError::InvalidParameters(format!(
                "divisor known to height {d} only, numerator to {b}"
            )));
        }
    }
    if denom.coeff(&AVector::one()) != 1 {
        return Err(EngineError::InvalidParameters("divisor has no leading term".into()));
    }
    let tail: Vec<(&AVector, u32, i128)> = denom
        .terms()
        .iter()
        .filter(|(v, _)| !v.is_one())
        .map(|(v, c)| (v, v.height(), *c as i128))
        .collect();
    let mut residual: BTreeMap<AVector, i128> = numer
        .terms()
        .iter()
        .map(|(v, c)| (v.clone(), *c as i128))
        .collect();
    let mut quotient = Vec::new();
    // BTreeMap order is by height first, so popping the smallest key always
    // yields a term whose residual is final.
    while let Some((v, c)) = residual.pop_first() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            return Err(EngineError::NegativeCoefficient {
                context: "series division".into(),
                avector: v.to_string(),
                coeff: c as i64,
            });
        }
        let h = v.height();
        for (u, hu, cu) in &tail {
            if bound.is_none_or(|b| h + hu <= b) {
                *residual.entry(v.mul(u)).or_insert(0) -= c * cu;
            }
        }
        quotient.push((v, c as u64));
    }
    TruncatedCharacter::from_terms(numer.top().div(denom.top()), quotient, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::oracle::sl2_kr_char;
    use crate::lweights::SpectralCoord;

    #[test]
    fn product_then_divide() {
        let a = sl2_kr_char(2, &SpectralCoord::int(0), None);
        let b = sl2_kr_char(3, &SpectralCoord::int(5), None);
        let p = a.mul(&b);
        assert_eq!(divide(&p, &b).unwrap(), a);
        assert!(divide(&a, &b).is_err());
    }
}
