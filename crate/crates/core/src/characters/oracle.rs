//! Closed-form rank-one characters, independent of the expansion engine.

use super::character::TruncatedCharacter;
use crate::lweights::{AVector, PsiMonomial, Site, SpectralCoord};
use crate::rational::q;

/// `1 + A^{-1}_{x} + A^{-1}_{x} A^{-1}_{x+1} + ...`, stopping after `len`
/// factors or at height `bound`.
fn sl2_chain_series(x: &SpectralCoord, len: Option<u32>, bound: Option<u32>) -> Vec<(AVector, u64)> {
    let last = match (len, bound) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => panic!("an infinite series needs a height bound"),
    };
    let mut out = vec![(AVector::one(), 1)];
    let mut acc = AVector::one();
    for m in 0..last {
        acc = acc.mul(&AVector::inv_root(0, x + q(m as i64), 1));
        out.push((acc.clone(), 1));
    }
    out
}

/// q-character of the `sl_2` KR module with highest l-weight
/// `Psi_{x+k}/Psi_x`.
pub fn sl2_kr_char(k: u32, x: &SpectralCoord, bound: Option<u32>) -> TruncatedCharacter {
    let top = PsiMonomial::from_entries([
        (Site::new(0, x + q(k as i64)), 1),
        (Site::new(0, x.clone()), -1),
    ]);
    TruncatedCharacter::from_terms(top, sl2_chain_series(x, Some(k), bound), bound)
        .expect("leading term present")
}

/// q-character of the `sl_2` asymptotic module `Psi_y / Psi_x`.
pub fn sl2_asymptotic_char(y: &SpectralCoord, x: &SpectralCoord, bound: u32) -> TruncatedCharacter {
    let top = PsiMonomial::from_entries([(Site::new(0, y.clone()), 1), (Site::new(0, x.clone()), -1)]);
    TruncatedCharacter::from_terms(top, sl2_chain_series(x, None, Some(bound)), Some(bound))
        .expect("leading term present")
}
