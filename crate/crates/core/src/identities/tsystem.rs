//! The T-system and its extension by a Demazure-type kernel:
//! `chi(W_{k,0}) chi(W_{k+t,d_i}) = chi(D^{(i,t)}_{k,(k+1)d_i}) + chi(W_{k-1,d_i}) chi(W_{k+t+1,0})`.

use crate::cartan::CartanData;
use crate::characters::{
    demazure_chain, demazure_char_direct, ses::ses_products, CharacterReport, EngineConfig,
};
use crate::error::EngineError;
use crate::lweights::SpectralCoord;
use crate::rational::q;

/// Compare both sides exactly with complete characters. The Demazure term
/// is expanded directly from its highest l-weight, so the comparison is not
/// a tautology.
pub fn verify_tsystem(
    cartan: &CartanData,
    i: usize,
    k: u32,
    t: u32,
    config: &EngineConfig,
) -> Result<CharacterReport, EngineError> {
    cartan.check_node(i)?;
    if k == 0 {
        return Err(EngineError::InvalidParameters("the T-system needs k >= 1".into()));
    }
    let (middle, right) = ses_products(cartan, i, t, k, None, config)?;
    let base = SpectralCoord::rational(cartan.d_q(i) * q(k as i64 + 1));
    let kernel = demazure_char_direct(cartan, i, t, k, &base, None, config)?;
    let chain = demazure_chain(cartan, i, k, &base);
    let rhs = right.add_shifted(cartan, &kernel, &chain)?;
    Ok(CharacterReport::compare(middle, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_and_sl3() {
        let cfg = EngineConfig::default();
        for (ty, k, t) in [("A1", 1, 0), ("A1", 2, 1), ("A2", 1, 1)] {
            let c = CartanData::of(ty).unwrap();
            for i in c.nodes() {
                let r = verify_tsystem(&c, i, k, t, &cfg).unwrap();
                assert!(r.pass, "{ty} k={k} t={t}\n{}", r.diff_table());
            }
        }
    }
}
