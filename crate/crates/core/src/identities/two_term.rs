//! Exchange identity for asymptotic modules:
//! `[SL(Psi_b/Psi_a)][SL(Psi_y/Psi_x)] = [SL(Psi_y/Psi_a)][SL(Psi_b/Psi_x)]`.

use crate::cartan::CartanData;
use crate::characters::{asymptotic_char, char_mul_with, CharacterReport, EngineConfig};
use crate::error::EngineError;
use crate::lweights::SpectralCoord;

pub struct TwoTermParams<'a> {
    pub a: &'a SpectralCoord,
    pub b: &'a SpectralCoord,
    pub x: &'a SpectralCoord,
    pub y: &'a SpectralCoord,
}

pub fn verify_two_term(
    cartan: &CartanData,
    i: usize,
    p: &TwoTermParams<'_>,
    n: u32,
    config: &EngineConfig,
) -> Result<CharacterReport, EngineError> {
    let asym = |num: &SpectralCoord, den: &SpectralCoord| asymptotic_char(cartan, i, num, den, n, config);
    let lhs = char_mul_with(config.exec, &asym(p.b, p.a)?, &asym(p.y, p.x)?);
    let rhs = char_mul_with(config.exec, &asym(p.y, p.a)?, &asym(p.b, p.x)?);
    Ok(CharacterReport::compare(lhs, rhs))
}
