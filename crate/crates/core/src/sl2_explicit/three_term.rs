use super::extract::extract_qchar;
use super::module::{build_module, Sl2Kind};
use crate::cartan::CartanData;
use crate::characters::{sl2_asymptotic_char, sl2_kr_char, CharacterReport, TruncatedCharacter};
use crate::error::EngineError;
use crate::lweights::{AVector, SpectralCoord};
use crate::rational::{q, Q};

/// Mode bound used when a module is built only to read its character.
const EXTRACTION_MODES: usize = 2;

fn check_bounds(m: usize, n: u32) -> Result<(), EngineError> {
    if n as usize + 2 > m {
        return Err(EngineError::InvalidParameters(format!(
            "height {n} needs truncation dimension at least {}, got {m}",
            n + 2
        )));
    }
    Ok(())
}

/// Assemble `[C^2_x][S^x_y]` and `[S^{x+1}_y] + [S^{x-1}_y]` from four
/// characters and compare them up to height `n`.
fn assemble(
    vector: TruncatedCharacter,
    middle: TruncatedCharacter,
    upper: TruncatedCharacter,
    lower: TruncatedCharacter,
    x: &Q,
    n: u32,
) -> Result<CharacterReport, EngineError> {
    let cartan = CartanData::of("A1")?;
    let lhs = vector.mul(&middle).truncate(n);
    let offset = AVector::inv_root(0, SpectralCoord::rational(*x), 1);
    let rhs = upper.add_shifted(&cartan, &lower, &offset)?.truncate(n);
    Ok(CharacterReport::compare(lhs, rhs))
}

/// `[C^2_x][S^x_y] = [S^{x+1}_y] + [S^{x-1}_y]` with every character read
/// off explicit matrices. `S^b_a` is the module with highest l-weight
/// `Psi_b/Psi_a`, realised on `m` basis vectors.
pub fn verify_sl2_three_term(x: &Q, y: &Q, m: usize, n: u32) -> Result<CharacterReport, EngineError> {
    check_bounds(m, n)?;
    let explicit = |kind: Sl2Kind, at: &Q| build_module(kind, at, EXTRACTION_MODES).and_then(|md| extract_qchar(&md));
    let series = |b: Q| Sl2Kind::Truncated { k: b - y, dim: m };
    assemble(
        explicit(Sl2Kind::Finite { k: 1 }, x)?,
        explicit(series(*x), y)?,
        explicit(series(x + q(1)), y)?,
        explicit(series(x - q(1)), y)?,
        x,
        n,
    )
}

/// The same identity with the four characters taken from the closed-form
/// rank-one characters instead of matrices.
pub fn sl2_three_term_symbolic(x: &Q, y: &Q, m: usize, n: u32) -> Result<CharacterReport, EngineError> {
    check_bounds(m, n)?;
    let (xs, ys) = (SpectralCoord::rational(*x), SpectralCoord::rational(*y));
    let bound = m as u32 - 1;
    let series = |b: Q| sl2_asymptotic_char(&SpectralCoord::rational(b), &ys, bound);
    assemble(
        sl2_kr_char(1, &xs, None),
        series(*x),
        series(x + q(1)),
        series(x - q(1)),
        x,
        n,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    #[test]
    fn equal_parameters() {
        let r = verify_sl2_three_term(&qr(1, 3), &qr(1, 3), 5, 3).unwrap();
        assert!(r.pass, "{}", r.diff_table());
    }

    #[test]
    fn explicit_matches_symbols() {
        let (x, y) = (q(0), qr(1, 2));
        let e = verify_sl2_three_term(&x, &y, 5, 3).unwrap();
        assert!(e.pass);
        assert_eq!(e, sl2_three_term_symbolic(&x, &y, 5, 3).unwrap());
    }

    #[test]
    fn height_must_leave_margin() {
        assert!(verify_sl2_three_term(&q(0), &q(0), 4, 3).is_err());
    }
}
