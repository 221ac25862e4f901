//! Text form of monomials.
//!
//! A monomial is a product of factors `Psi[i,c]`, `Y[i,c]` or `A[i,c]`
//! (nodes 1-based), each with an optional integer exponent `^n`. Factors are
//! separated by whitespace; a `/` in front of a factor inverts it. The empty
//! product is written `1`, so `1/A[1,0]` is `A_{1,0}^{-1}`.

use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::coord::{parse_coord_at, SpectralCoord};
use super::expand::{expand_a_to_psi, expand_y_to_psi, psi_to_y};
use super::monomial::{AVector, PsiMonomial, Site, SparseExps, YMonomial};
use crate::cartan::CartanData;
use crate::error::{EngineError, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Psi,
    Y,
    A,
}

impl FactorKind {
    fn name(self) -> &'static str {
        match self {
            FactorKind::Psi => "Psi",
            FactorKind::Y => "Y",
            FactorKind::A => "A",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub kind: FactorKind,
    /// 0-based.
    pub node: usize,
    pub coord: SpectralCoord,
    pub exp: i32,
    /// Byte offset of the factor in the input.
    pub position: usize,
}

/// Split a monomial string into factors without interpreting them.
pub fn parse_factors(s: &str) -> Result<Vec<Factor>, ParseError> {
    let b = s.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    let mut seen_any = false;
    loop {
        while pos < b.len() && b[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos == b.len() {
            break;
        }
        let start = pos;
        let mut inverse = false;
        if b[pos] == b'/' {
            if !seen_any {
                return Err(ParseError::new(pos, "'/' needs a numerator; write 1/..."));
            }
            inverse = true;
            pos += 1;
            while pos < b.len() && b[pos].is_ascii_whitespace() {
                pos += 1;
            }
        }
        if b[pos] == b'1' {
            let next = b.get(pos + 1).copied();
            if next.is_some_and(|c| !(c.is_ascii_whitespace() || c == b'/')) {
                return Err(ParseError::new(pos, "expected Psi[..], Y[..], A[..] or 1"));
            }
            if inverse {
                return Err(ParseError::new(pos, "cannot divide by 1"));
            }
            pos += 1;
            seen_any = true;
            continue;
        }
        let (kind, len) = if b[pos..].starts_with(b"Psi") {
            (FactorKind::Psi, 3)
        } else if b[pos..].starts_with(b"Y") {
            (FactorKind::Y, 1)
        } else if b[pos..].starts_with(b"A") {
            (FactorKind::A, 1)
        } else {
            return Err(ParseError::new(pos, "expected Psi[..], Y[..], A[..] or 1"));
        };
        pos += len;
        if pos >= b.len() || b[pos] != b'[' {
            return Err(ParseError::new(pos, "expected '['"));
        }
        pos += 1;
        let comma = s[pos..]
            .find(',')
            .map(|c| c + pos)
            .ok_or_else(|| ParseError::new(pos, "expected ',' after the node"))?;
        let node_str = s[pos..comma].trim();
        let node: usize = node_str
            .parse()
            .ok()
            .filter(|n| *n >= 1)
            .ok_or_else(|| ParseError::new(pos, format!("invalid node '{node_str}'")))?;
        let close = s[comma..]
            .find(']')
            .map(|c| c + comma)
            .ok_or_else(|| ParseError::new(comma, "expected ']'"))?;
        let coord = parse_coord_at(&s[comma + 1..close], comma + 1)?;
        pos = close + 1;
        let mut exp = 1i32;
        if pos < b.len() && b[pos] == b'^' {
            pos += 1;
            let es = pos;
            if pos < b.len() && (b[pos] == b'-' || b[pos] == b'+') {
                pos += 1;
            }
            while pos < b.len() && b[pos].is_ascii_digit() {
                pos += 1;
            }
            exp = s[es..pos]
                .parse()
                .map_err(|_| ParseError::new(es, "expected an integer exponent"))?;
        }
        if pos < b.len() && !(b[pos].is_ascii_whitespace() || b[pos] == b'/') {
            return Err(ParseError::new(pos, "unexpected character after factor"));
        }
        if inverse {
            exp = -exp;
        }
        seen_any = true;
        out.push(Factor {
            kind,
            node: node - 1,
            coord,
            exp,
            position: start,
        });
    }
    if !seen_any {
        return Err(ParseError::new(0, "empty monomial"));
    }
    Ok(out)
}

fn check_nodes(cartan: &CartanData, factors: &[Factor]) -> Result<(), EngineError> {
    for f in factors {
        if f.node >= cartan.rank() {
            return Err(ParseError::new(
                f.position,
                format!("node {} out of range for {}", f.node + 1, cartan.lie_type()),
            )
            .into());
        }
    }
    Ok(())
}

/// Parse any mixed product into the Psi basis.
pub fn parse_psi(cartan: &CartanData, s: &str) -> Result<PsiMonomial, EngineError> {
    let factors = parse_factors(s)?;
    check_nodes(cartan, &factors)?;
    let mut m = PsiMonomial::identity();
    for f in &factors {
        let base = match f.kind {
            FactorKind::Psi => PsiMonomial::single(f.node, f.coord.clone(), 1),
            FactorKind::Y => expand_y_to_psi(cartan, f.node, &f.coord),
            FactorKind::A => expand_a_to_psi(cartan, f.node, &f.coord),
        };
        m = m.mul(&base.pow(f.exp));
    }
    Ok(m)
}

/// Parse into the Y basis; fails if the product is not in the Y-lattice.
pub fn parse_y(cartan: &CartanData, s: &str) -> Result<YMonomial, EngineError> {
    let psi = parse_psi(cartan, s)?;
    psi_to_y(cartan, &psi).ok_or_else(|| {
        ParseError::new(0, format!("'{s}' is not a product of Y factors")).into()
    })
}

/// Parse a product of inverse simple roots.
pub fn parse_avector(s: &str) -> Result<AVector, ParseError> {
    let factors = parse_factors(s)?;
    let mut entries = Vec::new();
    for f in factors {
        if f.kind != FactorKind::A {
            return Err(ParseError::new(f.position, "only A factors allowed here"));
        }
        entries.push((Site::new(f.node, f.coord), -f.exp));
    }
    AVector::try_from_entries(entries)
        .ok_or_else(|| ParseError::new(0, "A factors must appear with negative total exponent"))
}

fn write_exps(f: &mut fmt::Formatter<'_>, name: &str, exps: &SparseExps) -> fmt::Result {
    let pos: Vec<_> = exps.entries().iter().filter(|(_, e)| *e > 0).collect();
    let neg: Vec<_> = exps.entries().iter().filter(|(_, e)| *e < 0).collect();
    if pos.is_empty() {
        write!(f, "1")?;
    }
    for (n, (s, e)) in pos.iter().enumerate() {
        if n > 0 {
            write!(f, " ")?;
        }
        write!(f, "{name}[{},{}]", s.node + 1, s.coord)?;
        if *e != 1 {
            write!(f, "^{e}")?;
        }
    }
    for (s, e) in neg {
        write!(f, "/{name}[{},{}]", s.node + 1, s.coord)?;
        if *e != -1 {
            write!(f, "^{}", -e)?;
        }
    }
    Ok(())
}

impl fmt::Display for PsiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_exps(f, FactorKind::Psi.name(), self.exps())
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_exps(f, FactorKind::Y.name(), self.exps())
    }
}

impl fmt::Display for AVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_exps(f, FactorKind::A.name(), &self.exps().pow(-1))
    }
}

#[derive(Serialize)]
struct JsonFactor {
    node: usize,
    coord: String,
    exp: i32,
}

fn serialize_exps<S: Serializer>(exps: &SparseExps, serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(exps.len()))?;
    for (s, e) in exps.entries() {
        seq.serialize_element(&JsonFactor {
            node: s.node + 1,
            coord: s.coord.to_string(),
            exp: *e,
        })?;
    }
    seq.end()
}

macro_rules! exps_serialize {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serialize_exps(self.exps(), serializer)
            }
        }
    };
}

exps_serialize!(PsiMonomial);
exps_serialize!(YMonomial);
exps_serialize!(AVector);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let c = CartanData::of("A2").unwrap();
        for s in [
            "Psi[1,k]/Psi[1,0]",
            "1",
            "1/Psi[2,-1/2]",
            "Psi[1,-1] Psi[2,1/2]/Psi[1,0]/Psi[2,-1/2]",
            "Psi[1,2]^3/Psi[2,k/3]^2",
        ] {
            assert_eq!(parse_psi(&c, s).unwrap().to_string(), s);
        }
        let a = parse_avector("1/A[1,0]/A[2,-1/2]").unwrap();
        assert_eq!(a.height(), 2);
        assert_eq!(a.to_string(), "1/A[1,0]/A[2,-1/2]");
    }

    #[test]
    fn mixed_product() {
        let c = CartanData::of("A2").unwrap();
        let m = parse_psi(&c, "Y[1,1/2] A[2,-1]^-1").unwrap();
        let expected = expand_y_to_psi(&c, 0, &"1/2".parse().unwrap())
            .div(&expand_a_to_psi(&c, 1, &"-1".parse().unwrap()));
        assert_eq!(m, expected);
        let y = parse_y(&c, "Y[1,1/2] A[2,-1]^-1").unwrap();
        assert_eq!(y.to_string(), "Y[1,-1] Y[1,1/2]/Y[2,-3/2]/Y[2,-1/2]");
    }

    #[test]
    fn errors_carry_positions() {
        let c = CartanData::of("A2").unwrap();
        let e = parse_factors("Psi[1,0] Q[1,0]").unwrap_err();
        assert_eq!(e.position, 9);
        assert!(parse_psi(&c, "Psi[3,0]").is_err());
        assert!(parse_factors("Psi[1,0").is_err());
        assert!(parse_factors("Psi[0,0]").is_err());
        assert!(parse_factors("").is_err());
        assert!(parse_factors("/Psi[1,0]").is_err());
        assert!(parse_avector("A[1,0]").is_err());
    }
}
