//! Exact spectral coordinates: a rational number plus a rational combination
//! of named formal indeterminates.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::ParseError;
use crate::rational::{fmt_q, is_half_integer, q, Q};

/// Element of `Q + Q<indeterminates>`.
///
/// Ordering is lexicographic on (symbolic part, rational part); it is used
/// for canonical printing only.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectralCoord {
    sym: Vec<(Arc<str>, Q)>,
    rat: Q,
}

impl SpectralCoord {
    pub fn zero() -> Self {
        SpectralCoord {
            sym: Vec::new(),
            rat: Q::zero(),
        }
    }

    pub fn rational(v: Q) -> Self {
        SpectralCoord {
            sym: Vec::new(),
            rat: v,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(q(n))
    }

    /// The indeterminate `name` with coefficient 1.
    pub fn symbol(name: &str) -> Self {
        SpectralCoord {
            sym: vec![(Arc::from(name), Q::one())],
            rat: Q::zero(),
        }
    }

    pub fn from_parts(rat: Q, sym: impl IntoIterator<Item = (String, Q)>) -> Self {
        let mut out = Self::rational(rat);
        for (name, c) in sym {
            out.add_symbol(Arc::from(name.as_str()), c);
        }
        out
    }

    fn add_symbol(&mut self, name: Arc<str>, c: Q) {
        match self.sym.binary_search_by(|(n, _)| n.as_ref().cmp(name.as_ref())) {
            Ok(idx) => {
                self.sym[idx].1 += c;
                if self.sym[idx].1.is_zero() {
                    self.sym.remove(idx);
                }
            }
            Err(idx) => {
                if !c.is_zero() {
                    self.sym.insert(idx, (name, c));
                }
            }
        }
    }

    pub fn rat(&self) -> Q {
        self.rat
    }

    pub fn symbolic_part(&self) -> &[(Arc<str>, Q)] {
        &self.sym
    }

    pub fn is_symbolic(&self) -> bool {
        !self.sym.is_empty()
    }

    /// The rational value when the symbolic part is empty.
    pub fn as_rational(&self) -> Option<Q> {
        self.sym.is_empty().then_some(self.rat)
    }

    /// `(sym empty) and (2 * rat integer)`.
    pub fn is_half_integer(&self) -> bool {
        self.sym.is_empty() && is_half_integer(&self.rat)
    }

    /// Generic in the sense of avoiding the half-integer lattice.
    pub fn is_generic(&self) -> bool {
        !self.is_half_integer()
    }

    /// `other - self` when the two coordinates share their symbolic part.
    pub fn offset_to(&self, other: &SpectralCoord) -> Option<Q> {
        (self.sym == other.sym).then(|| other.rat - self.rat)
    }

    pub fn same_symbolic_part(&self, other: &SpectralCoord) -> bool {
        self.sym == other.sym
    }

    pub fn scale(&self, s: Q) -> SpectralCoord {
        if s.is_zero() {
            return SpectralCoord::zero();
        }
        SpectralCoord {
            sym: self.sym.iter().map(|(n, c)| (n.clone(), *c * s)).collect(),
            rat: self.rat * s,
        }
    }

    /// Replace the indeterminate `name` by `value`.
    pub fn substitute(&self, name: &str, value: &SpectralCoord) -> SpectralCoord {
        let mut out = SpectralCoord::rational(self.rat);
        for (n, c) in &self.sym {
            if n.as_ref() == name {
                out = &out + &value.scale(*c);
            } else {
                out.add_symbol(n.clone(), *c);
            }
        }
        out
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.sym.iter().map(|(n, _)| n.as_ref())
    }
}

impl Default for SpectralCoord {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Q> for SpectralCoord {
    fn from(v: Q) -> Self {
        SpectralCoord::rational(v)
    }
}

impl From<i64> for SpectralCoord {
    fn from(v: i64) -> Self {
        SpectralCoord::int(v)
    }
}

impl Add for &SpectralCoord {
    type Output = SpectralCoord;
    fn add(self, o: &SpectralCoord) -> SpectralCoord {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl AddAssign<&SpectralCoord> for SpectralCoord {
    fn add_assign(&mut self, o: &SpectralCoord) {
        self.rat += o.rat;
        for (n, c) in &o.sym {
            self.add_symbol(n.clone(), *c);
        }
    }
}

impl Add<Q> for &SpectralCoord {
    type Output = SpectralCoord;
    fn add(self, o: Q) -> SpectralCoord {
        SpectralCoord {
            sym: self.sym.clone(),
            rat: self.rat + o,
        }
    }
}

impl Sub<Q> for &SpectralCoord {
    type Output = SpectralCoord;
    fn sub(self, o: Q) -> SpectralCoord {
        self + (-o)
    }
}

impl Sub for &SpectralCoord {
    type Output = SpectralCoord;
    fn sub(self, o: &SpectralCoord) -> SpectralCoord {
        self + &(-o)
    }
}

impl Neg for &SpectralCoord {
    type Output = SpectralCoord;
    fn neg(self) -> SpectralCoord {
        self.scale(-Q::one())
    }
}

impl Mul<Q> for &SpectralCoord {
    type Output = SpectralCoord;
    fn mul(self, s: Q) -> SpectralCoord {
        self.scale(s)
    }
}

fn fmt_sym_term(name: &str, c: Q) -> String {
    let c = c.abs();
    let numer = c.numer();
    let mut s = String::new();
    if *numer != 1 {
        s.push_str(&numer.to_string());
    }
    s.push_str(name);
    if *c.denom() != 1 {
        s.push('/');
        s.push_str(&c.denom().to_string());
    }
    s
}

impl fmt::Display for SpectralCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.rat.is_zero() || self.sym.is_empty() {
            out.push_str(&fmt_q(&self.rat));
        }
        for (name, c) in &self.sym {
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&fmt_sym_term(name, *c));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for SpectralCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse a coordinate starting at byte `offset` of the enclosing input; used
/// by the monomial parser to report absolute positions.
pub(crate) fn parse_coord_at(s: &str, offset: usize) -> Result<SpectralCoord, ParseError> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let read_int = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| s[start..*pos].parse().ok()).flatten()
    };
    let mut out = SpectralCoord::zero();
    let mut first = true;
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(ParseError::new(offset, "empty coordinate"));
    }
    while pos < bytes.len() {
        skip_ws(&mut pos);
        let mut sign = Q::one();
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(ParseError::new(offset + pos, "expected '+' or '-' between terms"));
        }
        first = false;
        let term_start = pos;
        let numer = read_int(&mut pos);
        let ident_start = pos;
        if pos < bytes.len() && (bytes[pos].is_ascii_alphabetic() || bytes[pos] == b'_') {
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
        }
        let ident = &s[ident_start..pos];
        if numer.is_none() && ident.is_empty() {
            return Err(ParseError::new(offset + term_start, "expected a number or an indeterminate"));
        }
        let mut denom = 1i64;
        if pos < bytes.len() && bytes[pos] == b'/' {
            pos += 1;
            denom = read_int(&mut pos)
                .filter(|d| *d != 0)
                .ok_or_else(|| ParseError::new(offset + pos, "expected a nonzero denominator"))?;
        }
        let coeff = sign * Q::new(numer.unwrap_or(1), denom);
        if ident.is_empty() {
            out.rat += coeff;
        } else {
            out.add_symbol(Arc::from(ident), coeff);
        }
        skip_ws(&mut pos);
    }
    Ok(out)
}

impl FromStr for SpectralCoord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_coord_at(s, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn c(s: &str) -> SpectralCoord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        for s in ["0", "-3/2", "k", "2k", "k/3", "1/2+k", "-1-2k/3+y", "-k"] {
            assert_eq!(c(s).to_string(), s);
        }
        assert_eq!(c("k + 1/2").to_string(), "1/2+k");
        assert_eq!(c("k-k").to_string(), "0");
        assert_eq!(c("y+x").to_string(), "x+y");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<SpectralCoord>().is_err());
        assert!("1/0".parse::<SpectralCoord>().is_err());
        assert!("1 2".parse::<SpectralCoord>().is_err());
        assert!("+".parse::<SpectralCoord>().is_err());
    }

    #[test]
    fn half_integer_and_offsets() {
        assert!(c("-3/2").is_half_integer());
        assert!(!c("7/3").is_half_integer());
        assert!(!c("k").is_half_integer());
        assert_eq!(c("k").offset_to(&c("k-1/2")), Some(qr(-1, 2)));
        assert_eq!(c("k").offset_to(&c("1")), None);
    }

    #[test]
    fn substitution() {
        let v = c("1/2-6k");
        assert_eq!(v.substitute("k", &c("2")).to_string(), "-23/2");
        assert_eq!(v.substitute("k", &c("x+1")).to_string(), "-11/2-6x");
    }

    #[test]
    fn ordering_puts_rationals_first() {
        let mut v = [c("k"), c("1"), c("-1"), c("k-1")];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["-1", "1", "-1+k", "k"]);
    }
}
