//! Cartan data for the finite-type simple Lie algebras.
//!
//! Nodes follow the Bourbaki numbering and are 0-based in code (node `i` is
//! printed as `i + 1`). With `B(a_i, a_j)` the normalised symmetric form on
//! simple roots (short roots have squared length 2):
//!
//! * `d_i = B(a_i, a_i) / 2`, so `d_i` lies in `{1, 2, 3}` with gcd 1;
//! * `c_ij = B(a_i, a_j) / d_i` (row `i` uses the length of `a_i`);
//! * `dsym_ij = B(a_i, a_j) / 2`.
//!
//! | type | long/short | Dynkin edges (1-based) |
//! |------|------------|------------------------|
//! | A_r  | all d = 1  | 1-2-...-r |
//! | B_r  | d = 2 except d_r = 1 | 1-2-...-(r-1)=>r |
//! | C_r  | d = 1 except d_r = 2 | 1-2-...-(r-1)<=r |
//! | D_r  | all d = 1  | 1-...-(r-2), (r-2)-(r-1), (r-2)-r |
//! | E_r  | all d = 1  | 1-3-4-5-...-r, 2-4 |
//! | F_4  | d = (2,2,1,1) | 1-2=>3-4 |
//! | G_2  | d = (1,3)  | 1<=2 (node 1 short) |

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{EngineError, ParseError};
use crate::rational::{fmt_q, gcd_all, invert, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A legal (series, rank) pair. D3 is rejected in favour of A3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<LieType, EngineError> {
        let reason = match series {
            Series::A if rank >= 1 => None,
            Series::B | Series::C if rank >= 2 => None,
            Series::D if rank == 3 => Some("D3 is isomorphic to A3; use A3".to_string()),
            Series::D if rank >= 4 => None,
            Series::E if (6..=8).contains(&rank) => None,
            Series::F if rank == 4 => None,
            Series::G if rank == 2 => None,
            _ => Some("rank outside the legal range of the series".to_string()),
        };
        match reason {
            None => Ok(LieType { series, rank }),
            Some(reason) => Err(EngineError::IllegalType {
                series: series.letter(),
                rank,
                reason,
            }),
        }
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every legal type with rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for series in [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(t) = LieType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| ParseError::new(0, "empty Lie type"))?;
        let series = Series::from_letter(letter)
            .ok_or_else(|| ParseError::new(0, format!("unknown series '{letter}'")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| ParseError::new(1, format!("invalid rank in '{s}'")))?;
        LieType::new(series, rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Cartan matrix, symmetrisers and symmetric form of a finite type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    lie_type: LieType,
    c: Vec<Vec<i64>>,
    d: Vec<i64>,
    dsym: Vec<Vec<Q>>,
}

fn edges_and_lengths(t: LieType) -> (Vec<(usize, usize)>, Vec<i64>) {
    let r = t.rank();
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.series() {
        Series::A => (chain(r), vec![1; r]),
        Series::B => {
            let mut d = vec![2; r];
            d[r - 1] = 1;
            (chain(r), d)
        }
        Series::C => {
            let mut d = vec![1; r];
            d[r - 1] = 2;
            (chain(r), d)
        }
        Series::D => {
            let mut e = chain(r - 1);
            e.push((r - 3, r - 1));
            (e, vec![1; r])
        }
        Series::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..r - 1).map(|i| (i, i + 1)));
            (e, vec![1; r])
        }
        Series::F => (chain(4), vec![2, 2, 1, 1]),
        Series::G => (chain(2), vec![1, 3]),
    }
}

/// Build the Cartan data of a legal type.
pub fn build_cartan(t: LieType) -> CartanData {
    let r = t.rank();
    let (edges, d) = edges_and_lengths(t);
    // Symmetric form on simple roots, short roots of squared length 2.
    let mut form = vec![vec![0i64; r]; r];
    for i in 0..r {
        form[i][i] = 2 * d[i];
    }
    for &(i, j) in &edges {
        let b = -d[i].max(d[j]);
        form[i][j] = b;
        form[j][i] = b;
    }
    let c = (0..r)
        .map(|i| (0..r).map(|j| form[i][j] / d[i]).collect())
        .collect();
    let dsym = (0..r)
        .map(|i| (0..r).map(|j| Q::new(form[i][j], 2)).collect())
        .collect();
    CartanData {
        lie_type: t,
        c,
        d,
        dsym,
    }
}

impl CartanData {
    pub fn new(t: LieType) -> CartanData {
        build_cartan(t)
    }

    /// Parse a type name such as `"A2"` or `"g2"` and build its data.
    pub fn of(name: &str) -> Result<CartanData, EngineError> {
        Ok(build_cartan(name.parse()?))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.rank()
    }

    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.c[i][j]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn d_q(&self, i: usize) -> Q {
        q(self.d[i])
    }

    pub fn dsym(&self, i: usize, j: usize) -> Q {
        self.dsym[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.c
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.d
    }

    /// Nodes `j` with `c_ij < 0`.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.c[i][j] < 0)
    }

    pub fn check_node(&self, i: usize) -> Result<(), EngineError> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(EngineError::InvalidNode {
                node: i + 1,
                rank: self.rank(),
            })
        }
    }

    /// Checks every structural invariant; returns a description of the first
    /// violation.
    pub fn validate(&self) -> Result<(), String> {
        let r = self.rank();
        if gcd_all(self.d.iter().copied()) != 1 {
            return Err("gcd of symmetrizers is not 1".into());
        }
        for i in 0..r {
            if !(1..=3).contains(&self.d[i]) {
                return Err(format!("d_{} = {} outside {{1,2,3}}", i + 1, self.d[i]));
            }
            if self.c[i][i] != 2 {
                return Err(format!("c_{0}{0} != 2", i + 1));
            }
            for j in 0..r {
                if i != j && !(-3..=0).contains(&self.c[i][j]) {
                    return Err(format!("c_{}{} = {}", i + 1, j + 1, self.c[i][j]));
                }
                let lhs = q(self.d[i] * self.c[i][j]);
                if lhs != q(self.d[j] * self.c[j][i]) || lhs != self.dsym[i][j] * q(2) {
                    return Err(format!("symmetrization fails at ({}, {})", i + 1, j + 1));
                }
                if self.dsym[i][j] != self.dsym[j][i] {
                    return Err("dsym not symmetric".into());
                }
            }
        }
        Ok(())
    }

    /// Simple root `a_i` in the simple-root basis.
    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut coords = vec![Q::zero(); self.rank()];
        coords[i] = q(1);
        RootVector { coords }
    }

    /// Fundamental weight in the fundamental-weight basis.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut coords = vec![Q::zero(); self.rank()];
        coords[i] = q(1);
        Weight { coords }
    }

    /// `a_i = sum_j c_ji w_j`, since `(a_j, w_k) = d_j delta_jk`.
    pub fn root_to_weight(&self, v: &RootVector) -> Weight {
        let r = self.rank();
        let coords = (0..r)
            .map(|j| (0..r).map(|i| q(self.c[j][i]) * v.coords[i]).sum())
            .collect();
        Weight { coords }
    }

    pub fn weight_to_root(&self, w: &Weight) -> RootVector {
        let r = self.rank();
        let m: Vec<Vec<Q>> = (0..r)
            .map(|j| (0..r).map(|i| q(self.c[j][i])).collect())
            .collect();
        let inv = invert(&m).expect("finite-type Cartan matrices are invertible");
        let coords = (0..r)
            .map(|i| (0..r).map(|j| inv[i][j] * w.coords[j]).sum())
            .collect();
        RootVector { coords }
    }
}

#[derive(Serialize, Deserialize)]
struct CartanJson {
    #[serde(rename = "type")]
    lie_type: LieType,
    c: Vec<Vec<i64>>,
    d: Vec<i64>,
    dsym: Vec<Vec<String>>,
}

impl Serialize for CartanData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CartanJson {
            lie_type: self.lie_type,
            c: self.c.clone(),
            d: self.d.clone(),
            dsym: self
                .dsym
                .iter()
                .map(|row| row.iter().map(fmt_q).collect())
                .collect(),
        }
        .serialize(s)
    }
}

/// Element of the root lattice tensored with Q, in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootVector {
    pub coords: Vec<Q>,
}

impl RootVector {
    pub fn zero(rank: usize) -> RootVector {
        RootVector {
            coords: vec![Q::zero(); rank],
        }
    }

    pub fn from_ints(v: &[i64]) -> RootVector {
        RootVector {
            coords: v.iter().map(|&x| q(x)).collect(),
        }
    }

    pub fn in_root_lattice(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Membership in the negative cone `Q_-`.
    pub fn in_negative_cone(&self) -> bool {
        self.coords
            .iter()
            .all(|c| c.is_integer() && *c <= Q::zero())
    }
}

/// The group morphism sending each simple root to 1.
pub fn height(v: &RootVector) -> Q {
    v.coords.iter().sum()
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, o: &RootVector) -> RootVector {
        RootVector {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, o: &RootVector) -> RootVector {
        RootVector {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

/// Weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight {
            coords: vec![Q::zero(); rank],
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    #[test]
    fn a1_and_a2() {
        let a1 = CartanData::of("A1").unwrap();
        assert_eq!(a1.cartan_matrix(), &[vec![2]]);
        assert_eq!(a1.symmetrizers(), &[1]);
        let a2 = CartanData::of("a2").unwrap();
        assert_eq!(a2.cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.dsym(0, 1), qr(-1, 2));
    }

    #[test]
    fn g2_short_first() {
        let g2 = CartanData::of("G2").unwrap();
        assert_eq!(g2.cartan_matrix(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(g2.symmetrizers(), &[1, 3]);
        assert_eq!(g2.dsym(0, 1), qr(-3, 2));
    }

    #[test]
    fn b2_and_c2() {
        let b2 = CartanData::of("B2").unwrap();
        assert_eq!(b2.cartan_matrix(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(b2.symmetrizers(), &[2, 1]);
        let c2 = CartanData::of("C2").unwrap();
        assert_eq!(c2.cartan_matrix(), &[vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn every_type_is_valid() {
        for t in LieType::all_up_to_rank(8) {
            build_cartan(t).validate().unwrap_or_else(|e| panic!("{t}: {e}"));
        }
        let e8 = CartanData::of("E8").unwrap();
        assert_eq!(e8.neighbours(3).count(), 3);
    }

    #[test]
    fn illegal_types_rejected() {
        for bad in ["D3", "Z9", "A0", "B1", "E5", "E9", "F3", "G3", "", "A"] {
            assert!(bad.parse::<LieType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn heights() {
        assert_eq!(height(&RootVector::from_ints(&[1, 1])), q(2));
        assert_eq!(height(&RootVector::zero(2)), q(0));
        assert_eq!(height(&RootVector::from_ints(&[-1, -2])), q(-3));
    }

    #[test]
    fn weight_root_conversions() {
        let a1 = CartanData::of("A1").unwrap();
        let r = a1.weight_to_root(&a1.fundamental_weight(0));
        assert_eq!(r.coords, vec![qr(1, 2)]);
        let a2 = CartanData::of("A2").unwrap();
        let r = a2.weight_to_root(&a2.fundamental_weight(0));
        assert_eq!(r.coords, vec![qr(2, 3), qr(1, 3)]);
        for t in LieType::all_up_to_rank(8) {
            let cd = build_cartan(t);
            for i in cd.nodes() {
                let w = cd.root_to_weight(&cd.simple_root(i));
                assert_eq!(cd.weight_to_root(&w), cd.simple_root(i));
            }
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(CartanData::of("G2").unwrap()).unwrap();
        assert_eq!(v["type"], "G2");
        assert_eq!(v["dsym"][0][1], "-3/2");
    }
}
