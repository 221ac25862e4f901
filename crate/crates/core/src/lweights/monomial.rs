//! Sparse exponent maps keyed by (node, coordinate) and the three monomial
//! flavours built on them.

use std::cmp::Ordering;
use std::fmt;

use super::coord::SpectralCoord;

/// A point `(node, coordinate)`. Nodes are 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub node: usize,
    pub coord: SpectralCoord,
}

impl Site {
    pub fn new(node: usize, coord: impl Into<SpectralCoord>) -> Site {
        Site {
            node,
            coord: coord.into(),
        }
    }

    pub fn shifted(&self, a: &SpectralCoord) -> Site {
        Site {
            node: self.node,
            coord: &self.coord + a,
        }
    }
}

impl fmt::Debug for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.node + 1, self.coord)
    }
}

/// Sorted association list `Site -> nonzero exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SparseExps {
    entries: Vec<(Site, i32)>,
}

impl SparseExps {
    pub fn identity() -> Self {
        SparseExps {
            entries: Vec::new(),
        }
    }

    pub fn single(site: Site, e: i32) -> Self {
        if e == 0 {
            return Self::identity();
        }
        SparseExps {
            entries: vec![(site, e)],
        }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Site, i32)>) -> Self {
        let mut v: Vec<(Site, i32)> = entries.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Site, i32)> = Vec::with_capacity(v.len());
        for (s, e) in v {
            match out.last_mut() {
                Some((last, le)) if *last == s => *le += e,
                _ => out.push((s, e)),
            }
        }
        out.retain(|(_, e)| *e != 0);
        SparseExps { entries: out }
    }

    pub fn entries(&self) -> &[(Site, i32)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, site: &Site) -> i32 {
        self.entries
            .binary_search_by(|(s, _)| s.cmp(site))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    /// Pointwise `self + scale * other` by a linear merge.
    pub fn add_scaled(&self, other: &SparseExps, scale: i32) -> SparseExps {
        if scale == 0 || other.is_empty() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), b[j].1 * scale));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1 * scale;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(s, e)| (s.clone(), e * scale)));
        SparseExps { entries: out }
    }

    pub fn mul(&self, other: &SparseExps) -> SparseExps {
        self.add_scaled(other, 1)
    }

    pub fn pow(&self, n: i32) -> SparseExps {
        if n == 0 {
            return Self::identity();
        }
        SparseExps {
            entries: self.entries.iter().map(|(s, e)| (s.clone(), e * n)).collect(),
        }
    }

    pub fn inv(&self) -> SparseExps {
        self.pow(-1)
    }

    /// Apply a coordinate map; re-canonicalises since the map need not be
    /// monotone.
    pub fn map_coords(&self, f: impl Fn(&SpectralCoord) -> SpectralCoord) -> SparseExps {
        SparseExps::from_entries(
            self.entries
                .iter()
                .map(|(s, e)| (Site::new(s.node, f(&s.coord)), *e)),
        )
    }

    /// Translation preserves the order, so no re-sort is needed.
    pub fn shift(&self, a: &SpectralCoord) -> SparseExps {
        SparseExps {
            entries: self
                .entries
                .iter()
                .map(|(s, e)| (s.shifted(a), *e))
                .collect(),
        }
    }

    pub fn node_entries(&self, node: usize) -> impl Iterator<Item = (&SpectralCoord, i32)> {
        self.entries
            .iter()
            .filter(move |(s, _)| s.node == node)
            .map(|(s, e)| (&s.coord, *e))
    }
}

macro_rules! monomial_newtype {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(pub(crate) SparseExps);

        impl $name {
            pub fn identity() -> Self {
                $name(SparseExps::identity())
            }

            pub fn from_entries(entries: impl IntoIterator<Item = (Site, i32)>) -> Self {
                $name(SparseExps::from_entries(entries))
            }

            pub fn single(node: usize, coord: impl Into<SpectralCoord>, e: i32) -> Self {
                $name(SparseExps::single(Site::new(node, coord), e))
            }

            pub fn exps(&self) -> &SparseExps {
                &self.0
            }

            pub fn entries(&self) -> &[(Site, i32)] {
                self.0.entries()
            }

            pub fn exponent(&self, node: usize, coord: &SpectralCoord) -> i32 {
                self.0.get(&Site::new(node, coord.clone()))
            }

            pub fn is_identity(&self) -> bool {
                self.0.is_empty()
            }

            pub fn mul(&self, other: &Self) -> Self {
                $name(self.0.mul(&other.0))
            }

            pub fn div(&self, other: &Self) -> Self {
                $name(self.0.add_scaled(&other.0, -1))
            }

            pub fn inv(&self) -> Self {
                $name(self.0.inv())
            }

            pub fn pow(&self, n: i32) -> Self {
                $name(self.0.pow(n))
            }

            /// Spectral shift: every coordinate `x` becomes `x + a`.
            pub fn shift(&self, a: &SpectralCoord) -> Self {
                $name(self.0.shift(a))
            }

            pub fn substitute(&self, name: &str, value: &SpectralCoord) -> Self {
                $name(self.0.map_coords(|c| c.substitute(name, value)))
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self)
            }
        }
    };
}

monomial_newtype!(PsiMonomial, "Element of the group generated by the `Psi_{i,x}`.");
monomial_newtype!(YMonomial, "Element of the lattice freely generated by the `Y_{i,x}`.");

impl YMonomial {
    /// All exponents nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.entries().iter().all(|(_, e)| *e >= 0)
    }

    /// No negative exponent at `node`.
    pub fn is_node_dominant(&self, node: usize) -> bool {
        self.0.node_entries(node).all(|(_, e)| e >= 0)
    }

    /// Frenkel-Mukhin right-negativity. Differences with a nonempty symbolic
    /// part never qualify as half-integers.
    pub fn is_right_negative(&self) -> bool {
        if self.is_identity() {
            return false;
        }
        let negatives: Vec<&SpectralCoord> = self
            .entries()
            .iter()
            .filter(|(_, e)| *e < 0)
            .map(|(s, _)| &s.coord)
            .collect();
        self.entries()
            .iter()
            .filter(|(_, e)| *e > 0)
            .all(|(s, _)| {
                negatives.iter().any(|y| match s.coord.offset_to(y) {
                    Some(d) => d < num_traits::Zero::zero() && crate::rational::is_half_integer(&d),
                    None => false,
                })
            })
    }
}

/// Element of the monoid generated by the `A_{i,x}^{-1}`, stored by the
/// (positive) exponents of the inverse roots. The empty vector is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AVector(pub(crate) SparseExps);

impl AVector {
    pub fn one() -> Self {
        AVector(SparseExps::identity())
    }

    /// `A_{node,coord}^{-e}`.
    pub fn inv_root(node: usize, coord: impl Into<SpectralCoord>, e: u32) -> Self {
        AVector(SparseExps::single(Site::new(node, coord), e as i32))
    }

    /// Build from `(site, exponent of A^{-1})` pairs; returns `None` if any
    /// merged exponent is negative.
    pub fn try_from_entries(entries: impl IntoIterator<Item = (Site, i32)>) -> Option<Self> {
        let e = SparseExps::from_entries(entries);
        e.entries().iter().all(|(_, x)| *x > 0).then_some(AVector(e))
    }

    pub fn entries(&self) -> &[(Site, i32)] {
        self.0.entries()
    }

    pub fn exps(&self) -> &SparseExps {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `A^{-1}` factors.
    pub fn height(&self) -> u32 {
        self.entries().iter().map(|(_, e)| *e as u32).sum()
    }

    pub fn mul(&self, other: &AVector) -> AVector {
        AVector(self.0.mul(&other.0))
    }

    pub fn exponent(&self, node: usize, coord: &SpectralCoord) -> u32 {
        self.0.get(&Site::new(node, coord.clone())) as u32
    }

    pub fn contains(&self, node: usize, coord: &SpectralCoord) -> bool {
        self.exponent(node, coord) > 0
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &AVector) -> Option<AVector> {
        let d = self.0.add_scaled(&other.0, -1);
        d.entries().iter().all(|(_, e)| *e > 0).then_some(AVector(d))
    }

    pub fn shift(&self, a: &SpectralCoord) -> AVector {
        AVector(self.0.shift(a))
    }

    pub fn substitute(&self, name: &str, value: &SpectralCoord) -> AVector {
        AVector(self.0.map_coords(|c| c.substitute(name, value)))
    }

    pub fn map_sites(&self, f: impl Fn(&Site) -> Site) -> AVector {
        AVector(SparseExps::from_entries(
            self.entries().iter().map(|(s, e)| (f(s), *e)),
        ))
    }

    /// Every coordinate lies in `x + (1/2)Z`.
    pub fn in_half_lattice_of(&self, x: &SpectralCoord) -> bool {
        self.entries().iter().all(|(s, _)| {
            x.offset_to(&s.coord)
                .is_some_and(|d| crate::rational::is_half_integer(&d))
        })
    }
}

impl Ord for AVector {
    /// Canonical term order: by height, then lexicographically by entries.
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
