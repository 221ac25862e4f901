//! Conversions between the Psi, Y and A presentations and the weight
//! projection.

use num_traits::Zero;

use super::coord::SpectralCoord;
use super::monomial::{AVector, PsiMonomial, Site, YMonomial};
use crate::cartan::{CartanData, Weight};
use crate::rational::{exact_multiple, half, q, Q};

/// `A_{i,x} = prod_j Psi_{j,x+d_ij} / Psi_{j,x-d_ij}`.
pub fn expand_a_to_psi(cartan: &CartanData, i: usize, x: &SpectralCoord) -> PsiMonomial {
    let mut entries = Vec::new();
    for j in cartan.nodes() {
        let dij = cartan.dsym(i, j);
        if dij.is_zero() {
            continue;
        }
        entries.push((Site::new(j, x + dij), 1));
        entries.push((Site::new(j, x - dij), -1));
    }
    PsiMonomial::from_entries(entries)
}

/// `Y_{i,x} = Psi_{i,x+d_i/2} / Psi_{i,x-d_i/2}`.
pub fn expand_y_to_psi(cartan: &CartanData, i: usize, x: &SpectralCoord) -> PsiMonomial {
    let h = cartan.d_q(i) * half();
    PsiMonomial::from_entries([(Site::new(i, x + h), 1), (Site::new(i, x - h), -1)])
}

/// `A_{i,x}` as a Y-monomial, read off the classification of neighbours by
/// `c_{ji}`.
pub fn expand_a_to_y(cartan: &CartanData, i: usize, x: &SpectralCoord) -> YMonomial {
    let h = cartan.d_q(i) * half();
    let mut entries = vec![(Site::new(i, x - h), 1), (Site::new(i, x + h), 1)];
    for j in cartan.neighbours(i) {
        let offsets: &[Q] = match cartan.c(j, i) {
            -1 => &[Q::zero()],
            -2 => &[half(), -half()],
            -3 => &[q(1), q(0), q(-1)],
            other => unreachable!("Cartan entry {other} off the diagonal"),
        };
        entries.extend(offsets.iter().map(|o| (Site::new(j, x + *o), -1)));
    }
    YMonomial::from_entries(entries)
}

pub fn y_to_psi(cartan: &CartanData, m: &YMonomial) -> PsiMonomial {
    let h: Vec<Q> = cartan.nodes().map(|i| cartan.d_q(i) * half()).collect();
    PsiMonomial::from_entries(m.entries().iter().flat_map(|(s, e)| {
        [
            (Site::new(s.node, &s.coord + h[s.node]), *e),
            (Site::new(s.node, &s.coord - h[s.node]), -*e),
        ]
    }))
}

/// Rewrite a Psi-monomial as a product of `Y`s, if it lies in that lattice.
///
/// At each node the coordinates split into classes modulo `d_i` (with equal
/// symbolic part); inside a class the Y-exponent between consecutive points
/// is minus the running exponent sum, which must vanish at the end.
pub fn psi_to_y(cartan: &CartanData, m: &PsiMonomial) -> Option<YMonomial> {
    let mut out = Vec::new();
    for i in cartan.nodes() {
        let step = cartan.d_q(i);
        let mut classes: Vec<Vec<(SpectralCoord, i32)>> = Vec::new();
        for (c, e) in m.exps().node_entries(i) {
            let slot = classes.iter_mut().find(|cl| {
                cl[0]
                    .0
                    .offset_to(c)
                    .and_then(|d| exact_multiple(&d, &step))
                    .is_some()
            });
            match slot {
                Some(cl) => cl.push((c.clone(), e)),
                None => classes.push(vec![(c.clone(), e)]),
            }
        }
        for cl in classes {
            // Entries arrive sorted, and within a class sorting by the
            // rational part is the coordinate order.
            let mut running = 0i32;
            for w in 0..cl.len() {
                running += cl[w].1;
                if w + 1 == cl.len() {
                    if running != 0 {
                        return None;
                    }
                    break;
                }
                if running == 0 {
                    continue;
                }
                let gap = cl[w].0.offset_to(&cl[w + 1].0)?;
                let n = exact_multiple(&gap, &step)?;
                for s in 0..n {
                    let y = &cl[w].0 + (step * q(s) + step * half());
                    out.push((Site::new(i, y), -running));
                }
            }
        }
    }
    Some(YMonomial::from_entries(out))
}

/// The A-ledger `prod A^{-e}` as a Psi-monomial.
pub fn avector_to_psi(cartan: &CartanData, v: &AVector) -> PsiMonomial {
    let mut out = PsiMonomial::identity();
    for (s, e) in v.entries() {
        out = out.mul(&expand_a_to_psi(cartan, s.node, &s.coord).pow(-e));
    }
    out
}

pub fn avector_to_y(cartan: &CartanData, v: &AVector) -> YMonomial {
    let mut out = YMonomial::identity();
    for (s, e) in v.entries() {
        out = out.mul(&expand_a_to_y(cartan, s.node, &s.coord).pow(-e));
    }
    out
}

/// Weight with coordinates in the spectral field, in the fundamental-weight
/// basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicWeight {
    pub coords: Vec<SpectralCoord>,
}

impl SymbolicWeight {
    pub fn zero(rank: usize) -> Self {
        SymbolicWeight {
            coords: vec![SpectralCoord::zero(); rank],
        }
    }

    pub fn add(&self, other: &SymbolicWeight) -> SymbolicWeight {
        SymbolicWeight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn to_rational(&self) -> Option<Weight> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.as_rational())
            .collect::<Option<Vec<_>>>()?;
        Some(Weight { coords })
    }
}

impl From<&Weight> for SymbolicWeight {
    fn from(w: &Weight) -> Self {
        SymbolicWeight {
            coords: w.coords.iter().map(|c| SpectralCoord::rational(*c)).collect(),
        }
    }
}

/// `Psi_{i,a}^e` contributes `(e a / d_i) varpi_i`.
pub fn weight_projection(cartan: &CartanData, m: &PsiMonomial) -> SymbolicWeight {
    let mut w = SymbolicWeight::zero(cartan.rank());
    for (s, e) in m.entries() {
        let scale = q(*e as i64) / cartan.d_q(s.node);
        w.coords[s.node] += &(&s.coord * scale);
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> SpectralCoord {
        s.parse().unwrap()
    }

    #[test]
    fn sl3_root_and_projection() {
        let c = CartanData::of("A2").unwrap();
        let a = expand_a_to_psi(&c, 0, &sc("0"));
        let expected = PsiMonomial::from_entries([
            (Site::new(0, sc("1")), 1),
            (Site::new(0, sc("-1")), -1),
            (Site::new(1, sc("-1/2")), 1),
            (Site::new(1, sc("1/2")), -1),
        ]);
        assert_eq!(a, expected);
        let w = weight_projection(&c, &a).to_rational().unwrap();
        assert_eq!(w, c.root_to_weight(&c.simple_root(0)));
    }

    #[test]
    fn psi_to_y_inverts_y_to_psi() {
        let c = CartanData::of("G2").unwrap();
        for i in c.nodes() {
            let x = sc("k+1/3");
            let y = expand_a_to_y(&c, i, &x).mul(&YMonomial::single(i, sc("2"), 3));
            let psi = y_to_psi(&c, &y);
            assert_eq!(psi_to_y(&c, &psi), Some(y));
        }
        let lone = PsiMonomial::single(0, 0, 1);
        assert_eq!(psi_to_y(&c, &lone), None);
    }
}
