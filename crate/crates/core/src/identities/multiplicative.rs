//! Relabeling of additive data in the multiplicative convention
//! `Psi_{i,a} -> Phi_{i,q^a}`. Only the exponent `a` of `q^a` is stored, so `q`
//! is never evaluated.

use std::fmt;

use serde::Serialize;

use crate::cartan::CartanData;
use crate::lweights::{PsiMonomial, Site, SparseExps, SpectralCoord};
use crate::rational::Q;

use super::tq::K_SYMBOL;

/// Product of `Phi_{i,q^a}^{e}`, keyed by `(i, a)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiplicativeMonomial(SparseExps);

impl MultiplicativeMonomial {
    pub fn identity() -> Self {
        MultiplicativeMonomial(SparseExps::identity())
    }

    /// `Phi_{node, q^exponent}`.
    pub fn phi(node: usize, exponent: SpectralCoord) -> Self {
        MultiplicativeMonomial(SparseExps::single(Site::new(node, exponent), 1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        MultiplicativeMonomial(self.0.mul(&other.0))
    }

    pub fn div(&self, other: &Self) -> Self {
        MultiplicativeMonomial(self.0.add_scaled(&other.0, -1))
    }

    pub fn entries(&self) -> &[(Site, i32)] {
        self.0.entries()
    }
}

impl fmt::Display for MultiplicativeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |s: &Site| {
            let a = s.coord.to_string();
            if !a.chars().all(|c| c.is_ascii_alphanumeric()) {
                format!("Phi[{},q^({a})]", s.node + 1)
            } else {
                format!("Phi[{},q^{a}]", s.node + 1)
            }
        };
        let pos: Vec<_> = self.entries().iter().filter(|(_, e)| *e > 0).collect();
        if pos.is_empty() {
            write!(f, "1")?;
        }
        for (n, (s, e)) in pos.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", factor(s))?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        for (s, e) in self.entries().iter().filter(|(_, e)| *e < 0) {
            write!(f, "/{}", factor(s))?;
            if *e != -1 {
                write!(f, "^{}", -e)?;
            }
        }
        Ok(())
    }
}

impl Serialize for MultiplicativeMonomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

pub fn to_multiplicative(m: &PsiMonomial) -> MultiplicativeMonomial {
    MultiplicativeMonomial(m.exps().clone())
}

/// Module class labels appearing in the three-term identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClassKind {
    /// Irreducible module `L(.)`.
    Irreducible,
    /// Irreducible module `\mathcal{L}(.)` of the category O type.
    Category,
    /// Asymptotic module `SL(.)`.
    Asymptotic,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ModuleClass<M> {
    pub kind: ClassKind,
    pub weight: M,
}

/// `[lhs_0][lhs_1]... = sum_t prod [rhs_t]`, with factors and summands kept
/// in a canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeTerm<M: Ord> {
    pub lhs: Vec<ModuleClass<M>>,
    pub rhs: Vec<Vec<ModuleClass<M>>>,
}

impl<M: Ord + Clone> ThreeTerm<M> {
    fn canonical(mut self) -> Self {
        self.lhs.sort();
        for t in &mut self.rhs {
            t.sort();
        }
        self.rhs.sort();
        self
    }

    pub fn map<N: Ord + Clone>(&self, f: impl Fn(&M) -> N) -> ThreeTerm<N> {
        let g = |c: &ModuleClass<M>| ModuleClass {
            kind: c.kind,
            weight: f(&c.weight),
        };
        ThreeTerm {
            lhs: self.lhs.iter().map(g).collect(),
            rhs: self.rhs.iter().map(|t| t.iter().map(g).collect()).collect(),
        }
        .canonical()
    }
}

impl<M: Ord + fmt::Display> fmt::Display for ThreeTerm<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let class = |c: &ModuleClass<M>| {
            let name = match c.kind {
                ClassKind::Irreducible => "L",
                ClassKind::Category => "L^O",
                ClassKind::Asymptotic => "SL",
            };
            format!("[{name}({})]", c.weight)
        };
        let side = |cs: &[ModuleClass<M>]| cs.iter().map(class).collect::<String>();
        let rhs: Vec<String> = self.rhs.iter().map(|t| side(t)).collect();
        write!(f, "{} = {}", side(&self.lhs), rhs.join(" + "))
    }
}

fn psi_ratio(node: usize, num: SpectralCoord, den: SpectralCoord) -> PsiMonomial {
    PsiMonomial::from_entries([(Site::new(node, num), 1), (Site::new(node, den), -1)])
}

/// The additive TQ relation for node `i` at `(k, x, y)`.
pub fn additive_tq(
    cartan: &CartanData,
    i: usize,
    k: &SpectralCoord,
    x: &SpectralCoord,
    y: &SpectralCoord,
) -> ThreeTerm<PsiMonomial> {
    let di = cartan.d_q(i);
    let class = |kind, weight| ModuleClass { kind, weight };
    let lhs = vec![
        class(
            ClassKind::Irreducible,
            crate::characters::m_weight(cartan, i, k, x),
        ),
        class(ClassKind::Category, psi_ratio(i, x.clone(), y.clone())),
    ];
    let mut plus = vec![class(ClassKind::Asymptotic, psi_ratio(i, x + di, y.clone()))];
    let mut minus = vec![class(ClassKind::Asymptotic, psi_ratio(i, x - di, y.clone()))];
    for j in cartan.neighbours(i) {
        let dij = cartan.dsym(i, j);
        let bottom = &(x + dij) - &(k * di);
        plus.push(class(ClassKind::Asymptotic, psi_ratio(j, x + dij, bottom.clone())));
        minus.push(class(ClassKind::Asymptotic, psi_ratio(j, x - dij, bottom)));
    }
    ThreeTerm {
        lhs,
        rhs: vec![plus, minus],
    }
    .canonical()
}

/// Exponent arithmetic for `q`-powers: `a q_{ij}^{s} q_i^{t}` has exponent
/// `alpha + s d_ij + t d_i`.
fn qexp(alpha: &SpectralCoord, terms: &[(Q, SpectralCoord)]) -> SpectralCoord {
    terms
        .iter()
        .fold(alpha.clone(), |acc, (d, power)| &acc + &(power * *d))
}

/// The quantum affine three-term relation written from its own display
/// with `a = q^alpha`, `c = q^gamma`.
pub fn quantum_tq(
    cartan: &CartanData,
    i: usize,
    k: &SpectralCoord,
    alpha: &SpectralCoord,
    gamma: &SpectralCoord,
) -> ThreeTerm<MultiplicativeMonomial> {
    let one = SpectralCoord::int(1);
    let minus_one = SpectralCoord::int(-1);
    let minus_k = -k;
    let di = cartan.d_q(i);
    let phi = MultiplicativeMonomial::phi;
    let ratio = |node, num: SpectralCoord, den: SpectralCoord| phi(node, num).div(&phi(node, den));
    let class = |kind, weight| ModuleClass { kind, weight };
    let mut top = ratio(i, qexp(alpha, &[(di, one.clone())]), alpha.clone());
    let mut plus = vec![class(
        ClassKind::Asymptotic,
        ratio(i, qexp(alpha, &[(di, one.clone())]), gamma.clone()),
    )];
    let mut minus = vec![class(
        ClassKind::Asymptotic,
        ratio(i, qexp(alpha, &[(di, minus_one.clone())]), gamma.clone()),
    )];
    for j in cartan.neighbours(i) {
        let dij = cartan.dsym(i, j);
        let low = qexp(alpha, &[(dij, one.clone()), (di, minus_k.clone())]);
        top = top.mul(&ratio(j, qexp(alpha, &[(dij, one.clone())]), low.clone()));
        plus.push(class(
            ClassKind::Asymptotic,
            ratio(j, qexp(alpha, &[(dij, one.clone())]), low.clone()),
        ));
        minus.push(class(
            ClassKind::Asymptotic,
            ratio(j, qexp(alpha, &[(dij, minus_one.clone())]), low),
        ));
    }
    ThreeTerm {
        lhs: vec![
            class(ClassKind::Irreducible, top),
            class(ClassKind::Category, ratio(i, alpha.clone(), gamma.clone())),
        ],
        rhs: vec![plus, minus],
    }
    .canonical()
}

#[derive(Clone, Debug, Serialize)]
pub struct TranslationReport {
    pub pass: bool,
    pub translated: ThreeTerm<MultiplicativeMonomial>,
    pub quantum: ThreeTerm<MultiplicativeMonomial>,
}

/// Translate the additive TQ relation at generic `k` and compare it with
/// the quantum display at `alpha = x`, `gamma = y`.
pub fn verify_tq_translation(
    cartan: &CartanData,
    i: usize,
    x: &SpectralCoord,
    y: &SpectralCoord,
) -> TranslationReport {
    let k = SpectralCoord::symbol(K_SYMBOL);
    let translated = additive_tq(cartan, i, &k, x, y).map(to_multiplicative);
    let quantum = quantum_tq(cartan, i, &k, x, y);
    TranslationReport {
        pass: translated == quantum,
        translated,
        quantum,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lweights::expand_y_to_psi;

    #[test]
    fn y_translation() {
        let c = CartanData::of("B2").unwrap();
        let a: SpectralCoord = "a".parse().unwrap();
        for i in c.nodes() {
            let h = c.d_q(i) * crate::rational::half();
            let got = to_multiplicative(&expand_y_to_psi(&c, i, &a));
            let want = MultiplicativeMonomial::phi(i, &a + h).div(&MultiplicativeMonomial::phi(i, &a - h));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn sl3_tq_matches_quantum_display() {
        let c = CartanData::of("A2").unwrap();
        let r = verify_tq_translation(&c, 0, &"x".parse().unwrap(), &"y".parse().unwrap());
        assert!(r.pass);
        assert_eq!(
            MultiplicativeMonomial::phi(1, "1/2".parse().unwrap()).to_string(),
            "Phi[2,q^(1/2)]"
        );
    }
}
