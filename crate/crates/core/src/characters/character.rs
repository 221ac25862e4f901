//! Truncated normalized q-characters stored on the A-ledger.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rustc_hash::FxHashMap;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cartan::CartanData;
use crate::error::EngineError;
use crate::exec::Exec;
use crate::lweights::{avector_to_psi, AVector, PsiMonomial, SpectralCoord};

/// A q-character `top * sum_v coeff(v) v` where `v` ranges over products of
/// inverse simple roots. Terms are known exactly up to `height_bound`
/// (`None` means the character is complete).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedCharacter {
    top: PsiMonomial,
    terms: BTreeMap<AVector, u64>,
    height_bound: Option<u32>,
}

fn min_bound(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn within(bound: Option<u32>, h: u32) -> bool {
    bound.is_none_or(|b| h <= b)
}

impl TruncatedCharacter {
    /// The one-term character of a one-dimensional module.
    pub fn monomial(top: PsiMonomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(AVector::one(), 1);
        TruncatedCharacter {
            top,
            terms,
            height_bound: None,
        }
    }

    pub fn one() -> Self {
        Self::monomial(PsiMonomial::identity())
    }

    /// Assemble from parts; zero coefficients and terms above the bound are
    /// dropped. Fails if the top coefficient is not 1.
    pub fn from_terms(
        top: PsiMonomial,
        terms: impl IntoIterator<Item = (AVector, u64)>,
        height_bound: Option<u32>,
    ) -> Result<Self, EngineError> {
        let mut map = BTreeMap::new();
        for (v, c) in terms {
            if c > 0 && within(height_bound, v.height()) {
                *map.entry(v).or_insert(0) += c;
            }
        }
        if map.get(&AVector::one()) != Some(&1) {
            return Err(EngineError::InvalidParameters(
                "a normalized character has leading coefficient 1".into(),
            ));
        }
        Ok(TruncatedCharacter {
            top,
            terms: map,
            height_bound,
        })
    }

    pub fn top(&self) -> &PsiMonomial {
        &self.top
    }

    pub fn terms(&self) -> &BTreeMap<AVector, u64> {
        &self.terms
    }

    pub fn height_bound(&self) -> Option<u32> {
        self.height_bound
    }

    pub fn is_complete(&self) -> bool {
        self.height_bound.is_none()
    }

    pub fn coeff(&self, v: &AVector) -> u64 {
        self.terms.get(v).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients; the dimension when complete.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn max_height(&self) -> u32 {
        self.terms.keys().map(AVector::height).max().unwrap_or(0)
    }

    pub fn truncate(&self, n: u32) -> Self {
        let bound = min_bound(self.height_bound, Some(n));
        TruncatedCharacter {
            top: self.top.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| v.height() <= n)
                .map(|(v, c)| (v.clone(), *c))
                .collect(),
            height_bound: bound,
        }
    }

    /// Same terms with a different highest l-weight.
    pub fn with_top(&self, top: PsiMonomial) -> Self {
        TruncatedCharacter {
            top,
            terms: self.terms.clone(),
            height_bound: self.height_bound,
        }
    }

    pub fn shift(&self, a: &SpectralCoord) -> Self {
        TruncatedCharacter {
            top: self.top.shift(a),
            terms: self.terms.iter().map(|(v, c)| (v.shift(a), *c)).collect(),
            height_bound: self.height_bound,
        }
    }

    pub fn substitute(&self, name: &str, value: &SpectralCoord) -> Self {
        TruncatedCharacter {
            top: self.top.substitute(name, value),
            terms: self
                .terms
                .iter()
                .map(|(v, c)| (v.substitute(name, value), *c))
                .collect(),
            height_bound: self.height_bound,
        }
    }

    /// The l-weight `top * v` of a term.
    pub fn lweight(&self, cartan: &CartanData, v: &AVector) -> PsiMonomial {
        self.top.mul(&avector_to_psi(cartan, v))
    }

    pub fn mul(&self, other: &Self) -> Self {
        char_mul_with(Exec::default(), self, other)
    }

    /// Merge `other` into `self`, where `other.top = self.top * offset`.
    pub fn add_shifted(
        &self,
        cartan: &CartanData,
        other: &Self,
        offset: &AVector,
    ) -> Result<Self, EngineError> {
        if self.lweight(cartan, offset) != other.top {
            return Err(EngineError::TopMismatch(format!(
                "{} is not {} times {}",
                other.top, self.top, offset
            )));
        }
        let bound = min_bound(
            self.height_bound,
            other.height_bound.map(|b| b + offset.height()),
        );
        let mut terms = self.terms.clone();
        for (v, c) in &other.terms {
            *terms.entry(v.mul(offset)).or_insert(0) += c;
        }
        terms.retain(|v, _| within(bound, v.height()));
        Ok(TruncatedCharacter {
            top: self.top.clone(),
            terms,
            height_bound: bound,
        })
    }

    /// Terms sorted in canonical order (height, then ledger), restricted to
    /// one height.
    pub fn layer(&self, h: u32) -> impl Iterator<Item = (&AVector, &u64)> {
        self.terms.iter().filter(move |(v, _)| v.height() == h)
    }

    pub fn to_json(&self, cartan: &CartanData) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(v, c)| {
                json!({
                    "avector": v.to_string(),
                    "coeff": c,
                    "lweight": self.lweight(cartan, v).to_string(),
                })
            })
            .collect();
        json!({
            "top": self.top.to_string(),
            "height_bound": self.height_bound,
            "terms": terms,
        })
    }

    /// Aligned human-readable table.
    pub fn to_table(&self, cartan: &CartanData) -> String {
        let rows: Vec<(String, String, String)> = self
            .terms
            .iter()
            .map(|(v, c)| {
                (
                    v.height().to_string(),
                    c.to_string(),
                    format!("{}    {}", v, self.lweight(cartan, v)),
                )
            })
            .collect();
        let wh = rows.iter().map(|r| r.0.len()).max().unwrap_or(1).max(1);
        let wc = rows.iter().map(|r| r.1.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let bound = match self.height_bound {
            Some(b) => b.to_string(),
            None => "complete".into(),
        };
        let _ = writeln!(out, "top {}  (height bound: {bound})", self.top);
        let _ = writeln!(out, "{:>wh$}  {:>wc$}  term", "h", "coeff");
        for (h, c, t) in rows {
            let _ = writeln!(out, "{h:>wh$}  {c:>wc$}  {t}");
        }
        out
    }
}

/// Product of characters; the product is truncated at the smaller bound.
pub fn char_mul(a: &TruncatedCharacter, b: &TruncatedCharacter) -> TruncatedCharacter {
    char_mul_with(Exec::default(), a, b)
}

pub fn char_mul_with(
    exec: Exec,
    a: &TruncatedCharacter,
    b: &TruncatedCharacter,
) -> TruncatedCharacter {
    let bound = min_bound(a.height_bound, b.height_bound);
    let left: Vec<(&AVector, u64)> = a
        .terms
        .iter()
        .filter(|(v, _)| within(bound, v.height()))
        .map(|(v, c)| (v, *c))
        .collect();
    let right: Vec<(&AVector, u32, u64)> = b
        .terms
        .iter()
        .map(|(v, c)| (v, v.height(), *c))
        .collect();
    let partials = exec.map(&left, |(va, ca)| {
        let ha = va.height();
        let mut acc: FxHashMap<AVector, u64> = FxHashMap::default();
        for (vb, hb, cb) in &right {
            if within(bound, ha + hb) {
                *acc.entry(va.mul(vb)).or_insert(0) += ca * cb;
            }
        }
        acc
    });
    let mut terms = BTreeMap::new();
    for part in partials {
        for (v, c) in part {
            *terms.entry(v).or_insert(0) += c;
        }
    }
    TruncatedCharacter {
        top: a.top.mul(&b.top),
        terms,
        height_bound: bound,
    }
}

pub fn char_product<'a>(
    exec: Exec,
    factors: impl IntoIterator<Item = &'a TruncatedCharacter>,
) -> TruncatedCharacter {
    factors
        .into_iter()
        .fold(TruncatedCharacter::one(), |acc, f| char_mul_with(exec, &acc, f))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub avector: String,
    pub height: u32,
    pub lhs: u64,
    pub rhs: u64,
}

/// Outcome of comparing two characters term by term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterReport {
    pub pass: bool,
    pub lhs: TruncatedCharacter,
    pub rhs: TruncatedCharacter,
    pub tops_agree: bool,
    pub compared_up_to: Option<u32>,
    pub mismatches: Vec<Mismatch>,
}

impl CharacterReport {
    pub fn compare(lhs: TruncatedCharacter, rhs: TruncatedCharacter) -> Self {
        let bound = min_bound(lhs.height_bound, rhs.height_bound);
        let tops_agree = lhs.top == rhs.top;
        let mut mismatches = Vec::new();
        let keys: std::collections::BTreeSet<&AVector> =
            lhs.terms.keys().chain(rhs.terms.keys()).collect();
        for v in keys {
            if !within(bound, v.height()) {
                continue;
            }
            let (l, r) = (lhs.coeff(v), rhs.coeff(v));
            if l != r {
                mismatches.push(Mismatch {
                    avector: v.to_string(),
                    height: v.height(),
                    lhs: l,
                    rhs: r,
                });
            }
        }
        CharacterReport {
            pass: tops_agree && mismatches.is_empty(),
            lhs,
            rhs,
            tops_agree,
            compared_up_to: bound,
            mismatches,
        }
    }

    pub fn swapped(&self) -> Self {
        CharacterReport {
            pass: self.pass,
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            tops_agree: self.tops_agree,
            compared_up_to: self.compared_up_to,
            mismatches: self
                .mismatches
                .iter()
                .map(|m| Mismatch {
                    lhs: m.rhs,
                    rhs: m.lhs,
                    ..m.clone()
                })
                .collect(),
        }
    }

    /// Heights `0..=bound` at which the two sides agree completely.
    pub fn agreeing_heights(&self) -> Vec<u32> {
        let top = self
            .compared_up_to
            .unwrap_or_else(|| self.lhs.max_height().max(self.rhs.max_height()));
        (0..=top)
            .filter(|h| self.mismatches.iter().all(|m| m.height != *h))
            .collect()
    }

    pub fn to_json(&self, cartan: &CartanData) -> Value {
        json!({
            "pass": self.pass,
            "tops_agree": self.tops_agree,
            "compared_up_to": self.compared_up_to,
            "mismatches": self.mismatches,
            "lhs": self.lhs.to_json(cartan),
            "rhs": self.rhs.to_json(cartan),
        })
    }

    pub fn diff_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: lhs top {}, rhs top {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.lhs.top,
            self.rhs.top
        );
        if !self.mismatches.is_empty() {
            let w = self
                .mismatches
                .iter()
                .map(|m| m.avector.len())
                .max()
                .unwrap_or(0);
            let _ = writeln!(out, "  {:<w$}  {:>6}  {:>6}", "term", "lhs", "rhs");
            for m in &self.mismatches {
                let _ = writeln!(out, "  {:<w$}  {:>6}  {:>6}", m.avector, m.lhs, m.rhs);
            }
        }
        out
    }
}
