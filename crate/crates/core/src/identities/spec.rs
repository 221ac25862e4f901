//! Serializable descriptions of identity checks and their dispatch.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cartan::CartanData;
use crate::characters::{CharacterReport, EngineConfig};
use crate::error::EngineError;
use crate::lweights::SpectralCoord;

use super::support::{
    check_demazure_support, check_kr_skeleton, check_m_support, SupportReport,
};
use super::tq::{verify_factorization, verify_tq, TqReport};
use super::tsystem::verify_tsystem;
use super::two_term::{verify_two_term, TwoTermParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    Tsystem,
    Tq,
    TwoTerm,
    Factorization,
    KrSkeleton,
    DemazureSupport,
    MSupport,
}

/// One identity instance. Nodes are 1-based; coordinates use the monomial
/// grammar. Unused fields are ignored by the respective kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySpec {
    pub kind: IdentityKind,
    #[serde(rename = "type")]
    pub lie_type: String,
    pub node: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    /// Orders used for the TQ routes; defaults to `[6, 12]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ks: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<u32>,
}

impl IdentitySpec {
    pub fn new(kind: IdentityKind, lie_type: &str, node: usize) -> Self {
        IdentitySpec {
            kind,
            lie_type: lie_type.to_string(),
            node,
            k: None,
            ks: None,
            t: None,
            x: None,
            y: None,
            a: None,
            b: None,
            height: None,
        }
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_t(mut self, t: u32) -> Self {
        self.t = Some(t);
        self
    }

    pub fn with_height(mut self, n: u32) -> Self {
        self.height = Some(n);
        self
    }

    pub fn with_coords(mut self, x: &str, y: &str, a: &str, b: &str) -> Self {
        self.x = Some(x.into());
        self.y = Some(y.into());
        self.a = Some(a.into());
        self.b = Some(b.into());
        self
    }

    pub fn label(&self) -> String {
        let mut s = format!("{:?} {} node {}", self.kind, self.lie_type, self.node);
        if let Some(k) = self.k {
            s += &format!(" k={k}");
        }
        if let Some(t) = self.t {
            s += &format!(" t={t}");
        }
        if let Some(n) = self.height {
            s += &format!(" N={n}");
        }
        s
    }
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Character(CharacterReport),
    Tq(Box<TqReport>),
    Support(SupportReport),
}

impl Outcome {
    pub fn pass(&self) -> bool {
        match self {
            Outcome::Character(r) => r.pass,
            Outcome::Tq(r) => r.pass,
            Outcome::Support(r) => r.pass,
        }
    }

    pub fn to_json(&self, cartan: &CartanData) -> Value {
        match self {
            Outcome::Character(r) => r.to_json(cartan),
            Outcome::Tq(r) => tq_json(r, cartan),
            Outcome::Support(r) => serde_json::to_value(r).expect("plain data"),
        }
    }
}

pub fn tq_json(r: &TqReport, cartan: &CartanData) -> Value {
    let summary = |c: &CharacterReport| {
        json!({
            "pass": c.pass,
            "agreeing_heights": c.agreeing_heights(),
            "mismatches": c.mismatches,
        })
    };
    json!({
        "pass": r.pass,
        "rhs_symbolic": r.rhs_symbolic.to_json(cartan),
        "cases": r.cases.iter().map(|c| json!({
            "k": c.k,
            "direct_vs_rhs": summary(&c.direct),
            "via_ses_vs_rhs": summary(&c.via_ses),
            "direct_vs_via_ses": summary(&c.routes),
            "lifted_vs_symbolic": summary(&c.lifted),
        })).collect::<Vec<_>>(),
        "proxy": r.proxy.iter().map(|(a, b, c)| json!({
            "k": [a, b],
            "report": summary(c),
        })).collect::<Vec<_>>(),
    })
}

fn coord(field: &Option<String>, default: &str) -> Result<SpectralCoord, EngineError> {
    Ok(field.as_deref().unwrap_or(default).parse()?)
}

fn need<T: Copy>(v: Option<T>, name: &str, kind: IdentityKind) -> Result<T, EngineError> {
    v.ok_or_else(|| EngineError::InvalidParameters(format!("{kind:?} needs '{name}'")))
}

/// Resolve the Cartan data and the 0-based node of a spec.
pub fn resolve(spec: &IdentitySpec) -> Result<(CartanData, usize), EngineError> {
    let cartan = CartanData::of(&spec.lie_type)?;
    if spec.node == 0 || spec.node > cartan.rank() {
        return Err(EngineError::InvalidNode {
            node: spec.node,
            rank: cartan.rank(),
        });
    }
    Ok((cartan, spec.node - 1))
}

pub fn run_spec(spec: &IdentitySpec, config: &EngineConfig) -> Result<Outcome, EngineError> {
    let (cartan, i) = resolve(spec)?;
    let kind = spec.kind;
    let n = spec.height.unwrap_or(3);
    if n == 0 && kind != IdentityKind::Tsystem {
        return Err(EngineError::InvalidParameters("height bound must be at least 1".into()));
    }
    let x = coord(&spec.x, "0")?;
    Ok(match kind {
        IdentityKind::Tsystem => Outcome::Character(verify_tsystem(
            &cartan,
            i,
            need(spec.k, "k", kind)?,
            spec.t.unwrap_or(0),
            config,
        )?),
        IdentityKind::Tq => {
            let ks = match (&spec.ks, spec.k) {
                (Some(ks), _) => ks.clone(),
                (None, Some(k)) => vec![k],
                (None, None) => vec![6, 12],
            };
            Outcome::Tq(Box::new(verify_tq(&cartan, i, &x, &ks, n, config)?))
        }
        IdentityKind::TwoTerm => {
            let (a, b, y) = (coord(&spec.a, "a")?, coord(&spec.b, "b")?, coord(&spec.y, "y")?);
            let x = coord(&spec.x, "x")?;
            let p = TwoTermParams {
                a: &a,
                b: &b,
                x: &x,
                y: &y,
            };
            Outcome::Character(verify_two_term(&cartan, i, &p, n, config)?)
        }
        IdentityKind::Factorization => Outcome::Character(verify_factorization(
            &cartan,
            i,
            spec.k.unwrap_or(6),
            &x,
            n,
            config,
        )?),
        IdentityKind::KrSkeleton => Outcome::Support(check_kr_skeleton(
            &cartan,
            i,
            need(spec.k, "k", kind)?,
            &x,
            spec.height.unwrap_or(2),
            config,
        )?),
        IdentityKind::DemazureSupport => Outcome::Support(check_demazure_support(
            &cartan,
            i,
            need(spec.k, "k", kind)?,
            &x,
            spec.height,
            config,
        )?),
        IdentityKind::MSupport => Outcome::Support(check_m_support(
            &cartan,
            i,
            spec.k.unwrap_or(6),
            &x,
            n,
            config,
        )?),
    })
}

#[derive(Debug)]
pub struct SuiteEntry {
    pub index: usize,
    pub spec: IdentitySpec,
    pub outcome: Result<Outcome, EngineError>,
}

/// Run specs independently; entries come back in spec order.
pub fn run_suite(specs: &[IdentitySpec], config: &EngineConfig) -> Vec<SuiteEntry> {
    let indexed: Vec<(usize, &IdentitySpec)> = specs.iter().enumerate().collect();
    config
        .exec
        .map_coarse(&indexed, |(index, spec)| SuiteEntry {
            index: *index,
            spec: (*spec).clone(),
            outcome: run_spec(spec, config),
        })
}
