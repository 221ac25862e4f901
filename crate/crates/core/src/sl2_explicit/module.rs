use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use super::matrix::{big, big_int, fmt_big, pow, BigQ, Matrix};
use crate::error::EngineError;
use crate::rational::{fmt_q, Q};

/// Which representation of the rank-one Yangian is realised.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Sl2Kind {
    /// The `(k+1)`-dimensional KR module with highest l-weight
    /// `Psi_{x+k}/Psi_x`.
    Finite { k: u32 },
    /// The infinite-dimensional module with highest l-weight
    /// `Psi_{x+k}/Psi_x`, cut to the first `dim` basis vectors.
    Truncated {
        #[serde(serialize_with = "ser_q")]
        k: Q,
        dim: usize,
    },
}

fn ser_q<S: serde::Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(v))
}

impl Sl2Kind {
    pub fn k(&self) -> Q {
        match self {
            Sl2Kind::Finite { k } => Q::from_integer(*k as i64),
            Sl2Kind::Truncated { k, .. } => *k,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Sl2Kind::Finite { k } => *k as usize + 1,
            Sl2Kind::Truncated { dim, .. } => *dim,
        }
    }
}

/// Basis vectors this close to the cut of a truncated module are excluded
/// from relation checks: a product of two lowering operators leaves the
/// basis there.
pub const SAFE_MARGIN: usize = 2;

/// Explicit matrices of `x^+_n`, `x^-_n` and `xi_n` on `v_0, ..., v_{dim-1}`.
///
/// Modes are stored up to `2 * mode_bound + 1`, which is what the defining
/// relations with both mode indices at most `mode_bound` consume.
#[derive(Clone, Debug)]
pub struct Sl2Module {
    pub kind: Sl2Kind,
    pub x: Q,
    pub mode_bound: usize,
    pub x_plus: Vec<Matrix>,
    pub x_minus: Vec<Matrix>,
    pub xi: Vec<Matrix>,
}

impl Sl2Module {
    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    /// Number of leading basis vectors on which relation checks are exact.
    pub fn safe_interior(&self) -> usize {
        match self.kind {
            Sl2Kind::Finite { .. } => self.dim(),
            Sl2Kind::Truncated { dim, .. } => dim - SAFE_MARGIN,
        }
    }

    pub fn stored_modes(&self) -> usize {
        self.xi.len()
    }

    /// Eigenvalues of `xi_0, xi_1, ...` on `v_i`.
    pub fn xi_eigenvalues(&self, i: usize) -> Vec<BigQ> {
        self.xi.iter().map(|m| m.get(i, i).clone()).collect()
    }

    pub fn to_json(&self) -> Value {
        let dump = |ms: &[Matrix]| -> Vec<Vec<Vec<String>>> { ms.iter().map(Matrix::rows_text).collect() };
        json!({
            "module": self.kind,
            "x": fmt_q(&self.x),
            "dim": self.dim(),
            "mode_bound": self.mode_bound,
            "safe_interior": self.safe_interior(),
            "x_plus": dump(&self.x_plus),
            "x_minus": dump(&self.x_minus),
            "xi": dump(&self.xi),
        })
    }
}

/// Coefficients `s_0 = 1, s_1, ...` of
/// `(1+a t)(1+b t) / ((1+c t)(1+e t))` up to `t^len-1`.
fn ratio_series(a: &BigQ, b: &BigQ, c: &BigQ, e: &BigQ, len: usize) -> Vec<BigQ> {
    let num = [big_int(1), a + b, a * b];
    let den = [big_int(1), c + e, c * e];
    let mut out: Vec<BigQ> = Vec::with_capacity(len);
    for m in 0..len {
        let mut v = num.get(m).cloned().unwrap_or_else(BigQ::zero);
        for j in 1..=m.min(2) {
            v -= &den[j] * &out[m - j];
        }
        out.push(v);
    }
    out
}

/// Build the explicit module with generator modes `0..=2 n_max + 1`.
pub fn build_module(kind: Sl2Kind, x: &Q, n_max: usize) -> Result<Sl2Module, EngineError> {
    if let Sl2Kind::Truncated { dim, .. } = kind {
        if dim < SAFE_MARGIN + 1 {
            return Err(EngineError::InvalidParameters(format!(
                "truncated module needs dimension at least {}, got {dim}",
                SAFE_MARGIN + 1
            )));
        }
    }
    let dim = kind.dim();
    let modes = 2 * n_max + 2;
    let xb = big(x);
    let kb = big(&kind.k());

    let mut x_plus = Vec::with_capacity(modes);
    let mut x_minus = Vec::with_capacity(modes);
    for n in 0..modes {
        let mut p = Matrix::zero(dim);
        let mut m = Matrix::zero(dim);
        for i in 0..dim {
            let ib = big_int(i as i64);
            if i > 0 {
                p.set(i - 1, i, pow(&(big_int(1) - &xb - &ib), n));
            }
            if i + 1 < dim {
                let c = pow(&(-&xb - &ib), n) * (&ib + big_int(1)) * (&kb - &ib);
                m.set(i + 1, i, c);
            }
        }
        x_plus.push(p);
        x_minus.push(m);
    }

    // xi(u) v_i = (u+x-1)(u+x+k) / ((u+x+i-1)(u+x+i)) v_i, expanded in 1/u.
    let series: Vec<Vec<BigQ>> = (0..dim)
        .map(|i| {
            let ib = big_int(i as i64);
            ratio_series(
                &(&xb - big_int(1)),
                &(&xb + &kb),
                &(&xb + &ib - big_int(1)),
                &(&xb + &ib),
                modes + 1,
            )
        })
        .collect();
    let xi = (0..modes)
        .map(|n| Matrix::diagonal(series.iter().map(|s| s[n + 1].clone()).collect()))
        .collect();

    Ok(Sl2Module {
        kind,
        x: *x,
        mode_bound: n_max,
        x_plus,
        x_minus,
        xi,
    })
}

pub(super) fn column_text(v: &[BigQ]) -> Vec<String> {
    v.iter().map(fmt_big).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    #[test]
    fn vector_representation_at_zero() {
        let m = build_module(Sl2Kind::Finite { k: 1 }, &q(0), 1).unwrap();
        assert_eq!(m.xi[0].get(0, 0), &big_int(1));
        assert_eq!(m.xi[0].get(1, 1), &big_int(-1));
        assert!(m.x_plus[0].column(0).iter().all(Zero::is_zero));
        assert_eq!(m.stored_modes(), 4);
    }

    #[test]
    fn top_eigenvalue_series_telescopes() {
        // (u+x+k)/(u+x) = 1 + k/u - k x/u^2 + ...
        let x = qr(5, 7);
        let m = build_module(Sl2Kind::Finite { k: 3 }, &x, 1).unwrap();
        let ev = m.xi_eigenvalues(0);
        let kx = big(&x);
        for (n, v) in ev.iter().enumerate() {
            assert_eq!(v, &(big_int(3) * pow(&(-&kx), n)));
        }
    }

    #[test]
    fn xi_zero_is_weight() {
        let m = build_module(Sl2Kind::Finite { k: 4 }, &qr(-1, 3), 0).unwrap();
        for i in 0..5 {
            assert_eq!(m.xi[0].get(i, i), &big_int(4 - 2 * i as i64));
        }
    }

    #[test]
    fn finite_module_closes() {
        let m = build_module(Sl2Kind::Finite { k: 2 }, &q(1), 2).unwrap();
        assert!(m.x_minus.iter().all(|a| a.column(2).iter().all(Zero::is_zero)));
    }

    #[test]
    fn tiny_truncation_rejected() {
        let err = build_module(Sl2Kind::Truncated { k: qr(7, 3), dim: 2 }, &q(0), 1);
        assert!(matches!(err, Err(EngineError::InvalidParameters(_))));
    }

    #[test]
    fn json_dump_has_every_mode() {
        let m = build_module(Sl2Kind::Truncated { k: qr(-5, 2), dim: 3 }, &q(0), 0).unwrap();
        let v = m.to_json();
        assert_eq!(v["xi"].as_array().unwrap().len(), 2);
        assert_eq!(v["module"]["k"], "-5/2");
        assert_eq!(v["safe_interior"], 1);
    }
}
