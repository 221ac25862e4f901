//! Small dense matrices over big rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::Q;

pub type BigQ = BigRational;

pub fn big(v: &Q) -> BigQ {
    BigQ::new(BigInt::from(*v.numer()), BigInt::from(*v.denom()))
}

pub fn big_int(n: i64) -> BigQ {
    BigQ::from_integer(BigInt::from(n))
}

/// Canonical text of a big rational: `3`, `-3/2`.
pub fn fmt_big(v: &BigQ) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Row-major square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    data: Vec<BigQ>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![BigQ::zero(); dim * dim],
        }
    }

    pub fn diagonal(values: Vec<BigQ>) -> Self {
        let mut m = Matrix::zero(values.len());
        for (i, v) in values.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigQ {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: BigQ) {
        self.data[row * self.dim + col] = v;
    }

    pub fn column(&self, col: usize) -> Vec<BigQ> {
        (0..self.dim).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &BigQ) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// `self * other + other * self`.
    pub fn anticommutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).add(&other.mul(self))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn rows_text(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| fmt_big(self.get(i, j))).collect())
            .collect()
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&BigQ, &BigQ) -> BigQ) -> Matrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

/// `base^n` for a non-negative integer exponent, with `0^0 = 1`.
pub fn pow(base: &BigQ, n: usize) -> BigQ {
    let mut acc = BigQ::one();
    for _ in 0..n {
        acc *= base;
    }
    acc
}
