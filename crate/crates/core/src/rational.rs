//! Exact rational helpers shared by every module.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used for coordinates and lattice arithmetic.
pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn half() -> Q {
    Q::new(1, 2)
}

/// True when `2 * v` is an integer.
pub fn is_half_integer(v: &Q) -> bool {
    (*v * q(2)).is_integer()
}

/// Canonical text: `3`, `-3/2`.
pub fn fmt_q(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn gcd_all(values: impl IntoIterator<Item = i64>) -> i64 {
    values.into_iter().fold(0i64, |acc, v| acc.gcd(&v))
}

/// Divide `v` by a positive rational step, returning the integer quotient
/// when it is exact.
pub fn exact_multiple(v: &Q, step: &Q) -> Option<i64> {
    if step.is_zero() {
        return None;
    }
    let r = *v / *step;
    r.is_integer().then(|| r.to_integer())
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
#[allow(clippy::needless_range_loop)]
pub fn invert(matrix: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Q>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let sub = f * a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn abs(v: &Q) -> Q {
    v.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_cartan() {
        let c = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        let inv = invert(&c).unwrap();
        assert_eq!(inv, vec![vec![qr(2, 3), qr(1, 3)], vec![qr(1, 3), qr(2, 3)]]);
    }

    #[test]
    fn half_integer_test() {
        assert!(is_half_integer(&qr(-3, 2)));
        assert!(is_half_integer(&q(4)));
        assert!(!is_half_integer(&qr(7, 3)));
        assert_eq!(exact_multiple(&q(6), &q(3)), Some(2));
        assert_eq!(exact_multiple(&q(5), &q(3)), None);
    }
}
