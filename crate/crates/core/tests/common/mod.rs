//! Test-only oracles that share no code with the library's elimination
//! routines.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use pellcirc::{DenseMatrix, Rational};

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Plain recurrence, written out independently of `pellcirc::sequences`.
pub fn pell_naive(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &b * 2 + &a;
        a = std::mem::replace(&mut b, c);
    }
    a
}

pub fn pell_lucas_naive(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(2), BigInt::from(2));
    for _ in 0..n {
        let c = &b * 2 + &a;
        a = std::mem::replace(&mut b, c);
    }
    a
}

/// `rows[i][j] = first[(j - i) mod n]`, built by hand.
pub fn circulant_rows(first: &[Rational]) -> Vec<Vec<Rational>> {
    let n = first.len();
    (0..n)
        .map(|i| (0..n).map(|j| first[(n + j - i) % n].clone()).collect())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(p: &[usize]) -> bool {
    // true when odd
    let mut odd = false;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Leibniz expansion; n! terms, fine for n <= 7.
pub fn leibniz_det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    permutations(n).iter().fold(Rational::zero(), |acc, p| {
        let term = (0..n).fold(Rational::one(), |t, i| t * &rows[i][p[i]]);
        if parity(p) {
            acc - term
        } else {
            acc + term
        }
    })
}

fn minor(rows: &[Vec<Rational>], skip_r: usize, skip_c: usize) -> Vec<Vec<Rational>> {
    rows.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_r)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_c)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

/// Inverse by adjugate / determinant (cofactors by Leibniz).
pub fn adjugate_inverse(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = rows.len();
    let det = leibniz_det(rows);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = leibniz_det(&minor(rows, j, i));
                    let signed = if (i + j) % 2 == 1 { -c } else { c };
                    signed / &det
                })
                .collect()
        })
        .collect()
}

pub fn dense(rows: &[Vec<Rational>]) -> DenseMatrix {
    let n = rows.len();
    DenseMatrix::new(n, rows[0].len(), rows.iter().flatten().cloned().collect()).unwrap()
}
