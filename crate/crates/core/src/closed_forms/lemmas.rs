//! Explicit inverses of the pieces produced by the reduction: the lower
//! bidiagonal blocks `C`, `A` and the transform matrices `M`, `K`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Ingredients;
use crate::error::{require_order, Result};
use crate::linalg::{DenseMatrix, Rational};
use crate::sequences::SequenceKind;

/// `(n-2) x (n-2)` lower bidiagonal with `diag` on the diagonal and `-sub`
/// below it.
fn bidiagonal(order: usize, diag: &BigInt, sub: &BigInt) -> DenseMatrix {
    DenseMatrix::from_fn(order, order, |i, j| {
        if i == j {
            Rational::from_integer(diag.clone())
        } else if i == j + 1 {
            Rational::from_integer(-sub)
        } else {
            Rational::zero()
        }
    })
}

/// Entry `(i, j)`, `i >= j`, is `sub^(i-j) / diag^(i-j+1)`; zero above the
/// diagonal. Constant along diagonals, so each band value is computed once.
fn bidiagonal_inverse(order: usize, diag: &BigInt, sub: &BigInt) -> DenseMatrix {
    let ratio = Rational::new(sub.clone(), diag.clone());
    let mut bands = Vec::with_capacity(order);
    let mut v = Rational::new(BigInt::one(), diag.clone());
    for _ in 0..order {
        let next = &v * &ratio;
        bands.push(std::mem::replace(&mut v, next));
    }
    DenseMatrix::from_fn(order, order, |i, j| {
        if i >= j {
            bands[i - j].clone()
        } else {
            Rational::zero()
        }
    })
}

/// `C`: diagonal `P1 - P(n+1)`, subdiagonal `-Pn`, order `n - 2`.
pub fn bidiagonal_pell(n: usize) -> Result<DenseMatrix> {
    require_order("bidiagonal block C", n, 3)?;
    let ing = Ingredients::new(SequenceKind::Pell, n);
    Ok(bidiagonal(n - 2, &ing.diag, &ing.sub))
}

/// `A`: diagonal `Q1 - Q(n+1)`, subdiagonal `2 - Qn`, order `n - 2`.
pub fn bidiagonal_pell_lucas(n: usize) -> Result<DenseMatrix> {
    require_order("bidiagonal block A", n, 3)?;
    let ing = Ingredients::new(SequenceKind::PellLucas, n);
    Ok(bidiagonal(n - 2, &ing.diag, &ing.sub))
}

pub fn bidiagonal_inverse_pell(n: usize) -> Result<DenseMatrix> {
    require_order("bidiagonal inverse C^-1", n, 3)?;
    let ing = Ingredients::new(SequenceKind::Pell, n);
    Ok(bidiagonal_inverse(n - 2, &ing.diag, &ing.sub))
}

pub fn bidiagonal_inverse_pell_lucas(n: usize) -> Result<DenseMatrix> {
    require_order("bidiagonal inverse A^-1", n, 3)?;
    let ing = Ingredients::new(SequenceKind::PellLucas, n);
    Ok(bidiagonal_inverse(n - 2, &ing.diag, &ing.sub))
}

/// `(n-1) x (n-1)` Hankel matrix with first row `P(n-1), ..., P1` and zeros
/// below the anti-diagonal: entry `(a, b)` is `P(n-1-a-b)` (0 when the index
/// is not positive).
pub fn hankel_block(n: usize) -> Result<DenseMatrix> {
    require_order("Hankel block", n, 2)?;
    let pell = SequenceKind::Pell.terms_through(n);
    let m = n - 1;
    Ok(DenseMatrix::from_fn(m, m, |a, b| {
        if a + b < m {
            Rational::from_integer(pell[m - a - b].clone())
        } else {
            Rational::zero()
        }
    }))
}

fn assemble(first_column: Vec<Rational>, hankel: DenseMatrix) -> DenseMatrix {
    let n = first_column.len() + 1;
    DenseMatrix::from_fn(n, n, |i, j| match (i, j) {
        (0, 0) => Rational::one(),
        (0, _) => Rational::zero(),
        (_, 0) => first_column[i - 1].clone(),
        _ => hankel.get(i - 1, j - 1).clone(),
    })
}

/// `M^-1 = [[1, 0], [B, H]]` with `B = (Pn, ..., P2)^T` and `H` the
/// [`hankel_block`].
pub fn hankel_block_inverse_m(n: usize) -> Result<DenseMatrix> {
    require_order("Hankel-block inverse of M", n, 4)?;
    let p = SequenceKind::Pell.terms_through(n);
    let column = (2..=n)
        .rev()
        .map(|k| Rational::from_integer(p[k].clone()))
        .collect();
    Ok(assemble(column, hankel_block(n)?))
}

/// `K^-1 = [[1, 0], [D, H]]` with `D = (Qn/2, ..., Q2/2)^T` and the same
/// Pell Hankel block as `M^-1`.
pub fn hankel_block_inverse_k(n: usize) -> Result<DenseMatrix> {
    require_order("Hankel-block inverse of K", n, 4)?;
    let q = SequenceKind::PellLucas.terms_through(n);
    let column = (2..=n)
        .rev()
        .map(|k| Rational::new(q[k].clone(), BigInt::from(2)))
        .collect();
    Ok(assemble(column, hankel_block(n)?))
}
