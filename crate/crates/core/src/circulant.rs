//! Circulant matrices given by their first row.
//!
//! Layout: entry `(i, j)` of the expansion is `first_row[(j - i) mod n]`, so
//! every row is the previous one shifted one place to the right.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, Rational};

/// Double-precision complex number for eigenvalues and symbols.
pub type ComplexValue = Complex64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circulant {
    first_row: Vec<Rational>,
}

impl Circulant {
    pub fn new(first_row: Vec<Rational>) -> Result<Self> {
        if first_row.is_empty() {
            return Err(Error::InvalidMatrix(
                "circulant needs at least one entry".into(),
            ));
        }
        Ok(Circulant { first_row })
    }

    pub fn from_integers<I, T>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<num_bigint::BigInt>,
    {
        Self::new(
            values
                .into_iter()
                .map(|v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    /// Reads the first row back out of a dense matrix. Fails if `m` is not
    /// square; does not check circulant structure.
    pub fn from_first_row_of(m: &DenseMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        Self::new(m.row(0).to_vec())
    }

    pub fn order(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[Rational] {
        &self.first_row
    }

    pub fn into_first_row(self) -> Vec<Rational> {
        self.first_row
    }
}

pub fn circ_expand(c: &Circulant) -> DenseMatrix {
    let n = c.order();
    DenseMatrix::from_fn(n, n, |i, j| c.first_row[(j + n - i) % n].clone())
}

fn to_f64(v: &Rational) -> Result<f64> {
    v.to_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::Range(format!("{v} does not fit in an f64")))
}

/// `lambda_j = sum_k c_k w^(jk)` with `w = exp(2 pi i / n)`, by direct O(n^2)
/// summation.
pub fn circ_eigenvalues(c: &Circulant) -> Result<Vec<ComplexValue>> {
    let n = c.order();
    let coeffs = c
        .first_row
        .iter()
        .map(to_f64)
        .collect::<Result<Vec<f64>>>()?;
    let eig = (0..n)
        .map(|j| {
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &ck)| {
                    // reduce jk mod n before scaling to keep the angle small
                    let angle = 2.0 * PI * ((j * k) % n) as f64 / n as f64;
                    Complex64::from_polar(ck, angle)
                })
                .sum()
        })
        .collect();
    Ok(eig)
}

/// Product of the DFT eigenvalues. A floating-point cross-check only.
pub fn circ_det_via_eigen(c: &Circulant) -> Result<ComplexValue> {
    let det: Complex64 = circ_eigenvalues(c)?.into_iter().product();
    if !det.re.is_finite() || !det.im.is_finite() {
        return Err(Error::Range(format!(
            "eigenvalue product overflows f64 at order {}",
            c.order()
        )));
    }
    Ok(det)
}

/// True iff every row is the right cyclic shift of the row above.
pub fn is_circulant(m: &DenseMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    Ok((1..n).all(|i| (0..n).all(|j| m.get(i, j) == m.get(i - 1, (j + n - 1) % n))))
}
