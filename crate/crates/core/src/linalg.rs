//! Dense exact linear algebra over the rationals.
//!
//! Nothing in here knows about circulants or Pell numbers; these routines are
//! the generic oracles that the closed forms are checked against. Indices are
//! 0-based and storage is row-major.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact fraction, always reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix(format!(
                "dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(DenseMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        DenseMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Builds a matrix from integer rows. All rows must have equal length.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&v| int(v)))
            .collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                values[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Top-left `rows x cols` block.
    pub fn leading_block(&self, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(i, j).clone())
    }

    fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.cols).map(|r| r.to_vec()).collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn mat_mul(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch {
            left_rows: a.rows,
            left_cols: a.cols,
            right_rows: b.rows,
            right_cols: b.cols,
        });
    }
    let mut out = DenseMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let lhs = a.get(i, k);
            if lhs.is_zero() {
                continue;
            }
            for j in 0..b.cols {
                let rhs = b.get(k, j);
                if rhs.is_zero() {
                    continue;
                }
                let idx = i * out.cols + j;
                out.entries[idx] += lhs * rhs;
            }
        }
    }
    Ok(out)
}

/// Block-diagonal `diag(a, b)`.
pub fn direct_sum(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    DenseMatrix::from_fn(a.rows + b.rows, a.cols + b.cols, |i, j| {
        if i < a.rows && j < a.cols {
            a.get(i, j).clone()
        } else if i >= a.rows && j >= a.cols {
            b.get(i - a.rows, j - a.cols).clone()
        } else {
            Rational::zero()
        }
    })
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators; the
/// scale factors are divided back out at the end.
pub fn oracle_det(m: &DenseMatrix) -> Result<Rational> {
    let n = m.require_square()?;
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        rows.push(
            m.row(i)
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect(),
        );
        scale *= lcm;
    }
    Ok(Rational::new(bareiss_det(rows), scale))
}

/// Bareiss elimination on a square integer matrix. Every intermediate
/// division is exact.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = prev;
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by plain Gaussian elimination over the rationals. Independent
/// of [`oracle_det`]; used to cross-check it.
pub fn det_by_rational_elimination(m: &DenseMatrix) -> Result<Rational> {
    let n = m.require_square()?;
    let mut a = m.to_rows();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            let (upper, lower) = a.split_at_mut(i);
            for (dst, src) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                *dst -= &factor * src;
            }
        }
        det *= pivot;
    }
    Ok(det)
}

/// Exact inverse by Gauss-Jordan elimination. The pivot is the first nonzero
/// entry scanning down the column.
pub fn oracle_inverse(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.require_square()?;
    let mut a = m.to_rows();
    let mut inv = DenseMatrix::identity(n).to_rows();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .ok_or(Error::Singular { pivot: k })?;
        a.swap(k, p);
        inv.swap(k, p);

        let pivot_inv = a[k][k].recip();
        for v in a[k].iter_mut().chain(inv[k].iter_mut()) {
            *v *= &pivot_inv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in 0..n {
                if !a[k][j].is_zero() {
                    let delta = &factor * &a[k][j];
                    a[i][j] -= delta;
                }
                if !inv[k][j].is_zero() {
                    let delta = &factor * &inv[k][j];
                    inv[i][j] -= delta;
                }
            }
        }
    }
    DenseMatrix::new(n, n, inv.into_iter().flatten().collect())
}

/// Exact decimal string for an integer-valued rational, `num/den` otherwise.
pub fn render_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Always `num/den`, even for integers. Sign lives on the numerator.
pub fn render_fraction(v: &Rational) -> String {
    debug_assert!(v.denom().is_positive());
    format!("{}/{}", v.numer(), v.denom())
}
