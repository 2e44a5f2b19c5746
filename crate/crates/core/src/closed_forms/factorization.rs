//! Transform matrices `M, N` (for `P`) and `K, L` (for `Q`) and the two-step
//! reduction
//!
//! ```text
//! M P N = S   (Hessenberg)      S X = diag(1, g_n) (+) C
//! K Q L = U   (Hessenberg)      U Y = diag(2, u_n) (+) A
//! ```
//!
//! where `X`, `Y` are unit upper-triangular column operations clearing the
//! first two rows and `C`, `A` are the lower bidiagonal blocks from
//! [`super::lemmas`]. All products are computed and compared exactly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::lemmas::{bidiagonal_pell, bidiagonal_pell_lucas};
use super::{pell_lucas_scalars, pell_scalars, sequence_circulant, Ingredients};
use crate::circulant::circ_expand;
use crate::error::{require_order, Error, Result};
use crate::linalg::{direct_sum, mat_mul, DenseMatrix, Rational};
use crate::sequences::SequenceKind;

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// Band pattern shared by `M` and `K`; they differ only in entry `(2, 1)`
/// (1-based), which is `-2` for `M` and `-3` for `K`.
fn band_matrix(n: usize, second_row_lead: i64) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    m.set(0, 0, Rational::one());
    m.set(1, 0, int(second_row_lead));
    m.set(1, n - 1, Rational::one());
    // 1-based row i = 3..n: +1 at column n+2-i, -2 at n+3-i, -1 at n+4-i,
    // with column n+1 wrapping to column 1.
    for i in 3..=n {
        for (col, v) in [(n + 2 - i, 1), (n + 3 - i, -2), (n + 4 - i, -1)] {
            let col = if col == n + 1 { 1 } else { col };
            let cur = m.get(i - 1, col - 1).clone();
            m.set(i - 1, col - 1, cur + int(v));
        }
    }
    m
}

/// Column 2 carries descending powers of `ratio`; rows 2..n-1 carry a 1 on
/// the anti-diagonal of the trailing block.
fn ratio_matrix(n: usize, ratio: &Rational) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    m.set(0, 0, Rational::one());
    let mut pow = Rational::one();
    for i in (2..=n).rev() {
        m.set(i - 1, 1, pow.clone());
        pow *= ratio;
    }
    for i in 2..n {
        m.set(i - 1, n + 1 - i, Rational::one());
    }
    m
}

pub fn build_m(n: usize) -> Result<DenseMatrix> {
    require_order("transform matrix M", n, 4)?;
    Ok(band_matrix(n, -2))
}

pub fn build_k(n: usize) -> Result<DenseMatrix> {
    require_order("transform matrix K", n, 4)?;
    Ok(band_matrix(n, -3))
}

pub fn build_n(n: usize) -> Result<DenseMatrix> {
    require_order("transform matrix N", n, 4)?;
    Ok(ratio_matrix(n, &pell_scalars(n)?.ratio))
}

pub fn build_l(n: usize) -> Result<DenseMatrix> {
    require_order("transform matrix L", n, 4)?;
    Ok(ratio_matrix(n, &pell_lucas_scalars(n)?.ratio))
}

/// Every matrix of the reduction for one sequence and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationBundle {
    pub kind: SequenceKind,
    pub n: usize,
    /// `M` or `K`.
    pub left: DenseMatrix,
    /// `N` or `L`.
    pub right: DenseMatrix,
    /// `S = M P N` or `U = K Q L`.
    pub hessenberg: DenseMatrix,
    /// Column operation taking the Hessenberg matrix to block-diagonal form.
    pub column_op: DenseMatrix,
    /// `diag(1, g_n) (+) C` or `diag(2, u_n) (+) A`.
    pub block: DenseMatrix,
}

/// Shape of the Hessenberg matrix, independent of any matrix product.
struct HessenbergShape {
    first_row: Vec<Rational>,
    second_row: Vec<Rational>,
    diag: Rational,
    sub: Rational,
}

impl HessenbergShape {
    fn to_matrix(&self, n: usize) -> DenseMatrix {
        DenseMatrix::from_fn(n, n, |i, j| match i {
            0 => self.first_row[j].clone(),
            1 => self.second_row[j].clone(),
            _ if j == i => self.diag.clone(),
            _ if i >= 3 && j == i - 1 => self.sub.clone(),
            _ => Rational::zero(),
        })
    }
}

fn compare(what: &'static str, expected: &DenseMatrix, found: &DenseMatrix) -> Result<()> {
    for i in 0..expected.rows() {
        for j in 0..expected.cols() {
            if expected.get(i, j) != found.get(i, j) {
                return Err(Error::Integrity {
                    what,
                    row: i,
                    col: j,
                    expected: expected.get(i, j).to_string(),
                    found: found.get(i, j).to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Unit upper-triangular matrix, identity except for its first two rows.
fn column_op_matrix(n: usize, first_row: Vec<Rational>, second_row: Vec<Rational>) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| match i {
        0 => first_row[j].clone(),
        1 => second_row[j].clone(),
        _ if i == j => Rational::one(),
        _ => Rational::zero(),
    })
}

fn pell_parts(n: usize) -> Result<(HessenbergShape, DenseMatrix, DenseMatrix)> {
    let ing = Ingredients::new(SequenceKind::Pell, n);
    let s = pell_scalars(n)?;
    let p = |k: usize| int(ing.x(k).clone());

    // S row 1: (1, g', P(n-1), ..., P2); row 2: (0, g, P(n-2), ..., P1).
    // Column j >= 3 (1-based) holds P(n-j+2) and P(n-j+1).
    let mut first_row = vec![p(1), s.g_prime.clone()];
    let mut second_row = vec![Rational::zero(), s.g.clone()];
    for j in 3..=n {
        first_row.push(p(n - j + 2));
        second_row.push(p(n - j + 1));
    }
    let shape = HessenbergShape {
        first_row,
        second_row,
        diag: int(ing.diag.clone()),
        sub: -int(ing.sub.clone()),
    };

    let ratio_g = &s.g_prime / &s.g;
    let mut op_first = vec![Rational::one(), -s.g_prime.clone()];
    let mut op_second = vec![Rational::zero(), Rational::one()];
    for j in 3..=n {
        op_first.push(&ratio_g * p(n - j + 1) - p(n - j + 2));
        op_second.push(-(p(n - j + 1) / &s.g));
    }
    let column_op = column_op_matrix(n, op_first, op_second);

    let head = DenseMatrix::diagonal(&[Rational::one(), s.g]);
    let block = direct_sum(&head, &bidiagonal_pell(n)?);
    Ok((shape, column_op, block))
}

fn pell_lucas_parts(n: usize) -> Result<(HessenbergShape, DenseMatrix, DenseMatrix)> {
    let ing = Ingredients::new(SequenceKind::PellLucas, n);
    let s = pell_lucas_scalars(n)?;
    let q = |k: usize| int(ing.x(k).clone());
    let shift = |k: usize| int(ing.lucas_shift(k));
    let two = q(1);

    // U row 1: (Q1, u', Q(n-1), ..., Q2); row 2: (0, u, Qn - 3Q(n-1), ..., Q3 - 3Q2).
    let mut first_row = vec![two.clone(), s.u_prime.clone()];
    let mut second_row = vec![Rational::zero(), s.u.clone()];
    for j in 3..=n {
        first_row.push(q(n - j + 2));
        second_row.push(shift(n - j + 2));
    }
    let shape = HessenbergShape {
        first_row,
        second_row,
        diag: int(ing.diag.clone()),
        sub: -int(ing.sub.clone()),
    };

    let mut op_first = vec![Rational::one(), -(&s.u_prime / &two)];
    let mut op_second = vec![Rational::zero(), Rational::one()];
    for j in 3..=n {
        let r = shift(n - j + 2);
        op_first.push(&s.u_prime * &r / (&two * &s.u) - q(n - j + 2) / &two);
        op_second.push(-(r / &s.u));
    }
    let column_op = column_op_matrix(n, op_first, op_second);

    let head = DenseMatrix::diagonal(&[two, s.u]);
    let block = direct_sum(&head, &bidiagonal_pell_lucas(n)?);
    Ok((shape, column_op, block))
}

/// Builds `left`, `right`, the column operation and the target block for
/// `kind`, then checks `left * C * right` against the Hessenberg shape and
/// `hessenberg * column_op` against the block, entry by entry.
///
/// An `Integrity` error means one of the formulas here is wrong.
pub fn hessenberg_factorization(kind: SequenceKind, n: usize) -> Result<FactorizationBundle> {
    require_order("Hessenberg factorization", n, 4)?;
    let (left, right, (shape, column_op, block)) = match kind {
        SequenceKind::Pell => (build_m(n)?, build_n(n)?, pell_parts(n)?),
        SequenceKind::PellLucas => (build_k(n)?, build_l(n)?, pell_lucas_parts(n)?),
    };
    let circ = circ_expand(&sequence_circulant(kind, n)?);
    let hessenberg = mat_mul(&mat_mul(&left, &circ)?, &right)?;
    compare("Hessenberg product", &shape.to_matrix(n), &hessenberg)?;

    let reduced = mat_mul(&hessenberg, &column_op)?;
    compare("direct-sum reduction", &block, &reduced)?;

    Ok(FactorizationBundle {
        kind,
        n,
        left,
        right,
        hessenberg,
        column_op,
        block,
    })
}
