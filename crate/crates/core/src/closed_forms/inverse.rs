//! Closed-form inverses of `P` and `Q`.
//!
//! Both inverses are circulant. Writing `D = x1 - x(n+1)` and
//! `t_k = s^(k-1) / D^k` (`s = Pn` or `Qn - 2`), entries 3..n of the first row
//! are `-t_(i-2) / g_n` for `P` and `4 t_(m-2) / u_n` for `Q`. The first two
//! entries are short sums over the same `t_k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{pell_lucas_scalars, pell_scalars, Ingredients};
use crate::circulant::Circulant;
use crate::error::{require_order, Error, Result};
use crate::linalg::Rational;
use crate::sequences::SequenceKind;

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `P^-1` as a circulant, `n >= 3`.
pub fn inv_pell_closed(n: usize) -> Result<Circulant> {
    require_order("closed-form Pell inverse", n, 3)?;
    let ing = Ingredients::new(SequenceKind::Pell, n);
    let g = pell_scalars(n)?.g;
    let g_inv = g.recip();
    // t[k - 1] holds t_k for k = 1..=n-2
    let t = ing.geometric_terms(n - 2);

    let mut p1 = Rational::one() + int(2) * &t[n - 3];
    for k in 1..=n - 3 {
        p1 += &t[k - 1] * int(ing.x(n - k).clone());
    }
    let mut p2 = int(-2);
    for k in 1..=n - 2 {
        p2 += &t[k - 1] * int(ing.x(n - k - 1).clone());
    }

    let mut row = Vec::with_capacity(n);
    row.push(p1 * &g_inv);
    row.push(p2 * &g_inv);
    row.extend(t.iter().map(|tk| -(tk * &g_inv)));
    Circulant::new(row)
}

/// `Q^-1` as a circulant, `n >= 3`.
pub fn inv_pell_lucas_closed(n: usize) -> Result<Circulant> {
    require_order("closed-form Pell-Lucas inverse", n, 3)?;
    let ing = Ingredients::new(SequenceKind::PellLucas, n);
    let u = pell_lucas_scalars(n)?.u;
    let u_inv = u.recip();
    let t = ing.geometric_terms(n - 2);

    let mut q1 = Rational::one() - int(8) * &t[n - 3];
    for k in 1..=n - 3 {
        q1 += &t[k - 1] * int(ing.lucas_shift(n - k + 1));
    }
    let mut q2 = int(-3);
    for k in 1..=n - 2 {
        q2 += &t[k - 1] * int(ing.lucas_shift(n - k));
    }

    let four_over_u = int(4) * &u_inv;
    let mut row = Vec::with_capacity(n);
    row.push(q1 * &u_inv);
    row.push(q2 * &u_inv);
    row.extend(t.iter().map(|tk| tk * &four_over_u));
    Circulant::new(row)
}

pub fn inv_closed(kind: SequenceKind, n: usize) -> Result<Circulant> {
    match kind {
        SequenceKind::Pell => inv_pell_closed(n),
        SequenceKind::PellLucas => inv_pell_lucas_closed(n),
    }
}

/// `S_n^(r) = sum_{k=1}^{r} P(r-k+1) Pn^(k-1) / (P1 - P(n+1))^k` for
/// `1 <= r <= n-2`.
pub fn partial_sum_s(n: usize, r: usize) -> Result<Rational> {
    require_order("partial sum", n, 3)?;
    if r == 0 || r > n - 2 {
        return Err(Error::IndexOutOfRange {
            what: "partial sum index r",
            index: r,
            lo: 1,
            hi: n - 2,
        });
    }
    let ing = Ingredients::new(SequenceKind::Pell, n);
    let t = ing.geometric_terms(r);
    Ok((1..=r).fold(Rational::zero(), |acc, k| {
        acc + &t[k - 1] * int(ing.x(r - k + 1).clone())
    }))
}
