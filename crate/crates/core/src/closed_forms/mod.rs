//! Closed forms for `P = circ(P1, ..., Pn)` and `Q = circ(Q1, ..., Qn)`.
//!
//! Determinants are integers and are evaluated in `BigInt`; everything that
//! involves the ratios `Pn / (P1 - P(n+1))` or `(Qn - 2) / (Q1 - Q(n+1))` is
//! evaluated in exact rationals. No floating point is used here except in
//! [`symbols`], which produces eigenvalues for cross-checking.

mod factorization;
mod inverse;
mod lemmas;
mod symbols;

pub use factorization::{
    build_k, build_l, build_m, build_n, hessenberg_factorization, FactorizationBundle,
};
pub use inverse::{inv_closed, inv_pell_closed, inv_pell_lucas_closed, partial_sum_s};
pub use lemmas::{
    bidiagonal_inverse_pell, bidiagonal_inverse_pell_lucas, bidiagonal_pell, bidiagonal_pell_lucas,
    hankel_block, hankel_block_inverse_k, hankel_block_inverse_m,
};
pub use symbols::{symbol_u, symbol_v};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::circulant::Circulant;
use crate::error::{require_order, Result};
use crate::linalg::Rational;
use crate::sequences::{sequence_prefix, SequenceKind};

/// The order-`n` circulant whose first row is `x1, ..., xn` for `kind`.
pub fn sequence_circulant(kind: SequenceKind, n: usize) -> Result<Circulant> {
    require_order("sequence circulant", n, 1)?;
    Circulant::from_integers(sequence_prefix(kind, n))
}

/// Terms `x0 ..= x(n+1)` plus the two quantities every closed form is built on.
struct Ingredients {
    terms: Vec<BigInt>,
    /// `x1 - x(n+1)`, the diagonal of the bidiagonal block.
    diag: BigInt,
    /// `Pn` or `Qn - 2`, the negated subdiagonal.
    sub: BigInt,
}

impl Ingredients {
    fn new(kind: SequenceKind, n: usize) -> Self {
        let terms = kind.terms_through(n + 1);
        let diag = &terms[1] - &terms[n + 1];
        let sub = match kind {
            SequenceKind::Pell => terms[n].clone(),
            SequenceKind::PellLucas => &terms[n] - 2,
        };
        Ingredients { terms, diag, sub }
    }

    fn x(&self, k: usize) -> &BigInt {
        &self.terms[k]
    }

    /// `sub / diag`.
    fn ratio(&self) -> Rational {
        Rational::new(self.sub.clone(), self.diag.clone())
    }

    /// `Q(k+1) - 3 Q(k)`; only meaningful for Pell-Lucas terms.
    fn lucas_shift(&self, k: usize) -> BigInt {
        &self.terms[k + 1] - &self.terms[k] * 3
    }

    /// `t_k = sub^(k-1) / diag^k` for `k = 1..=count`, returned 0-based.
    fn geometric_terms(&self, count: usize) -> Vec<Rational> {
        let ratio = self.ratio();
        let mut out = Vec::with_capacity(count);
        let mut t = Rational::new(BigInt::one(), self.diag.clone());
        for _ in 0..count {
            let next = &t * &ratio;
            out.push(std::mem::replace(&mut t, next));
        }
        out
    }
}

/// `sum c_i x^(len-1-i)` over the coefficients in order.
fn horner(coeffs: impl IntoIterator<Item = BigInt>, x: &Rational) -> Rational {
    coeffs.into_iter().fold(Rational::zero(), |acc, c| {
        acc * x + Rational::from_integer(c)
    })
}

/// `sum_j a_j X^(len-j) Y^j` for `j = 0..len`. Returns the sum and `Y^len`.
fn homogeneous_sum(
    coeffs: impl IntoIterator<Item = BigInt>,
    x: &BigInt,
    y: &BigInt,
) -> (BigInt, BigInt) {
    let mut acc = BigInt::zero();
    let mut ypow = BigInt::one();
    for a in coeffs {
        acc = acc * x + a * &ypow;
        ypow *= y;
    }
    (acc * x, ypow)
}

/// `det(P)` for `n >= 3`:
/// `(P1 - P(n+1))^(n-2) (P1 - 2Pn) + sum_{k=2}^{n-1} P(k-1) Pn^(n-k) (P1 - P(n+1))^(k-2)`.
pub fn det_pell_closed(n: usize) -> Result<BigInt> {
    require_order("closed-form Pell determinant", n, 3)?;
    let ing = Ingredients::new(SequenceKind::Pell, n);
    let (sum, diag_pow) =
        homogeneous_sum((2..n).map(|k| ing.x(k - 1).clone()), &ing.sub, &ing.diag);
    Ok(diag_pow * (ing.x(1) - ing.x(n) * 2) + sum)
}

/// `det(Q)` for `n >= 3`:
/// `2 (2 - Q(n+1))^(n-2) (2 - 3Qn) + 2 sum_{k=2}^{n-1} (Q(k+1) - 3Qk) (Qn - 2)^(n-k) (2 - Q(n+1))^(k-2)`.
pub fn det_pell_lucas_closed(n: usize) -> Result<BigInt> {
    require_order("closed-form Pell-Lucas determinant", n, 3)?;
    let ing = Ingredients::new(SequenceKind::PellLucas, n);
    let two = ing.x(1);
    let (sum, diag_pow) = homogeneous_sum((2..n).map(|k| ing.lucas_shift(k)), &ing.sub, &ing.diag);
    Ok(two * (diag_pow * (two - ing.x(n) * 3) + sum))
}

pub fn det_closed(kind: SequenceKind, n: usize) -> Result<BigInt> {
    match kind {
        SequenceKind::Pell => det_pell_closed(n),
        SequenceKind::PellLucas => det_pell_lucas_closed(n),
    }
}

/// Scalars appearing in the Hessenberg reduction of `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellScalars {
    pub n: usize,
    /// `g_n = P1 - 2Pn + sum_{k=2}^{n-1} P(k-1) r^(n-k)`
    pub g: Rational,
    /// `g'_n = Pn + sum_{k=2}^{n-1} Pk r^(n-k)`
    pub g_prime: Rational,
    /// `r = Pn / (P1 - P(n+1))`
    pub ratio: Rational,
}

/// Scalars appearing in the Hessenberg reduction of `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellLucasScalars {
    pub n: usize,
    /// `u_n = Q1 - 3Qn + sum_{k=2}^{n-1} (Q(k+1) - 3Qk) r^(n-k)`
    pub u: Rational,
    /// `u'_n = sum_{k=2}^{n} Qk r^(n-k)`
    pub u_prime: Rational,
    /// `r = (Qn - 2) / (Q1 - Q(n+1))`
    pub ratio: Rational,
}

pub fn pell_scalars(n: usize) -> Result<PellScalars> {
    require_order("Pell scalars", n, 3)?;
    let ing = Ingredients::new(SequenceKind::Pell, n);
    let ratio = ing.ratio();
    let g_tail = horner((2..n).map(|k| ing.x(k - 1).clone()), &ratio) * &ratio;
    let g = Rational::from_integer(ing.x(1) - ing.x(n) * 2) + g_tail;
    let g_prime_tail = horner((2..n).map(|k| ing.x(k).clone()), &ratio) * &ratio;
    let g_prime = Rational::from_integer(ing.x(n).clone()) + g_prime_tail;
    Ok(PellScalars {
        n,
        g,
        g_prime,
        ratio,
    })
}

pub fn pell_lucas_scalars(n: usize) -> Result<PellLucasScalars> {
    require_order("Pell-Lucas scalars", n, 3)?;
    let ing = Ingredients::new(SequenceKind::PellLucas, n);
    let ratio = ing.ratio();
    let u_tail = horner((2..n).map(|k| ing.lucas_shift(k)), &ratio) * &ratio;
    let u = Rational::from_integer(ing.x(1) - ing.x(n) * 3) + u_tail;
    let u_prime = horner((2..=n).map(|k| ing.x(k).clone()), &ratio);
    Ok(PellLucasScalars {
        n,
        u,
        u_prime,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rational};

    #[test]
    fn pell_determinants() {
        assert_eq!(det_pell_closed(3).unwrap(), BigInt::from(104));
        assert_eq!(det_pell_closed(4).unwrap(), BigInt::from(-18560));
    }

    #[test]
    fn pell_lucas_determinants() {
        assert_eq!(det_pell_lucas_closed(3).unwrap(), BigInt::from(2464));
        assert_eq!(det_pell_lucas_closed(4).unwrap(), BigInt::from(-1247232));
    }

    #[test]
    fn small_orders_rejected() {
        for n in 0..3 {
            assert!(det_pell_closed(n).is_err());
            assert!(det_pell_lucas_closed(n).is_err());
            assert!(pell_scalars(n).is_err());
            assert!(pell_lucas_scalars(n).is_err());
        }
    }

    #[test]
    fn pell_scalars_order_three() {
        let s = pell_scalars(3).unwrap();
        assert_eq!(s.g, rational(-104, 11));
        assert_eq!(s.ratio, rational(-5, 11));
        // (P1 - P4) g = -11 * (-104/11)
        assert_eq!(&s.g * int(-11), int(104));
    }

    #[test]
    fn pell_scalars_order_four() {
        let s = pell_scalars(4).unwrap();
        // (P1 - P5)^2 = 28^2
        assert_eq!(s.g, rational(-18560, 784));
    }

    #[test]
    fn pell_lucas_scalars_order_three() {
        let s = pell_lucas_scalars(3).unwrap();
        assert_eq!(s.u, rational(-77, 2));
        assert_eq!(s.ratio, rational(-3, 8));
        assert_eq!(int(2) * int(-32) * &s.u, int(2464));
    }

    #[test]
    fn pell_lucas_scalars_order_four() {
        let s = pell_lucas_scalars(4).unwrap();
        // 2 (Q1 - Q5)^2 = 2 * 80^2
        assert_eq!(s.u, rational(-1247232, 12800));
    }

    #[test]
    fn sequence_circulants() {
        let c = sequence_circulant(SequenceKind::PellLucas, 3).unwrap();
        assert_eq!(c.first_row(), &[int(2), int(6), int(14)]);
        assert!(sequence_circulant(SequenceKind::Pell, 0).is_err());
    }
}
