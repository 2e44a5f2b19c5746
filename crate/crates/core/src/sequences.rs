//! Pell and Pell-Lucas numbers.
//!
//! Both sequences satisfy `x(k) = 2 x(k-1) + x(k-2)`; they differ only in the
//! seeds (`P0 = 0, P1 = 1` and `Q0 = Q1 = 2`). The roots of `x^2 - 2x - 1` are
//! `1 + sqrt(2)` and `1 - sqrt(2)`, so powers of `1 + sqrt(2)` computed exactly
//! in `Z[sqrt(2)]` give both sequences at once: `(1 + sqrt 2)^n = Q_n/2 + P_n sqrt 2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Pell,
    PellLucas,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 2] = [SequenceKind::Pell, SequenceKind::PellLucas];

    /// Term `n` of this sequence.
    pub fn term(self, n: usize) -> BigInt {
        match self {
            SequenceKind::Pell => pell(n),
            SequenceKind::PellLucas => pell_lucas(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Pell => "pell",
            SequenceKind::PellLucas => "pell-lucas",
        }
    }

    /// `[x0, x1]`.
    fn seeds(self) -> (BigInt, BigInt) {
        match self {
            SequenceKind::Pell => (BigInt::zero(), BigInt::one()),
            SequenceKind::PellLucas => (BigInt::from(2), BigInt::from(2)),
        }
    }

    /// `[x0, x1, ..., x_last]` by the recurrence.
    pub fn terms_through(self, last: usize) -> Vec<BigInt> {
        let (x0, x1) = self.seeds();
        let mut out = Vec::with_capacity(last + 1);
        out.push(x0);
        if last >= 1 {
            out.push(x1);
        }
        for k in 2..=last {
            let next = (&out[k - 1] << 1) + &out[k - 2];
            out.push(next);
        }
        out
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SequenceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pell" => Ok(SequenceKind::Pell),
            "pell-lucas" => Ok(SequenceKind::PellLucas),
            other => Err(format!(
                "unknown sequence `{other}` (expected pell or pell-lucas)"
            )),
        }
    }
}

fn nth_term(seeds: (BigInt, BigInt), n: usize) -> BigInt {
    let (mut prev, mut cur) = seeds;
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = (&cur << 1) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `P_n`: 0, 1, 2, 5, 12, 29, ...
pub fn pell(n: usize) -> BigInt {
    nth_term(SequenceKind::Pell.seeds(), n)
}

/// `Q_n`: 2, 2, 6, 14, 34, 82, ...
pub fn pell_lucas(n: usize) -> BigInt {
    nth_term(SequenceKind::PellLucas.seeds(), n)
}

/// `[x1, ..., xn]`, the first row of the order-`n` circulant for `kind`.
pub fn sequence_prefix(kind: SequenceKind, n: usize) -> Vec<BigInt> {
    let mut terms = kind.terms_through(n);
    terms.remove(0);
    terms
}

/// An element `a + b sqrt(2)` of `Z[sqrt(2)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn one() -> Self {
        QuadInt::new(1, 0)
    }

    /// `1 + sqrt(2)`.
    pub fn alpha() -> Self {
        QuadInt::new(1, 1)
    }

    /// `1 - sqrt(2)`.
    pub fn beta() -> Self {
        QuadInt::new(1, -1)
    }

    pub fn conjugate(&self) -> Self {
        QuadInt {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a^2 - 2 b^2`, multiplicative.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - ((&self.b * &self.b) << 1)
    }

    /// Square-and-multiply.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadInt::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl<'a> Mul<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;

    fn mul(self, rhs: &'a QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a * &rhs.a + ((&self.b * &rhs.b) << 1),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;

    fn mul(self, rhs: QuadInt) -> QuadInt {
        &self * &rhs
    }
}

impl<'a> Add<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;

    fn add(self, rhs: &'a QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for QuadInt {
    type Output = QuadInt;

    fn add(self, rhs: QuadInt) -> QuadInt {
        &self + &rhs
    }
}

impl<'a> Sub<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;

    fn sub(self, rhs: &'a QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;

    fn sub(self, rhs: QuadInt) -> QuadInt {
        &self - &rhs
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;

    fn neg(self) -> QuadInt {
        QuadInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

/// `(1 + sqrt 2)^n`. The `b` part is `P_n` and twice the `a` part is `Q_n`.
pub fn alpha_power(n: usize) -> QuadInt {
    QuadInt::alpha().pow(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pell_examples() {
        assert_eq!(pell(0), BigInt::from(0));
        assert_eq!(pell(1), BigInt::from(1));
        assert_eq!(pell(4), BigInt::from(12));
    }

    #[test]
    fn pell_lucas_examples() {
        assert_eq!(pell_lucas(0), BigInt::from(2));
        assert_eq!(pell_lucas(3), BigInt::from(14));
        assert_eq!(pell_lucas(5), BigInt::from(82));
    }

    #[test]
    fn alpha_power_examples() {
        assert_eq!(alpha_power(0), QuadInt::new(1, 0));
        assert_eq!(alpha_power(3), QuadInt::new(7, 5));
        let a5 = alpha_power(5);
        assert_eq!(a5, QuadInt::new(41, 29));
        assert_eq!(&a5.a * 2, pell_lucas(5));
        assert_eq!(a5.b, pell(5));
    }

    #[test]
    fn prefixes() {
        assert_eq!(sequence_prefix(SequenceKind::Pell, 3), ints(&[1, 2, 5]));
        assert_eq!(
            sequence_prefix(SequenceKind::PellLucas, 3),
            ints(&[2, 6, 14])
        );
        assert_eq!(sequence_prefix(SequenceKind::Pell, 1), ints(&[1]));
    }

    #[test]
    fn terms_through_matches_single_terms() {
        for kind in SequenceKind::ALL {
            let terms = kind.terms_through(40);
            for (k, t) in terms.iter().enumerate() {
                assert_eq!(*t, kind.term(k));
            }
        }
        assert_eq!(SequenceKind::Pell.terms_through(0), ints(&[0]));
    }

    #[test]
    fn beta_is_conjugate_of_alpha() {
        assert_eq!(QuadInt::alpha().conjugate(), QuadInt::beta());
        // alpha * beta = -1
        assert_eq!(QuadInt::alpha() * QuadInt::beta(), QuadInt::new(-1, 0));
        assert_eq!(QuadInt::alpha().norm(), BigInt::from(-1));
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("pell".parse::<SequenceKind>(), Ok(SequenceKind::Pell));
        assert_eq!(
            "pell-lucas".parse::<SequenceKind>(),
            Ok(SequenceKind::PellLucas)
        );
        assert!("lucas".parse::<SequenceKind>().is_err());
    }
}
