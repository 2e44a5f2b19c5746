//! Rational functions of `w^k` that give the eigenvalues of `P` and `Q`
//! without summing the DFT. Their nonvanishing at `k = 1..n-1` (together with
//! the nonzero row sum at `k = 0`) is what makes both matrices invertible.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::circulant::ComplexValue;
use crate::error::{require_order, Error, Result};
use crate::sequences::{pell, pell_lucas};

fn check_index(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange {
            what: "symbol index k",
            index: k,
            lo: 1,
            hi: n - 1,
        });
    }
    Ok(())
}

fn to_f64(v: &BigInt) -> Result<f64> {
    v.to_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::Range(format!("sequence term with {} bits", v.bits())))
}

fn root_of_unity(n: usize, k: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

fn denominator(z: Complex64) -> Complex64 {
    1.0 - 2.0 * z - z * z
}

/// `u(w^k) = (1 - P(n+1) - Pn w^k) / (1 - 2 w^k - w^(2k))`.
///
/// Defined for `n >= 3` and `1 <= k <= n-1`. The denominator has roots
/// `-1 +- sqrt(2)`, neither on the unit circle.
pub fn symbol_u(n: usize, k: usize) -> Result<ComplexValue> {
    require_order("symbol u", n, 3)?;
    check_index(n, k)?;
    let pn = to_f64(&pell(n))?;
    let pn1 = to_f64(&pell(n + 1))?;
    let z = root_of_unity(n, k);
    Ok((1.0 - pn1 - pn * z) / denominator(z))
}

/// `v(w^k) = (2 - Q(n+1) + (2 - Qn) w^k) / (1 - 2 w^k - w^(2k))`.
pub fn symbol_v(n: usize, k: usize) -> Result<ComplexValue> {
    require_order("symbol v", n, 3)?;
    check_index(n, k)?;
    let qn = to_f64(&pell_lucas(n))?;
    let qn1 = to_f64(&pell_lucas(n + 1))?;
    let z = root_of_unity(n, k);
    Ok((2.0 - qn1 + (2.0 - qn) * z) / denominator(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_three_matches_dft_value() {
        let u = symbol_u(3, 1).unwrap();
        let expected = Complex64::new(-2.5, -1.5 * 3f64.sqrt());
        assert!((u - expected).norm() < 1e-12);
    }

    #[test]
    fn v_at_minus_one() {
        // n = 6, k = 3: w^k = -1, value (Q6 - Q7) / 2
        let v = symbol_v(6, 3).unwrap();
        let expected = (198.0 - 478.0) / 2.0;
        assert!((v.re - expected).abs() < 1e-9);
        assert!(v.im.abs() < 1e-9);
    }

    #[test]
    fn index_bounds() {
        assert!(symbol_u(5, 0).is_err());
        assert!(symbol_u(5, 5).is_err());
        assert!(symbol_v(5, 4).is_ok());
        assert!(symbol_v(2, 1).is_err());
    }
}
