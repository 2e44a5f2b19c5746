//! The `verify` suite: every closed form checked against the generic oracles
//! over a range of orders. Oracle-bound ranges are capped independently of
//! `n_max` (determinants 25, inverses 15, floating point 12).

use std::fmt;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::circulant::{circ_det_via_eigen, circ_eigenvalues, circ_expand, is_circulant};
use crate::closed_forms::{
    bidiagonal_inverse_pell, bidiagonal_inverse_pell_lucas, bidiagonal_pell, bidiagonal_pell_lucas,
    build_k, build_l, build_m, build_n, det_closed, det_pell_closed, det_pell_lucas_closed,
    hankel_block_inverse_k, hankel_block_inverse_m, hessenberg_factorization, inv_closed,
    partial_sum_s, pell_lucas_scalars, pell_scalars, sequence_circulant, symbol_u, symbol_v,
};
use crate::linalg::{mat_mul, oracle_det, oracle_inverse, Rational};
use crate::sequences::{alpha_power, pell, pell_lucas, SequenceKind};

pub const DET_ORACLE_MAX: usize = 25;
pub const INVERSE_ORACLE_MAX: usize = 15;
pub const EIGEN_MAX: usize = 12;
pub const STRUCTURE_MAX: usize = 12;
pub const PARTIAL_SUM_MAX: usize = 15;
/// Order 50 bidiagonal blocks come from n = 52.
pub const BIDIAGONAL_MAX: usize = 52;
pub const ALGEBRA_MAX: usize = 8;
pub const SEQUENCE_MAX: usize = 200;

pub const EIGEN_REL_TOL: f64 = 1e-9;
pub const SYMBOL_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub n_range: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<4} {:<40} n={:<9} {}\n",
                c.status.to_string().to_uppercase(),
                c.name,
                c.n_range,
                c.detail
            ));
        }
        out.push_str(&format!("overall: {}\n", self.overall));
        out
    }
}

type CheckResult = Result<(), String>;

/// Runs `f` on every order in `lo..=min(hi, n_max)` in parallel. The
/// reported failure is the one at the smallest order.
fn ranged<F>(name: &str, lo: usize, hi: usize, n_max: usize, what: &str, f: F) -> Check
where
    F: Fn(usize) -> CheckResult + Sync,
{
    let hi = hi.min(n_max);
    if hi < lo {
        return Check {
            name: name.to_string(),
            n_range: "-".to_string(),
            status: Status::Pass,
            detail: format!("skipped: not applicable below n = {lo}"),
        };
    }
    let failure = (lo..=hi)
        .into_par_iter()
        .filter_map(|n| f(n).err().map(|e| (n, e)))
        .min_by_key(|(n, _)| *n);
    let (status, detail) = match failure {
        None => (Status::Pass, format!("{what} for {} orders", hi - lo + 1)),
        Some((n, e)) => (Status::Fail, format!("n={n}: {e}")),
    };
    Check {
        name: name.to_string(),
        n_range: format!("{lo}..={hi}"),
        status,
        detail,
    }
}

fn fixed(name: &str, n_range: &str, what: &str, result: CheckResult) -> Check {
    let (status, detail) = match result {
        Ok(()) => (Status::Pass, what.to_string()),
        Err(e) => (Status::Fail, e),
    };
    Check {
        name: name.to_string(),
        n_range: n_range.to_string(),
        status,
        detail,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err_str(e: impl fmt::Display) -> String {
    e.to_string()
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn check_known_values() -> CheckResult {
    type Det = fn(usize) -> crate::Result<num_bigint::BigInt>;
    let cases: [(&str, Det, usize, i64); 4] = [
        ("det P", det_pell_closed, 3, 104),
        ("det P", det_pell_closed, 4, -18560),
        ("det Q", det_pell_lucas_closed, 3, 2464),
        ("det Q", det_pell_lucas_closed, 4, -1247232),
    ];
    for (label, f, n, expected) in cases {
        let got = f(n).map_err(err_str)?;
        ensure(got == expected.into(), || {
            format!("{label} at n={n}: {got} != {expected}")
        })?;
    }
    Ok(())
}

fn check_binet(last: usize) -> CheckResult {
    let p = SequenceKind::Pell.terms_through(last);
    let q = SequenceKind::PellLucas.terms_through(last);
    for n in 0..=last {
        let a = alpha_power(n);
        ensure(a.b == p[n] && &a.a * 2 == q[n], || {
            format!(
                "n={n}: (1+sqrt2)^n = {a} disagrees with P={}, Q={}",
                p[n], q[n]
            )
        })?;
    }
    Ok(())
}

fn check_recurrence(last: usize) -> CheckResult {
    for n in 2..=last {
        ensure(pell(n) == pell(n - 1) * 2 + pell(n - 2), || {
            format!("Pell recurrence at {n}")
        })?;
        ensure(
            pell_lucas(n) == pell_lucas(n - 1) * 2 + pell_lucas(n - 2),
            || format!("Pell-Lucas recurrence at {n}"),
        )?;
    }
    Ok(())
}

fn check_det(kind: SequenceKind, n: usize) -> CheckResult {
    let closed = det_closed(kind, n).map_err(err_str)?;
    let circ = circ_expand(&sequence_circulant(kind, n).map_err(err_str)?);
    let oracle = oracle_det(&circ).map_err(err_str)?;
    ensure(oracle == Rational::from_integer(closed.clone()), || {
        format!("closed {closed} != oracle {oracle}")
    })
}

fn check_inverse(kind: SequenceKind, n: usize) -> CheckResult {
    let inv = circ_expand(&inv_closed(kind, n).map_err(err_str)?);
    let circ = circ_expand(&sequence_circulant(kind, n).map_err(err_str)?);
    let prod = mat_mul(&inv, &circ).map_err(err_str)?;
    ensure(prod.is_identity(), || {
        "closed inverse times matrix is not I".into()
    })
}

fn check_scalars(n: usize) -> CheckResult {
    let g = pell_scalars(n).map_err(err_str)?.g;
    let diag_p = Rational::from_integer(1 - pell(n + 1));
    let lhs = num_traits::pow(diag_p, n - 2) * g;
    let det = Rational::from_integer(det_pell_closed(n).map_err(err_str)?);
    ensure(lhs == det, || {
        format!("(P1-P(n+1))^(n-2) g = {lhs} != {det}")
    })?;

    let u = pell_lucas_scalars(n).map_err(err_str)?.u;
    let diag_q = Rational::from_integer(2 - pell_lucas(n + 1));
    let lhs = int(2) * num_traits::pow(diag_q, n - 2) * u;
    let det = Rational::from_integer(det_pell_lucas_closed(n).map_err(err_str)?);
    ensure(lhs == det, || {
        format!("2 (Q1-Q(n+1))^(n-2) u = {lhs} != {det}")
    })
}

fn check_geometric_tail(n: usize) -> CheckResult {
    let ratios = [
        (SequenceKind::Pell, pell_scalars(n).map_err(err_str)?.ratio),
        (
            SequenceKind::PellLucas,
            pell_lucas_scalars(n).map_err(err_str)?.ratio,
        ),
    ];
    for (kind, ratio) in ratios {
        let row = inv_closed(kind, n).map_err(err_str)?.into_first_row();
        for i in 3..n {
            ensure(row[i] == &row[i - 1] * &ratio, || {
                format!("{kind}: entry {} is not entry {} times {ratio}", i + 1, i)
            })?;
        }
    }
    Ok(())
}

fn check_oracle_inverse_circulant(n: usize) -> CheckResult {
    for kind in SequenceKind::ALL {
        let circ = circ_expand(&sequence_circulant(kind, n).map_err(err_str)?);
        let inv = oracle_inverse(&circ).map_err(err_str)?;
        ensure(is_circulant(&inv).map_err(err_str)?, || {
            format!("{kind}: oracle inverse not circulant")
        })?;
    }
    Ok(())
}

fn rel_err(approx: Complex64, exact: f64) -> f64 {
    (approx - exact).norm() / exact.abs()
}

fn check_eigen_det(n: usize) -> CheckResult {
    for kind in SequenceKind::ALL {
        let exact = det_closed(kind, n).map_err(err_str)?;
        let exact_f = exact.to_f64().ok_or("determinant not representable")?;
        let approx =
            circ_det_via_eigen(&sequence_circulant(kind, n).map_err(err_str)?).map_err(err_str)?;
        let rel = rel_err(approx, exact_f);
        let rel_im = approx.im.abs() / exact_f.abs();
        ensure(rel < EIGEN_REL_TOL && rel_im < EIGEN_REL_TOL, || {
            format!("{kind}: eigenproduct {approx} vs {exact}, relative error {rel:e}")
        })?;
    }
    Ok(())
}

fn check_symbols(n: usize) -> CheckResult {
    type Symbol = fn(usize, usize) -> crate::Result<Complex64>;
    let pairs: [(SequenceKind, Symbol); 2] = [
        (SequenceKind::Pell, symbol_u),
        (SequenceKind::PellLucas, symbol_v),
    ];
    for (kind, symbol) in pairs {
        let eig =
            circ_eigenvalues(&sequence_circulant(kind, n).map_err(err_str)?).map_err(err_str)?;
        for (k, lambda) in eig.iter().enumerate().skip(1) {
            let s = symbol(n, k).map_err(err_str)?;
            let rel = (s - lambda).norm() / lambda.norm();
            ensure(rel < EIGEN_REL_TOL, || {
                format!("{kind} k={k}: symbol {s} vs DFT {lambda}, relative error {rel:e}")
            })?;
            ensure(s.norm() > SYMBOL_FLOOR, || {
                format!("{kind} k={k}: symbol vanishes ({s})")
            })?;
        }
    }
    Ok(())
}

fn check_factorization(n: usize) -> CheckResult {
    for kind in SequenceKind::ALL {
        hessenberg_factorization(kind, n).map_err(err_str)?;
    }
    Ok(())
}

pub fn expected_parity(n: usize) -> i64 {
    if matches!(n % 4, 1 | 2) {
        1
    } else {
        -1
    }
}

fn check_parity(n: usize) -> CheckResult {
    let expected = int(expected_parity(n));
    let mats = [
        ("M", build_m(n)),
        ("N", build_n(n)),
        ("K", build_k(n)),
        ("L", build_l(n)),
    ];
    for (label, m) in mats {
        let det = oracle_det(&m.map_err(err_str)?).map_err(err_str)?;
        ensure(det == expected, || {
            format!("det {label} = {det}, expected {expected}")
        })?;
    }
    Ok(())
}

fn check_bidiagonal(n: usize) -> CheckResult {
    let cases = [
        ("C", bidiagonal_pell(n), bidiagonal_inverse_pell(n)),
        (
            "A",
            bidiagonal_pell_lucas(n),
            bidiagonal_inverse_pell_lucas(n),
        ),
    ];
    for (label, m, closed) in cases {
        let oracle = oracle_inverse(&m.map_err(err_str)?).map_err(err_str)?;
        ensure(oracle == closed.map_err(err_str)?, || {
            format!("{label}^-1 differs from oracle")
        })?;
    }
    Ok(())
}

fn check_hankel(n: usize) -> CheckResult {
    let cases = [
        ("M", build_m(n), hankel_block_inverse_m(n)),
        ("K", build_k(n), hankel_block_inverse_k(n)),
    ];
    for (label, m, assembled) in cases {
        let oracle = oracle_inverse(&m.map_err(err_str)?).map_err(err_str)?;
        ensure(oracle == assembled.map_err(err_str)?, || {
            format!("assembled {label}^-1 differs from oracle")
        })?;
    }
    Ok(())
}

fn check_partial_sums(n: usize) -> CheckResult {
    let s = |r: usize| partial_sum_s(n, r).map_err(err_str);
    let diag = Rational::from_integer(1 - pell(n + 1));
    let pn = Rational::from_integer(pell(n));
    let first = s(2)? - int(2) * s(1)?;
    let expected = &pn / num_traits::pow(diag.clone(), 2);
    ensure(first == expected, || "S(2) - 2 S(1) identity".into())?;
    for r in 1..=n - 4 {
        let lhs = s(r + 2)? - int(2) * s(r + 1)? - s(r)?;
        let rhs = num_traits::pow(pn.clone(), r + 1) / num_traits::pow(diag.clone(), r + 2);
        ensure(lhs == rhs, || format!("three-term identity at r={r}"))?;
    }
    Ok(())
}

fn check_algebra(n: usize) -> CheckResult {
    let a = circ_expand(&sequence_circulant(SequenceKind::Pell, n).map_err(err_str)?);
    let b = circ_expand(&sequence_circulant(SequenceKind::PellLucas, n).map_err(err_str)?);
    let ab = mat_mul(&a, &b).map_err(err_str)?;
    let ba = mat_mul(&b, &a).map_err(err_str)?;
    ensure(ab == ba, || "P Q != Q P".into())?;
    ensure(is_circulant(&ab).map_err(err_str)?, || {
        "P Q is not circulant".into()
    })
}

/// Runs the full suite. Fails with a usage error when `n_max < 3`.
pub fn run_verify(n_max: usize) -> Result<VerifyReport, CliError> {
    if n_max < 3 {
        return Err(CliError::Usage(format!(
            "verify requires --n-max >= 3, got {n_max}"
        )));
    }
    let mut checks = vec![
        fixed(
            "known-determinant-values",
            "3..=4",
            "104, -18560, 2464, -1247232 reproduced",
            check_known_values(),
        ),
        fixed(
            "binet-vs-recurrence",
            &format!("0..={SEQUENCE_MAX}"),
            "exact (1+sqrt2)^n agrees with both recurrences",
            check_binet(SEQUENCE_MAX),
        ),
        fixed(
            "sequence-recurrence",
            &format!("2..={SEQUENCE_MAX}"),
            "x(n) = 2x(n-1) + x(n-2) for both sequences",
            check_recurrence(SEQUENCE_MAX),
        ),
    ];
    for kind in SequenceKind::ALL {
        checks.push(ranged(
            &format!("det-closed-vs-oracle/{kind}"),
            3,
            DET_ORACLE_MAX,
            n_max,
            "exact equality with Bareiss",
            move |n| check_det(kind, n),
        ));
    }
    for kind in SequenceKind::ALL {
        checks.push(ranged(
            &format!("inverse-closed-times-matrix/{kind}"),
            3,
            INVERSE_ORACLE_MAX,
            n_max,
            "product is exactly I",
            move |n| check_inverse(kind, n),
        ));
    }
    checks.extend([
        ranged(
            "scalar-consistency",
            3,
            DET_ORACLE_MAX,
            n_max,
            "g_n and u_n reproduce det",
            check_scalars,
        ),
        ranged(
            "inverse-geometric-tail",
            3,
            INVERSE_ORACLE_MAX,
            n_max,
            "entries 3..n geometric",
            check_geometric_tail,
        ),
        ranged(
            "oracle-inverse-is-circulant",
            3,
            INVERSE_ORACLE_MAX,
            n_max,
            "Gauss-Jordan inverse is circulant",
            check_oracle_inverse_circulant,
        ),
        ranged(
            "circulant-algebra",
            3,
            ALGEBRA_MAX,
            n_max,
            "P Q = Q P and is circulant",
            check_algebra,
        ),
        ranged(
            "eigen-determinant",
            3,
            EIGEN_MAX,
            n_max,
            "DFT eigenproduct within 1e-9 relative",
            check_eigen_det,
        ),
        ranged(
            "symbol-functions",
            3,
            EIGEN_MAX,
            n_max,
            "u, v match DFT within 1e-9 and exceed 1e-6",
            check_symbols,
        ),
        ranged(
            "hessenberg-factorization",
            4,
            STRUCTURE_MAX,
            n_max,
            "MPN, KQL shape and direct-sum reductions exact",
            check_factorization,
        ),
        ranged(
            "transform-parity",
            4,
            STRUCTURE_MAX,
            n_max,
            "det M, N, K, L follow n mod 4",
            check_parity,
        ),
        ranged(
            "bidiagonal-inverse",
            3,
            BIDIAGONAL_MAX,
            n_max,
            "closed C^-1, A^-1 equal oracle",
            check_bidiagonal,
        ),
        ranged(
            "hankel-corollaries",
            4,
            STRUCTURE_MAX,
            n_max,
            "assembled M^-1, K^-1 equal oracle",
            check_hankel,
        ),
        ranged(
            "partial-sum-recurrences",
            5,
            PARTIAL_SUM_MAX,
            n_max,
            "S(r) identities exact",
            check_partial_sums,
        ),
    ]);
    let overall = if checks.iter().all(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerifyReport { checks, overall })
}
