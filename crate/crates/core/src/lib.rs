#![forbid(unsafe_code)]

//! Exact determinants and inverses of circulant matrices whose first rows are
//! Pell numbers `circ(P1, ..., Pn)` or Pell-Lucas numbers `circ(Q1, ..., Qn)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`sequences`]: Pell / Pell-Lucas generation by recurrence and by exact
//!   powers of `1 + sqrt(2)` in `Z[sqrt(2)]`.
//! - [`linalg`]: generic exact dense linear algebra over rationals (Bareiss
//!   determinants, Gauss-Jordan inverses). These are the oracles.
//! - [`circulant`]: circulant construction, expansion and DFT eigenvalues.
//! - [`closed_forms`]: the closed-form determinants, inverses, transform
//!   matrices and factorizations specific to Pell / Pell-Lucas circulants.
//! - [`cli`]: record types, verification suite and benchmark driver behind the
//!   `pellcirc` binary.

pub mod circulant;
pub mod cli;
pub mod closed_forms;
mod error;
pub mod linalg;
pub mod sequences;

pub use circulant::{Circulant, ComplexValue};
pub use error::{Error, Result};
pub use linalg::{DenseMatrix, Rational};
pub use sequences::{QuadInt, SequenceKind};

pub use num_bigint::BigInt;
