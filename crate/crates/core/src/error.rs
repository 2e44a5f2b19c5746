use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operand shapes are incompatible for the requested operation.
    #[error("incompatible shapes: {left_rows}x{left_cols} and {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid matrix data: {0}")]
    InvalidMatrix(String),

    /// Elimination found no nonzero pivot in this column.
    #[error("singular matrix: no pivot in column {pivot}")]
    Singular { pivot: usize },

    #[error("order {n} is below the minimum of {min} for {what}")]
    OrderTooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },

    #[error("index {index} outside {lo}..={hi} for {what}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        lo: usize,
        hi: usize,
    },

    /// A value cannot be represented as a finite `f64`.
    #[error("value out of floating-point range: {0}")]
    Range(String),

    /// A structural identity that must hold exactly did not. Always a bug.
    #[error("integrity failure in {what} at ({row}, {col}): expected {expected}, found {found}")]
    Integrity {
        what: &'static str,
        row: usize,
        col: usize,
        expected: String,
        found: String,
    },
}

pub(crate) fn require_order(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::OrderTooSmall { what, n, min })
    } else {
        Ok(())
    }
}
