//! Everything behind the `pellcirc` binary except argument parsing: output
//! records and their renderings, the verification suite and the benchmark.

mod bench;
mod verify;

pub use bench::run_bench;
pub use verify::{run_verify, Check, Status, VerifyReport};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::circulant::{circ_det_via_eigen, circ_expand};
use crate::closed_forms::{det_closed, inv_closed, sequence_circulant};
use crate::error::Error;
use crate::linalg::{oracle_det, oracle_inverse, render_fraction, render_rational};
use crate::sequences::SequenceKind;

pub const DEFAULT_N_CAP: usize = 10_000;
pub const DEFAULT_ORACLE_CUTOFF: usize = 256;
pub const N_CAP_ENV: &str = "PELLCIRC_N_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Oracle,
    Eigen,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Oracle => "oracle",
            Method::Eigen => "eigen",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("n = {n} exceeds the cap of {cap} (raise it with --n-cap or {N_CAP_ENV})")]
    Cap { n: usize, cap: usize },
    #[error(transparent)]
    Compute(#[from] Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Cap { .. } => 2,
            CliError::Compute(_) | CliError::Failed(_) => 1,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Failed(format!("csv output: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Failed(format!("json output: {e}"))
    }
}

/// Effective n-cap: explicit flag, then `PELLCIRC_N_CAP`, then the default.
pub fn resolve_n_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(N_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{N_CAP_ENV}={v:?} is not a valid count"))),
        Err(_) => Ok(DEFAULT_N_CAP),
    }
}

fn check_n(n: usize, min: usize, cap: usize, what: &str) -> Result<(), CliError> {
    if n < min {
        return Err(CliError::Usage(format!(
            "{what} requires n >= {min}, got {n}"
        )));
    }
    if n > cap {
        return Err(CliError::Cap { n, cap });
    }
    Ok(())
}

/// One result line. Field order here is the serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub seq: String,
    pub n: usize,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse_first_row: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ns: Option<u64>,
    /// Set on bench rows whose oracle run was skipped by the cutoff.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
}

impl OutputRecord {
    pub fn new(kind: SequenceKind, n: usize, method: Method) -> Self {
        OutputRecord {
            seq: kind.name().to_string(),
            n,
            method: method.name().to_string(),
            det: None,
            inverse_first_row: None,
            elapsed_ns: None,
            skipped: false,
        }
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string(self)?)
    }
}

/// Determinant as exact decimal text for the given method.
pub fn det_string(kind: SequenceKind, n: usize, method: Method) -> Result<String, Error> {
    Ok(match method {
        Method::Closed => det_closed(kind, n)?.to_string(),
        Method::Oracle => {
            render_rational(&oracle_det(&circ_expand(&sequence_circulant(kind, n)?))?)
        }
        Method::Eigen => {
            let d = circ_det_via_eigen(&sequence_circulant(kind, n)?)?;
            let rounded = d.re.round();
            // avoid printing "-0"
            format!("{:.0}", if rounded == 0.0 { 0.0 } else { rounded })
        }
    })
}

pub fn run_det(
    kind: SequenceKind,
    n: usize,
    method: Method,
    cap: usize,
) -> Result<OutputRecord, CliError> {
    let min = if method == Method::Closed { 3 } else { 1 };
    check_n(n, min, cap, &format!("det --method {}", method.name()))?;
    let mut rec = OutputRecord::new(kind, n, method);
    rec.det = Some(det_string(kind, n, method)?);
    Ok(rec)
}

pub fn run_inv(
    kind: SequenceKind,
    n: usize,
    method: Method,
    cap: usize,
) -> Result<OutputRecord, CliError> {
    check_n(n, 3, cap, "inv")?;
    let row = match method {
        Method::Closed => inv_closed(kind, n)?.into_first_row(),
        Method::Oracle => {
            let inv = oracle_inverse(&circ_expand(&sequence_circulant(kind, n)?))?;
            inv.row(0).to_vec()
        }
        Method::Eigen => {
            return Err(CliError::Usage(
                "inv supports --method closed or oracle".into(),
            ))
        }
    };
    let mut rec = OutputRecord::new(kind, n, method);
    rec.inverse_first_row = Some(row.iter().map(render_fraction).collect());
    Ok(rec)
}

pub const CSV_HEADER: [&str; 5] = ["seq", "n", "method", "det", "elapsed_ns"];

/// Renders records, each line newline-terminated. CSV gets a header row
/// unless there are no records at all.
pub fn render_records(records: &[OutputRecord], format: Format) -> Result<String, CliError> {
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in records {
                out.push_str(&r.to_json()?);
                out.push('\n');
            }
        }
        Format::Csv => {
            if records.iter().any(|r| r.inverse_first_row.is_some()) {
                return Err(CliError::Usage(
                    "inverse rows are only available as json or plain".into(),
                ));
            }
            if records.is_empty() {
                return Ok(out);
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            for r in records {
                let det = if r.skipped {
                    "skipped".to_string()
                } else {
                    r.det.clone().unwrap_or_default()
                };
                let elapsed = r.elapsed_ns.map(|e| e.to_string()).unwrap_or_default();
                w.write_record([r.seq.as_str(), &r.n.to_string(), &r.method, &det, &elapsed])?;
            }
            let bytes = w
                .into_inner()
                .map_err(|e| CliError::Failed(format!("csv output: {e}")))?;
            out = String::from_utf8(bytes).expect("csv writer emits utf-8");
        }
        Format::Plain => {
            for r in records {
                let line = match (&r.det, &r.inverse_first_row) {
                    _ if r.skipped => format!("{} n={} {} skipped", r.seq, r.n, r.method),
                    (Some(det), None) => det.clone(),
                    (_, Some(row)) => row.join(" "),
                    (None, None) => String::new(),
                };
                out.push_str(&line);
                out.push('\n');
            }
        }
    }
    Ok(out)
}
