//! Closed-form vs. elimination timing.

use std::time::Instant;

use super::{check_n, det_string, CliError, Method, OutputRecord};
use crate::sequences::SequenceKind;

fn median(mut samples: Vec<u64>) -> u64 {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        // mean of the middle pair, without overflow
        samples[mid - 1] / 2 + samples[mid] / 2 + (samples[mid - 1] % 2 + samples[mid] % 2) / 2
    }
}

fn time_det(
    kind: SequenceKind,
    n: usize,
    method: Method,
    reps: usize,
) -> Result<(String, u64), CliError> {
    let mut samples = Vec::with_capacity(reps);
    let mut det = String::new();
    for _ in 0..reps {
        let start = Instant::now();
        det = det_string(kind, n, method)?;
        samples.push(start.elapsed().as_nanos().min(u64::MAX as u128) as u64);
    }
    Ok((det, median(samples)))
}

/// For every `n` and both sequences: time the closed form, then the Bareiss
/// oracle unless `n > oracle_cutoff`. Fails if both ran and disagree.
pub fn run_bench(
    ns: &[usize],
    reps: usize,
    oracle_cutoff: usize,
    cap: usize,
) -> Result<Vec<OutputRecord>, CliError> {
    if reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    for &n in ns {
        check_n(n, 3, cap, "bench")?;
    }
    let mut out = Vec::new();
    for &n in ns {
        for kind in SequenceKind::ALL {
            let (closed_det, closed_ns) = time_det(kind, n, Method::Closed, reps)?;
            let mut closed = OutputRecord::new(kind, n, Method::Closed);
            closed.det = Some(closed_det.clone());
            closed.elapsed_ns = Some(closed_ns);
            out.push(closed);

            let mut oracle = OutputRecord::new(kind, n, Method::Oracle);
            if n > oracle_cutoff {
                oracle.skipped = true;
            } else {
                let (oracle_det, oracle_ns) = time_det(kind, n, Method::Oracle, reps)?;
                if oracle_det != closed_det {
                    return Err(CliError::Failed(format!(
                        "{kind} n={n}: closed determinant {closed_det} != oracle {oracle_det}"
                    )));
                }
                oracle.det = Some(oracle_det);
                oracle.elapsed_ns = Some(oracle_ns);
            }
            out.push(oracle);
        }
    }
    Ok(out)
}
