use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pellcirc::cli::{
    render_records, resolve_n_cap, run_bench, run_det, run_inv, run_verify, CliError, Format,
    Method, DEFAULT_ORACLE_CUTOFF,
};
use pellcirc::SequenceKind;

#[derive(Parser)]
#[command(
    name = "pellcirc",
    version,
    about = "Exact determinants and inverses of Pell / Pell-Lucas circulant matrices"
)]
struct Cli {
    /// Largest accepted order (default 10000, or PELLCIRC_N_CAP).
    #[arg(long, global = true)]
    n_cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of circ(x1, ..., xn).
    Det {
        #[arg(long)]
        seq: SequenceKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// First row of the inverse, as exact fractions.
    Inv {
        #[arg(long)]
        seq: SequenceKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check every closed form against the oracles up to n-max.
    Verify {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Time closed-form vs. Bareiss determinants.
    Bench {
        /// Comma-separated orders, e.g. 8,16,32.
        #[arg(long, default_value = "")]
        n: String,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CUTOFF)]
        oracle_cutoff: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn parse_orders(list: &str) -> Result<Vec<usize>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| CliError::Usage(format!("invalid order `{s}` in --n")))
        })
        .collect()
}

fn reject_format(format: Format, allowed: &[Format], command: &str) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{command} does not support --format {format:?}"
        )))
    }
}

/// Returns the text to print and whether the run counts as a pass.
fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let cap = resolve_n_cap(cli.n_cap)?;
    match cli.command {
        Command::Det {
            seq,
            n,
            method,
            format,
        } => {
            let rec = run_det(seq, n, method, cap)?;
            Ok((render_records(&[rec], format)?, true))
        }
        Command::Inv {
            seq,
            n,
            method,
            format,
        } => {
            reject_format(format, &[Format::Json, Format::Plain], "inv")?;
            let rec = run_inv(seq, n, method, cap)?;
            Ok((render_records(&[rec], format)?, true))
        }
        Command::Verify { n_max, format } => {
            reject_format(format, &[Format::Json, Format::Plain], "verify")?;
            if n_max > cap {
                return Err(CliError::Cap { n: n_max, cap });
            }
            let report = run_verify(n_max)?;
            let text = match format {
                Format::Json => report.to_json()? + "\n",
                _ => report.to_plain(),
            };
            Ok((text, report.passed()))
        }
        Command::Bench {
            n,
            reps,
            oracle_cutoff,
            format,
        } => {
            reject_format(format, &[Format::Csv, Format::Json], "bench")?;
            let orders = parse_orders(&n)?;
            let rows = run_bench(&orders, reps, oracle_cutoff, cap)?;
            Ok((render_records(&rows, format)?, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, passed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("pellcirc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
