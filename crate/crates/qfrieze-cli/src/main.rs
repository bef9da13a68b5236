//! `qfrieze`: exact quantum frieze patterns from the command line.
//!
//! Four subcommands: `frieze` (a window of the frieze of variables),
//! `mutate` (the initial seed pushed along a mutation sequence),
//! `continuant` (one quantum continuant), and `verify` (named machine
//! checks). Results go to stdout; errors go to stderr. Exit codes: 0 on
//! success, 1 when a verification check fails (or on an internal error),
//! 2 on invalid usage or invalid input values.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use qfrieze_core::continuant::ContinuantTable;
use qfrieze_core::frieze::frieze_of_variables;
use qfrieze_core::seed::QuantumSeed;
use qfrieze_core::verify::{run_suite, DEFAULT_CHECKS, OPTIONAL_CHECKS};
use qfrieze_core::{json, render};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "qfrieze",
    version,
    about = "Exact quantum frieze patterns and quantum cluster variables",
    long_about = "Computes quantum frieze patterns of even rank n over the quantum torus, \
                  mutates quantum seeds, evaluates quantum continuants, and machine-verifies \
                  the identities relating them. All arithmetic is exact."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a window of the frieze of variables (f(i, 0) = X_i)
    Frieze {
        /// Rank: an even integer >= 2
        #[arg(long)]
        n: usize,
        /// First column of the window (default -(n+3); must be <= 0)
        #[arg(long, allow_hyphen_values = true)]
        jmin: Option<i64>,
        /// Last column of the window (default 2(n+3); must be >= 0)
        #[arg(long, allow_hyphen_values = true)]
        jmax: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Mutate the initial seed along a sequence of directions
    Mutate {
        /// Rank: an even integer >= 2
        #[arg(long)]
        n: usize,
        /// Comma-separated 1-based directions, applied left to right
        #[arg(long, value_delimiter = ',')]
        seq: Vec<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the quantum continuant P(m, i)
    Continuant {
        /// Rank: an even integer >= 2
        #[arg(long)]
        n: usize,
        /// Degree (0 <= m <= n)
        #[arg(long)]
        m: usize,
        /// Starting index (1-based; i + m - 1 <= n for m >= 1)
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification checks and report the results
    Verify {
        /// Rank: an even integer >= 2
        #[arg(long)]
        n: usize,
        /// Comma-separated check names (default: the full standard suite)
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// A command failure: what to print on stderr and the exit code (1 for
/// verification/internal failures, 2 for usage errors).
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn runtime(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

fn require_even_rank(n: usize) -> Result<(), Failure> {
    if n < 2 || n % 2 != 0 {
        return Err(Failure::usage(format!("--n must be an even integer >= 2, got {n}")));
    }
    Ok(())
}

fn emit_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string(value).expect("documents serialize"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Frieze { n, jmin, jmax, format } => {
            require_even_rank(n)?;
            let j_min = jmin.unwrap_or(-(n as i64) - 3);
            let j_max = jmax.unwrap_or(2 * (n as i64 + 3));
            if j_min > 0 {
                return Err(Failure::usage(format!("--jmin must be <= 0, got {j_min}")));
            }
            if j_max < 0 {
                return Err(Failure::usage(format!("--jmax must be >= 0, got {j_max}")));
            }
            let grid = frieze_of_variables(n, j_min, j_max)
                .map_err(|e| Failure::runtime(e.to_string()))?;
            match format {
                Format::Text => print!("{}", render::frieze_text(&grid)),
                Format::Json => emit_json(&json::grid_document(&grid)),
            }
            Ok(())
        }
        Command::Mutate { n, seq, format } => {
            require_even_rank(n)?;
            if let Some(&bad) = seq.iter().find(|&&k| k < 1 || k > n) {
                return Err(Failure::usage(format!(
                    "--seq entries must lie in 1..={n}, got {bad}"
                )));
            }
            let seed = QuantumSeed::initial(n)
                .and_then(|s| s.mutate_sequence(&seq))
                .map_err(|e| Failure::runtime(e.to_string()))?;
            match format {
                Format::Text => print!("{}", render::seed_text(&seed)),
                Format::Json => emit_json(&json::seed_document(&seed)),
            }
            Ok(())
        }
        Command::Continuant { n, m, i, format } => {
            require_even_rank(n)?;
            if m > n {
                return Err(Failure::usage(format!("--m must be at most {n}, got {m}")));
            }
            let max_i = if m == 0 { n + 1 } else { n + 1 - m };
            if i < 1 || i > max_i {
                return Err(Failure::usage(format!(
                    "--i must lie in 1..={max_i} when --m is {m}, got {i}"
                )));
            }
            let table = ContinuantTable::new(n).map_err(|e| Failure::runtime(e.to_string()))?;
            let value = table.get(m, i).map_err(|e| Failure::runtime(e.to_string()))?;
            match format {
                Format::Text => print!("{}", render::continuant_text(m, i, value)),
                Format::Json => emit_json(&json::continuant_document(n, m, i, value)),
            }
            Ok(())
        }
        Command::Verify { n, checks, format } => {
            require_even_rank(n)?;
            if let Some(names) = &checks {
                let known: Vec<&str> =
                    DEFAULT_CHECKS.iter().chain(OPTIONAL_CHECKS.iter()).copied().collect();
                if let Some(bad) = names.iter().find(|name| !known.contains(&name.as_str())) {
                    return Err(Failure::usage(format!(
                        "--checks contains unknown check '{bad}'; valid checks: {}",
                        known.join(", ")
                    )));
                }
                if names.is_empty() {
                    return Err(Failure::usage("--checks must name at least one check"));
                }
            }
            let report = run_suite(n, checks.as_deref())
                .map_err(|e| Failure::runtime(e.to_string()))?;
            match format {
                Format::Text => print!("{}", render::verification_text(&report)),
                Format::Json => emit_json(&json::verification_document(&report)),
            }
            if !report.all_passed() {
                return Err(Failure::runtime(format!(
                    "verification failed: {}",
                    report.summary()
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap prints help/version on stdout with code 0 and usage errors
        // on stderr with code 2
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
