//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification or oracle failure, 2 usage or
//! domain error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::bench::{self, ReportFormat};
use crate::error::{Error, Result};
use crate::formula;
use crate::nat::Nat;
use crate::oracle;
use crate::strategies::Strategy;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "primerec",
    version,
    about = "Next-prime recurrence evaluator and verifier"
)]
struct Cli {
    /// Evaluation strategy: literal, windowed or oracle.
    #[arg(long, global = true, default_value = "windowed")]
    strategy: Strategy,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print F(n), the smallest prime greater than n.
    Next { n: Nat },
    /// Print the first <count> primes by iterating F from 2.
    Seq { count: usize },
    /// Check F(p) against trial division for every prime p <= limit.
    Verify { limit: u64 },
    /// Evaluate the literal divisor count or prime function at i.
    Eval { kind: EvalKind, i: Nat },
    /// Operation-count benchmark across sizes and strategies.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "literal,windowed,oracle")]
        strategies: Vec<Strategy>,
        #[arg(long, default_value = "csv")]
        format: ReportFormat,
        /// Write wall_nanos as 0 so reports are byte-reproducible.
        #[arg(long)]
        deterministic: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EvalKind {
    Dcount,
    Pfunc,
}

/// A prime whose computed successor disagreed with the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub p: u64,
    pub got: Nat,
    pub expected: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub limit: u64,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub strategy: Strategy,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `next_prime(p, strategy)` against the oracle for every prime
/// `p <= limit`. Primes come from a sieve, so one bad successor does not
/// cascade. Failures are ordered by `p`.
pub fn verify(limit: u64, strategy: Strategy) -> Result<VerificationReport> {
    if limit < 2 {
        return Err(Error::Usage(format!(
            "verify needs limit >= 2, got {limit}"
        )));
    }
    let sieve = oracle::build_sieve(limit)?;
    let primes: Vec<u64> = sieve.primes().collect();
    let outcomes = primes
        .par_iter()
        .map(|&p| {
            let got = formula::next_prime(&Nat::from(p), strategy)?;
            let expected = oracle::next_prime_oracle(p);
            Ok((got != expected).then_some(Failure { p, got, expected }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        limit,
        checked: primes.len() as u64,
        failures: outcomes.into_iter().flatten().collect(),
        strategy,
    })
}

/// Exit status a failed command reports for `err`.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain { .. } | Error::Usage(_) | Error::TooLarge(_) => EXIT_USAGE,
        Error::NoPrimeInWindow { .. } | Error::OracleMismatch { .. } => EXIT_FAILURE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let strategy = cli.strategy;
    match cli.command {
        Command::Next { n } => {
            if n.is_zero() {
                return Err(Error::Usage("next needs n >= 1".into()));
            }
            let q = formula::next_prime(&n, strategy)?;
            emit(out, format_args!("{q}\n"))?;
        }
        Command::Seq { count } => {
            if count == 0 {
                return Err(Error::Usage("seq needs count >= 1".into()));
            }
            for p in formula::prime_sequence(count, strategy)? {
                emit(out, format_args!("{p}\n"))?;
            }
        }
        Command::Verify { limit } => {
            let report = verify(limit, strategy)?;
            emit(
                out,
                format_args!(
                    "checked={} failures={}\n",
                    report.checked,
                    report.failures.len()
                ),
            )?;
            for f in &report.failures {
                emit(out, format_args!("{} {} {}\n", f.p, f.got, f.expected))?;
            }
            if !report.passed() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Eval { kind, i } => match kind {
            EvalKind::Dcount => {
                let d = formula::divisor_count_literal(&i)?;
                emit(out, format_args!("{d}\n"))?;
            }
            EvalKind::Pfunc => {
                let p = formula::p_literal(&i)?;
                emit(out, format_args!("{p}\n"))?;
            }
        },
        Command::Bench {
            sizes,
            strategies,
            format,
            deterministic,
            output,
        } => {
            let mut suite = bench::run_bench(&sizes, &strategies)?;
            if deterministic {
                suite = suite.without_timings();
            }
            let written = match output {
                Some(path) => File::create(&path)
                    .and_then(|f| bench::emit_report(&suite, format, BufWriter::new(f))),
                None => bench::emit_report(&suite, format, &mut *out),
            };
            written.map_err(|e| Error::Usage(format!("cannot write report: {e}")))?;
        }
    }
    Ok(EXIT_OK)
}

fn emit(out: &mut dyn Write, args: std::fmt::Arguments<'_>) -> Result<()> {
    out.write_fmt(args)
        .map_err(|e: io::Error| Error::Usage(format!("cannot write output: {e}")))
}
