//! Operation-count benchmarks across strategies.
//!
//! Counters are deterministic; `wall_nanos` is informational and can be
//! zeroed with [`BenchSuite::without_timings`] for reproducible reports.

use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::counter::OpCounter;
use crate::error::{Error, Result};
use crate::formula;
use crate::nat::Nat;
use crate::oracle;
use crate::strategies::Strategy;

/// Column order of both report formats.
pub const CSV_HEADER: &str = "n,strategy,result,floor_pair_evals,multiple_marks,p_evals,wall_nanos";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub n: u64,
    pub strategy: Strategy,
    pub result: u64,
    pub floor_pair_evals: u64,
    pub multiple_marks: u64,
    pub p_evals: u64,
    pub wall_nanos: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchSuite {
    pub sizes: Vec<u64>,
    pub records: Vec<BenchRecord>,
}

impl BenchSuite {
    pub fn without_timings(mut self) -> Self {
        for r in &mut self.records {
            r.wall_nanos = 0;
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Jsonl,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "jsonl" => Ok(ReportFormat::Jsonl),
            other => Err(Error::Usage(format!(
                "unknown report format '{other}' (expected csv or jsonl)"
            ))),
        }
    }
}

fn measure(n: u64, strategy: Strategy) -> Result<BenchRecord> {
    let mut counter = OpCounter::new();
    let start = Instant::now();
    let got = formula::next_prime_with(&Nat::from(n), strategy, &mut counter)?;
    let wall_nanos = start.elapsed().as_nanos().min(u64::MAX as u128) as u64;

    let expected = oracle::next_prime_oracle(n);
    if got != expected {
        return Err(Error::OracleMismatch {
            n,
            strategy: strategy.to_string(),
            got: got.to_string(),
            expected,
        });
    }
    Ok(BenchRecord {
        n,
        strategy,
        result: expected,
        floor_pair_evals: counter.floor_pair_evals,
        multiple_marks: counter.multiple_marks,
        p_evals: counter.p_evals,
        wall_nanos,
    })
}

/// One oracle-checked record per `(size, strategy)`, sizes outermost.
pub fn run_bench(sizes: &[u64], strategies: &[Strategy]) -> Result<BenchSuite> {
    if sizes.is_empty() {
        return Err(Error::Usage("bench needs at least one size".into()));
    }
    if strategies.is_empty() {
        return Err(Error::Usage("bench needs at least one strategy".into()));
    }
    if let Some(&bad) = sizes.iter().find(|&&n| n == 0) {
        return Err(Error::Usage(format!("bench sizes must be >= 1, got {bad}")));
    }
    if let Some(w) = sizes.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::Usage(format!(
            "bench sizes must be strictly increasing, got {} then {}",
            w[0], w[1]
        )));
    }

    let jobs: Vec<(u64, Strategy)> = sizes
        .iter()
        .flat_map(|&n| strategies.iter().map(move |&s| (n, s)))
        .collect();
    let records = jobs
        .into_par_iter()
        .map(|(n, s)| measure(n, s))
        .collect::<Result<Vec<_>>>()?;

    Ok(BenchSuite {
        sizes: sizes.to_vec(),
        records,
    })
}

pub fn emit_report<W: Write>(
    suite: &BenchSuite,
    format: ReportFormat,
    out: W,
) -> std::io::Result<()> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            w.write_record(CSV_HEADER.split(','))?;
            for r in &suite.records {
                w.serialize(r)?;
            }
            w.flush()
        }
        ReportFormat::Jsonl => {
            let mut out = out;
            for r in &suite.records {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()
        }
    }
}
