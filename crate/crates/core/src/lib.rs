//! Next-prime recurrence built from a floor-arithmetic prime indicator.
//!
//! `F(n) = n + 1 + sum_{m=n+1}^{2n} prod_{i=n+1}^{m} P(i)` where `P(i)` is 0
//! for prime `i` and 1 for composite `i`, and `P` is itself computed from
//! the divisor count `d(i) = sum_j floor(i/j) - floor((i-1)/j)`. For every
//! `n >= 1`, `F(n)` is the smallest prime greater than `n`.
//!
//! ```
//! use primerec::{next_prime, Nat, Strategy};
//!
//! let q = next_prime(&Nat::from(13u64), Strategy::LiteralFormula).unwrap();
//! assert_eq!(q, 17u64);
//! ```
//!
//! [`formula`] is the literal reference evaluator, [`strategies`] holds
//! faster evaluators that must agree with it, and [`oracle`] holds
//! independent trial-division and sieve ground truth.

pub mod bench;
pub mod cli;
mod counter;
pub mod error;
pub mod formula;
pub mod nat;
pub mod oracle;
pub mod strategies;

pub use bench::{emit_report, run_bench, BenchRecord, BenchSuite, ReportFormat};
pub use cli::{verify, VerificationReport};
pub use error::{Error, Result};
pub use formula::{
    divisor_count_literal, f_literal, floor_div, floor_div_delta, next_prime, p_literal,
    prime_sequence,
};
pub use nat::{Indicator, Nat};
pub use strategies::{OpCounter, Strategy, Window};
