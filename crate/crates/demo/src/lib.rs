//! Browser bindings for the primerec demo page.
//!
//! Each exported function returns a JSON string; the page parses it and
//! renders tables and plots. The plain-Rust `*_json` functions carry the
//! logic so they can be tested off the browser.

use primerec::formula::next_prime_with;
use primerec::formula::{divisor_count_literal, p_from_divisor_count};
use primerec::strategies::{f_shortcircuit, f_windowed, Strategy};
use primerec::{Nat, OpCounter};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest span the P(i) table will render.
pub const MAX_TABLE_ROWS: u64 = 2000;
/// Largest n the counter curve will sample.
pub const MAX_CURVE_N: u64 = 1 << 16;
/// Per-strategy input caps that keep the page responsive.
pub const MAX_LITERAL_N: u64 = 2000;
pub const MAX_WINDOWED_N: u64 = 10_000_000;

#[derive(Debug, Serialize)]
struct Evaluation {
    n: String,
    strategy: Strategy,
    result: String,
    floor_pair_evals: u64,
    multiple_marks: u64,
    p_evals: u64,
}

#[derive(Debug, Serialize)]
struct Row {
    i: u64,
    d: String,
    p: u8,
}

#[derive(Debug, Serialize)]
struct CurvePoint {
    n: u64,
    next: u64,
    literal_floor_pairs: u64,
    shortcircuit_floor_pairs: u64,
    windowed_marks: u64,
}

pub fn evaluate_json(n: &str, strategy: &str) -> Result<String, String> {
    let n: Nat = n
        .trim()
        .parse()
        .map_err(|_| format!("'{n}' is not a nonnegative integer"))?;
    let strategy: Strategy = strategy
        .parse()
        .map_err(|e: primerec::Error| e.to_string())?;
    let cap = match strategy {
        Strategy::LiteralFormula => Some(MAX_LITERAL_N),
        Strategy::WindowedSieve => Some(MAX_WINDOWED_N),
        Strategy::OracleDirect => None,
    };
    if let Some(cap) = cap {
        if n.to_u64().is_none_or(|v| v > cap) {
            return Err(format!(
                "the {strategy} strategy is limited to n <= {cap} here"
            ));
        }
    }
    let mut counter = OpCounter::new();
    let result = next_prime_with(&n, strategy, &mut counter).map_err(|e| e.to_string())?;
    let out = Evaluation {
        n: n.to_string(),
        strategy,
        result: result.to_string(),
        floor_pair_evals: counter.floor_pair_evals,
        multiple_marks: counter.multiple_marks,
        p_evals: counter.p_evals,
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

/// Literal `d(i)` and `P(i)` for `i` in `[lo, hi]`.
pub fn prime_function_table_json(lo: u64, hi: u64) -> Result<String, String> {
    if lo < 2 {
        return Err("the prime function is defined only for i >= 2".into());
    }
    if hi < lo {
        return Err(format!("empty range [{lo}, {hi}]"));
    }
    if hi - lo >= MAX_TABLE_ROWS {
        return Err(format!("at most {MAX_TABLE_ROWS} rows"));
    }
    let rows = (lo..=hi)
        .map(|i| {
            let i_nat = Nat::from(i);
            let d = divisor_count_literal(&i_nat)?;
            let p = p_from_divisor_count(&i_nat, &d)?;
            Ok(Row {
                i,
                d: d.to_string(),
                p: p.value(),
            })
        })
        .collect::<primerec::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

/// Operation counts at `points` sizes spaced geometrically over `[1, max_n]`.
pub fn counter_curve_json(max_n: u64, points: u32) -> Result<String, String> {
    if max_n == 0 || max_n > MAX_CURVE_N {
        return Err(format!("max_n must be in [1, {MAX_CURVE_N}]"));
    }
    if points < 2 {
        return Err("need at least 2 points".into());
    }
    let mut sizes: Vec<u64> = (0..points)
        .map(|k| {
            let t = k as f64 / (points - 1) as f64;
            (max_n as f64).powf(t).round() as u64
        })
        .collect();
    sizes.dedup();

    let mut curve = Vec::with_capacity(sizes.len());
    for n in sizes {
        let mut sc = OpCounter::new();
        let next = f_shortcircuit(&Nat::from(n), &mut sc).map_err(|e| e.to_string())?;
        let mut wc = OpCounter::new();
        f_windowed(n, &mut wc).map_err(|e| e.to_string())?;
        curve.push(CurvePoint {
            n,
            next: next.try_u64().map_err(|e| e.to_string())?,
            // sum of i over (n, 2n]
            literal_floor_pairs: (3 * n * n + n) / 2,
            shortcircuit_floor_pairs: sc.floor_pair_evals,
            windowed_marks: wc.multiple_marks,
        });
    }
    serde_json::to_string(&curve).map_err(|e| e.to_string())
}

/// F(n) by the named strategy, with its operation counters.
#[wasm_bindgen]
pub fn evaluate(n: &str, strategy: &str) -> Result<String, JsValue> {
    evaluate_json(n, strategy).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn prime_function_table(lo: u32, hi: u32) -> Result<String, JsValue> {
    prime_function_table_json(lo.into(), hi.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn counter_curve(max_n: u32, points: u32) -> Result<String, JsValue> {
    counter_curve_json(max_n.into(), points).map_err(|e| JsValue::from_str(&e))
}
