use primerec_demo::{counter_curve_json, evaluate_json, prime_function_table_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn evaluate_reports_result_and_counters() {
    let v = parse(&evaluate_json("7", "literal").unwrap());
    assert_eq!(v["result"], "11");
    assert_eq!(v["strategy"], "literal");
    assert_eq!(v["floor_pair_evals"], (8..=14).sum::<u64>());

    let v = parse(&evaluate_json(" 13 ", "windowed").unwrap());
    assert_eq!(v["result"], "17");
    assert_eq!(v["p_evals"], 4);

    assert!(evaluate_json("0", "oracle").is_err());
    assert!(evaluate_json("abc", "oracle").is_err());
    assert!(evaluate_json("5", "fast").is_err());
    assert!(evaluate_json("5000", "literal").is_err());
}

#[test]
fn table_marks_composites() {
    let rows = parse(&prime_function_table_json(2, 12).unwrap());
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 11);
    let composite: Vec<u64> = rows
        .iter()
        .filter(|r| r["p"] == 1)
        .map(|r| r["i"].as_u64().unwrap())
        .collect();
    assert_eq!(composite, vec![4, 6, 8, 9, 10, 12]);
    assert_eq!(rows[10]["d"], "6");

    assert!(prime_function_table_json(1, 5).is_err());
    assert!(prime_function_table_json(9, 5).is_err());
    assert!(prime_function_table_json(2, 5000).is_err());
}

#[test]
fn curve_counts_follow_laws() {
    let pts = parse(&counter_curve_json(4096, 13).unwrap());
    let pts = pts.as_array().unwrap();
    assert_eq!(pts.first().unwrap()["n"], 1);
    assert_eq!(pts.last().unwrap()["n"], 4096);
    let p64 = pts.iter().find(|p| p["n"] == 64).unwrap();
    assert_eq!(p64["next"], 67);
    assert_eq!(p64["literal_floor_pairs"], 6176);
    assert_eq!(p64["shortcircuit_floor_pairs"], 198);
    assert_eq!(p64["windowed_marks"], 365);

    assert!(counter_curve_json(0, 5).is_err());
    assert!(counter_curve_json(100, 1).is_err());
}
