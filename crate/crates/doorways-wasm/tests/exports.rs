//! Drives the browser-facing exports through the public crate interface.
//! Everything returns a JSON string so the page never deals with panics;
//! these tests pin that contract down on the host target.

use doorways_wasm::{check_word, partition_svg, rotation_word};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).expect("every export returns valid JSON")
}

#[test]
fn check_word_accepts_and_rejects() {
    let v = parse(&check_word("0100101001"));
    assert_eq!(v["ok"], true);
    assert_eq!(v["sturmian"], true);
    assert!(v["witness"]["slope"].is_string());

    let v = parse(&check_word("0011"));
    assert_eq!(v["ok"], true);
    assert_eq!(v["sturmian"], false);

    let v = parse(&check_word("01x1"));
    assert_eq!(v["ok"], false);
    assert!(v["error"].as_str().unwrap().contains("0"));
}

#[test]
fn rotation_word_matches_the_cli_generator() {
    let v = parse(&rotation_word("1/2", "0", "floor", 6));
    assert_eq!(v["ok"], true);
    assert_eq!(v["word"], "010101");

    let v = parse(&rotation_word("1/2", "0", "ceil", 6));
    assert_eq!(v["word"], "101010");

    // slope outside the unit interval is an in-band error, not a panic
    let v = parse(&rotation_word("3/2", "0", "floor", 6));
    assert_eq!(v["ok"], false);
}

#[test]
fn rotation_word_length_is_capped() {
    let v = parse(&rotation_word("1/3", "0", "floor", 4096));
    assert_eq!(v["ok"], true);
    assert_eq!(v["word"].as_str().unwrap().len(), 4096);

    let v = parse(&rotation_word("1/3", "0", "floor", 4097));
    assert_eq!(v["ok"], false);
    assert!(v["error"].as_str().unwrap().contains("4096"));
}

#[test]
fn partition_svg_reports_cells_and_markup() {
    let v = parse(&partition_svg(3, 480, true, false));
    assert_eq!(v["ok"], true);
    assert_eq!(v["n"], 3);
    assert_eq!(v["cells"], 8);
    let svg = v["svg"].as_str().unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<path").count(), 8);

    let v = parse(&partition_svg(9, 480, true, false));
    assert_eq!(v["ok"], false);

    let v = parse(&partition_svg(3, 16, true, false));
    assert_eq!(v["ok"], false, "size below the floor");
}
