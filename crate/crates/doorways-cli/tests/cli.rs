//! End-to-end tests of the binary: output shapes, exact values on known
//! inputs, and the exit-code contract (0 ok, 1 usage, 2 failed assertion).

use std::process::Command;

fn doorways(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_doorways"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("no signal"),
    )
}

#[test]
fn check_reports_a_witness_for_sturmian_words() {
    let (stdout, _, code) = doorways(&["check", "010010"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("sturmian: true"));
    let witness = stdout
        .lines()
        .find(|l| l.starts_with("witness: slope "))
        .expect("witness line");
    // Denominator of the witness slope stays within the word length.
    let slope = witness
        .trim_start_matches("witness: slope ")
        .split(',')
        .next()
        .unwrap();
    let q: u64 = slope.split('/').nth(1).unwrap_or("1").parse().unwrap();
    assert!(q <= 6);
    assert!(stdout.contains("slopes: ("));
}

#[test]
fn check_rejects_unbalanced_words() {
    let (stdout, _, code) = doorways(&["check", "0011"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("sturmian: false"));
    assert!(!stdout.contains("witness"));
}

#[test]
fn check_accepts_the_empty_word() {
    let (stdout, _, code) = doorways(&["check", ""]);
    assert_eq!(code, 0);
    assert!(stdout.contains("sturmian: true"));
}

#[test]
fn check_assert_flag_drives_the_exit_code() {
    let (_, _, code) = doorways(&["check", "0011", "--assert"]);
    assert_eq!(code, 2);
    let (_, _, code) = doorways(&["check", "0101", "--assert"]);
    assert_eq!(code, 0);
}

#[test]
fn check_exits_one_on_malformed_words() {
    let (stdout, stderr, code) = doorways(&["check", "01021"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty(), "errors must not pollute stdout");
    assert!(stderr.contains("error"));
}

#[test]
fn gen_produces_known_words() {
    let (stdout, _, code) = doorways(&["gen", "--alpha", "1/2", "--beta", "0", "--len", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "010101");

    let (stdout, _, _) = doorways(&["gen", "--alpha", "0", "--len", "4"]);
    assert_eq!(stdout.trim(), "0000");

    let (stdout, _, _) = doorways(&["gen", "--alpha", "(-1+1*sqrt(5))/2", "--len", "8"]);
    assert_eq!(stdout.trim(), "01011010");
}

#[test]
fn gen_ceiling_variant_flips_the_reading() {
    let (stdout, _, _) = doorways(&[
        "gen", "--alpha", "1/2", "--beta", "0", "--len", "6", "--variant", "ceil",
    ]);
    assert_eq!(stdout.trim(), "101010");
}

#[test]
fn gen_rejects_slopes_outside_the_unit_interval() {
    let (_, _, code) = doorways(&["gen", "--alpha", "3/2", "--len", "4"]);
    assert_eq!(code, 1);
    let (_, _, code) = doorways(&["gen", "--alpha", "bogus", "--len", "4"]);
    assert_eq!(code, 1);
}

#[test]
fn count_matches_the_formula() {
    for (n, expected) in [("1", "2"), ("2", "4"), ("5", "24")] {
        let (stdout, _, code) = doorways(&["count", n]);
        assert_eq!(code, 0);
        assert_eq!(stdout.trim(), expected);
    }
}

#[test]
fn count_honors_the_bound() {
    let (_, _, code) = doorways(&["count", "17"]);
    assert_eq!(code, 1);
    let (stdout, _, code) = doorways(&["count", "17", "--bound", "20"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "594");
}

#[test]
fn enumerate_lists_words_in_lexicographic_order() {
    let (stdout, _, code) = doorways(&["enumerate", "2"]);
    assert_eq!(code, 0);
    let words: Vec<&str> = stdout.lines().collect();
    assert_eq!(words, vec!["00", "01", "10", "11"]);

    let (stdout, _, _) = doorways(&["enumerate", "4"]);
    assert_eq!(stdout.lines().count(), 14);
}

#[test]
fn enumerate_respects_the_slope_window() {
    let (stdout, _, code) =
        doorways(&["enumerate", "3", "--slope-lo", "1/2", "--slope-hi", "1"]);
    assert_eq!(code, 0);
    // Steep windows keep only the 1-heavy words.
    assert!(stdout.lines().all(|w| w.matches('1').count() >= 1));
    assert!(stdout.lines().count() < 8);
}

#[test]
fn enumerate_json_carries_the_count() {
    let (stdout, _, _) = doorways(&["enumerate", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["count"], 8);
    assert_eq!(v["words"].as_array().unwrap().len(), 8);
}

#[test]
fn partition_reports_cells() {
    let (stdout, _, code) = doorways(&["partition", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("cells: 2"));

    let (stdout, _, _) = doorways(&["partition", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["count"], 4);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 4);
    assert!(cells.iter().all(|c| c["witness"].is_array()));
}

#[test]
fn partition_writes_svg_files() {
    let dir = std::env::temp_dir().join("doorways-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p5.svg");
    let (_, stderr, code) =
        doorways(&["partition", "5", "--svg", path.to_str().unwrap(), "--labels"]);
    assert_eq!(code, 0);
    assert!(stderr.contains("wrote"));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<path").count(), 24);
    std::fs::remove_file(&path).ok();
}

#[test]
fn partition_svg_is_bounded_for_legibility() {
    let (_, _, code) = doorways(&["partition", "9", "--format", "svg"]);
    assert_eq!(code, 1);
    let (stdout, _, code) = doorways(&["partition", "9", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("cells:"));
}

#[test]
fn metric_prints_exact_values() {
    let (stdout, _, code) = doorways(&["metric", "period:0,1", "period:0,1", "--metric", "dS"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "0");

    let (stdout, _, _) = doorways(&["metric", "family:3", "limit", "--metric", "dR"]);
    assert_eq!(stdout.trim(), "1");

    let (stdout, _, _) = doorways(&["metric", "family:3", "limit", "--metric", "dS"]);
    assert_eq!(stdout.trim(), "1/4");
}

#[test]
fn metric_prints_inf_for_unbridgeable_pairs() {
    // Blocked common prefix: no rational line at any denominator.
    let (stdout, _, code) = doorways(&[
        "metric", "pre:0,2;period:0", "pre:0,2;period:1", "--metric", "dR",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "inf");
    let (_, _, code) = doorways(&[
        "metric", "pre:0,2;period:0", "pre:0,2;period:1", "--metric", "dR", "--assert",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn metric_accepts_json_specs_round_tripped_from_output() {
    let (stdout, _, _) = doorways(&["metric", "family:3", "limit", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let a = v["a"].to_string();
    // The spec serialization parses back as a spec argument.
    let (stdout, _, code) = doorways(&["metric", &a, "family:3", "--metric", "dS"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "0");
}

#[test]
fn metric_rejects_malformed_specs() {
    let (_, stderr, code) = doorways(&["metric", "period:", "limit"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error"));
    let (_, _, code) = doorways(&["metric", "frobnicate", "limit"]);
    assert_eq!(code, 1);
}

#[test]
fn los_reports_feasibility_both_ways() {
    let (stdout, _, code) = doorways(&["los", "0,0,1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("line of sight: true"));
    assert!(stdout.contains("witness: slope "));

    let (stdout, _, code) = doorways(&["los", "0,0,2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("line of sight: false"));
    let (_, _, code) = doorways(&["los", "0,0,2", "--assert"]);
    assert_eq!(code, 2);
}

#[test]
fn los_svg_draws_the_feasible_region() {
    let (stdout, _, code) = doorways(&["los", "0,1,2,3", "--format", "svg"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("<svg"));
    assert!(stdout.contains("circle"), "witness marker missing");
}

#[test]
fn semicontinuity_table_demonstrates_the_jump() {
    let (stdout, _, code) = doorways(&["semicontinuity", "--max-n", "5", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next().unwrap(), "n,d_S,d_R,V_n,V_inf,q_min");
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 5);
    let ds: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    assert_eq!(ds, vec!["1/2", "1/3", "1/4", "1/5", "1/6"]);
    for r in &rows {
        assert_eq!(r[2], "1", "d_R must stay at 1");
        assert_eq!(r[3], "1", "family members are visible");
        assert_eq!(r[4], "0", "the limit is not");
        assert_eq!(r[5], "1", "minimal denominator is 1");
    }
}

#[test]
fn semicontinuity_single_row_works() {
    let (stdout, _, code) = doorways(&["semicontinuity", "--max-n", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 2);
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let (_, _, code) = doorways(&["frobnicate"]);
    assert_eq!(code, 1);
    let (stdout, _, code) = doorways(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("check"));
    let (_, _, code) = doorways(&["check", "0101", "--format", "svg"]);
    assert_eq!(code, 1);
}
