//! Command-line front end: recognition, generation, enumeration, the
//! slope-intercept decomposition, metrics, and the semicontinuity table.
//!
//! Exit codes: 0 on success, 1 on usage or parse errors, 2 when `--assert`
//! is set and the queried property fails to hold.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use doorways::hallway::{phi_inv, BinaryWord, FiniteHallway, InfiniteHallwaySpec, Side, Word};
use doorways::metrics::{
    d_rational, d_standard, discontinuity_family, discontinuity_limit, visibility, MetricValue,
};
use doorways::numeric::{BigRational, ExactReal};
use doorways::sight::{
    intercept_interval, rational_line_of_sight, slope_interval, Certificate, Interval,
    LineOfSight, Mode,
};
use doorways::sturmian::{
    enumerate_words_in_slope_range, mignosi_count, partition_p, rotation_sequence,
    RotationParams, Variant,
};
use doorways::svg;

#[derive(Parser)]
#[command(
    name = "doorways",
    version,
    about = "Exact lines of sight through doorways, Sturmian words, and hallway metrics"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Floor,
    Ceil,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    /// 1 / (first doorway index where the hallways disagree).
    #[value(name = "dS", alias = "ds", alias = "standard")]
    Standard,
    /// 1 / (smallest rational slope denominator seeing through the
    /// unframed common prefix).
    #[value(name = "dR", alias = "dr", alias = "rational")]
    Rational,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether a binary word is Sturmian and report a witness line.
    Check {
        /// Word over {0,1}; the empty word is allowed (and trivially passes).
        #[arg(default_value = "")]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Exit with status 2 when the word is not Sturmian.
        #[arg(long)]
        assert: bool,
    },
    /// Generate a rotation word from an exact slope and intercept.
    Gen {
        /// Slope in [0,1]: a rational like 1/2 or a value like (-1+1*sqrt(5))/2.
        #[arg(long)]
        alpha: String,
        /// Intercept, same syntax as --alpha.
        #[arg(long, default_value = "0")]
        beta: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Floor)]
        variant: VariantArg,
        /// Number of letters to emit.
        #[arg(long)]
        len: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the Sturmian words of a given length in lexicographic order.
    Enumerate {
        n: usize,
        /// Refuse lengths above this cutoff.
        #[arg(long, default_value_t = 16)]
        bound: usize,
        /// Lower end of the admitted slope window (inclusive), a rational.
        #[arg(long, default_value = "0")]
        slope_lo: String,
        /// Upper end of the admitted slope window (exclusive), a rational.
        #[arg(long, default_value = "1")]
        slope_hi: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count the Sturmian words of a given length.
    Count {
        n: usize,
        /// Refuse lengths above this cutoff.
        #[arg(long, default_value_t = 16)]
        bound: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose slope-intercept space into cells, one per visible hallway.
    Partition {
        n: usize,
        /// Write an SVG rendering to this file.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Edge length of the SVG square, in pixels.
        #[arg(long, default_value_t = 480)]
        size: u32,
        /// Skip the per-cell shading in SVG output.
        #[arg(long)]
        plain: bool,
        /// Draw each cell's word at its witness point.
        #[arg(long)]
        labels: bool,
    },
    /// Distance between two infinite hallway specs.
    ///
    /// Specs: 'period:0,1', 'pre:1;period:0,1', 'rot:1/2,1/3,plus',
    /// 'family:3', 'limit', or a JSON object.
    Metric {
        spec_a: String,
        spec_b: String,
        #[arg(long, value_enum, default_value_t = MetricArg::Standard)]
        metric: MetricArg,
        /// Doorway index cutoff for verdicts that cannot be certified
        /// exactly.
        #[arg(long, default_value_t = 1000)]
        horizon: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Exit with status 2 when the distance is infinite.
        #[arg(long)]
        assert: bool,
    },
    /// Line-of-sight report for a finite hallway given by doorway lefts.
    Los {
        /// Comma-separated doorway left ends, for example 0,0,1.
        lefts: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Edge length of the SVG rendering, in pixels.
        #[arg(long, default_value_t = 480)]
        size: u32,
        /// Exit with status 2 when no line of sight exists.
        #[arg(long)]
        assert: bool,
    },
    /// Table showing visibility jumping in the limit of a convergent family.
    Semicontinuity {
        /// Largest family index to tabulate.
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, default_value_t = 1000)]
        horizon: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Writes one line of machine output. A closed pipe (head, less quitting)
/// is a normal way for a reader to stop listening, not an error.
fn emit(line: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

macro_rules! emit {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match run(cli.cmd) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

fn run(cmd: Cmd) -> Result<i32, String> {
    match cmd {
        Cmd::Check { word, format, assert } => cmd_check(&word, format, assert),
        Cmd::Gen { alpha, beta, variant, len, format } => {
            cmd_gen(&alpha, &beta, variant, len, format)
        }
        Cmd::Enumerate { n, bound, slope_lo, slope_hi, format } => {
            cmd_enumerate(n, bound, &slope_lo, &slope_hi, format)
        }
        Cmd::Count { n, bound, format } => cmd_count(n, bound, format),
        Cmd::Partition { n, svg, format, size, plain, labels } => {
            cmd_partition(n, svg, format, size, !plain, labels)
        }
        Cmd::Metric { spec_a, spec_b, metric, horizon, format, assert } => {
            cmd_metric(&spec_a, &spec_b, metric, horizon, format, assert)
        }
        Cmd::Los { lefts, format, size, assert } => cmd_los(&lefts, format, size, assert),
        Cmd::Semicontinuity { max_n, horizon, format } => {
            cmd_semicontinuity(max_n, horizon, format)
        }
    }
}

fn ensure_format(format: Format, allowed: &[Format], cmd: &str) -> Result<(), String> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(format!("{cmd} does not support {format:?} output").to_lowercase())
    }
}

fn parse_real(s: &str) -> Result<ExactReal, String> {
    s.trim()
        .parse::<ExactReal>()
        .map_err(|e| format!("bad numeric value {s:?}: {e}"))
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let v = parse_real(s)?;
    v.as_rational()
        .cloned()
        .ok_or_else(|| format!("{s:?} must be rational here"))
}

fn parse_bits(word: &str) -> Result<Vec<u8>, String> {
    word.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(format!("word must be over {{0,1}}, found {c:?}")),
        })
        .collect()
}

fn parse_i64_list(s: &str, what: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad {what} entry {t:?}"))
        })
        .collect()
}

fn parse_spec(s: &str) -> Result<InfiniteHallwaySpec, String> {
    let t = s.trim();
    if t == "limit" {
        return Ok(discontinuity_limit());
    }
    if let Some(rest) = t.strip_prefix("family:") {
        let n: usize = rest
            .parse()
            .map_err(|_| format!("bad family index {rest:?}"))?;
        if n == 0 {
            return Err("family index starts at 1".into());
        }
        return Ok(discontinuity_family(n));
    }
    if t.starts_with('{') {
        return serde_json::from_str(t).map_err(|e| format!("bad JSON spec: {e}"));
    }
    if let Some(rest) = t.strip_prefix("period:") {
        let period = parse_i64_list(rest, "period")?;
        if period.is_empty() {
            return Err("period must be nonempty".into());
        }
        return Ok(InfiniteHallwaySpec::periodic(Word::new(period)));
    }
    if let Some(rest) = t.strip_prefix("pre:") {
        let (pre_part, period_part) = rest
            .split_once(";period:")
            .ok_or("eventually periodic specs look like pre:1;period:0,1")?;
        let pre = if pre_part.is_empty() {
            Vec::new()
        } else {
            parse_i64_list(pre_part, "pre")?
        };
        let period = parse_i64_list(period_part, "period")?;
        if period.is_empty() {
            return Err("period must be nonempty".into());
        }
        return Ok(InfiniteHallwaySpec::eventually_periodic(
            Word::new(pre),
            Word::new(period),
        ));
    }
    if let Some(rest) = t.strip_prefix("rot:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() != 3 {
            return Err("rotation specs look like rot:1/2,1/3,plus".into());
        }
        let alpha = parse_real(parts[0])?;
        let beta = parse_real(parts[1])?;
        let side = match parts[2].trim() {
            "plus" => Side::Plus,
            "minus" => Side::Minus,
            other => return Err(format!("side must be plus or minus, found {other:?}")),
        };
        return InfiniteHallwaySpec::rotation(alpha, beta, side).map_err(|e| e.to_string());
    }
    Err(format!(
        "unrecognized spec {t:?}; try period:0,1  pre:1;period:0,1  rot:1/2,1/3,plus  \
         family:3  limit  or a JSON object"
    ))
}

fn bits_string(bits: &[u8]) -> String {
    bits.iter().map(|b| (b'0' + b) as char).collect()
}

fn word_string(w: &Word) -> String {
    // Partition and check words are binary; anything else gets commas.
    if w.letters().iter().all(|&l| l == 0 || l == 1) {
        w.letters().iter().map(|&l| if l == 0 { '0' } else { '1' }).collect()
    } else {
        w.letters()
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn witness_line(w: &LineOfSight) -> String {
    format!("witness: slope {}, intercept {}", w.slope, w.intercept)
}

fn cmd_check(word: &str, format: Format, assert: bool) -> Result<i32, String> {
    ensure_format(format, &[Format::Text, Format::Json], "check")?;
    let bits = parse_bits(word)?;
    let mut witness: Option<LineOfSight> = None;
    let mut slopes: Option<Interval> = None;
    let sturmian = if bits.is_empty() {
        true
    } else {
        let h = phi_inv(&Word::new(bits.iter().map(|&b| b as i64).collect()));
        let ok = doorways::sturmian::is_sturmian_word(&BinaryWord::new(bits.clone()));
        if ok {
            witness = Some(rational_line_of_sight(&h).map_err(|e| e.to_string())?);
            slopes = Some(slope_interval(&h).map_err(|e| e.to_string())?);
        }
        ok
    };
    match format {
        Format::Text => {
            emit!("sturmian: {sturmian}");
            if let Some(w) = &witness {
                emit!("{}", witness_line(w));
            }
            if let Some(s) = &slopes {
                emit!("slopes: {s}");
            }
        }
        Format::Json => {
            let out = json!({
                "word": word,
                "sturmian": sturmian,
                "witness": witness,
                "slope_interval": slopes,
            });
            emit!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => unreachable!(),
    }
    Ok(if assert && !sturmian { 2 } else { 0 })
}

fn cmd_gen(
    alpha: &str,
    beta: &str,
    variant: VariantArg,
    len: usize,
    format: Format,
) -> Result<i32, String> {
    ensure_format(format, &[Format::Text, Format::Json], "gen")?;
    let a = parse_real(alpha)?;
    let b = parse_real(beta)?;
    let v = match variant {
        VariantArg::Floor => Variant::Floor,
        VariantArg::Ceil => Variant::Ceil,
    };
    let params = RotationParams::new(a, b, v).map_err(|e| e.to_string())?;
    let word = rotation_sequence(&params, len).map_err(|e| e.to_string())?;
    match format {
        Format::Text => emit!("{}", bits_string(word.bits())),
        Format::Json => {
            let out = json!({
                "alpha": params.alpha().to_string(),
                "beta": params.beta().to_string(),
                "variant": params.variant().to_string(),
                "word": bits_string(word.bits()),
            });
            emit!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => unreachable!(),
    }
    Ok(0)
}

fn cmd_enumerate(
    n: usize,
    bound: usize,
    slope_lo: &str,
    slope_hi: &str,
    format: Format,
) -> Result<i32, String> {
    ensure_format(format, &[Format::Text, Format::Json], "enumerate")?;
    if n == 0 {
        return Err("length must be at least 1".into());
    }
    let lo = parse_rational(slope_lo)?;
    let hi = parse_rational(slope_hi)?;
    if lo >= hi {
        return Err("slope window must be nonempty".into());
    }
    let words =
        enumerate_words_in_slope_range(n, bound, &lo, &hi).map_err(|e| e.to_string())?;
    match format {
        Format::Text => {
            for w in &words {
                emit!("{}", bits_string(w.bits()));
            }
        }
        Format::Json => {
            let list: Vec<String> = words.iter().map(|w| bits_string(w.bits())).collect();
            let out = json!({ "n": n, "count": list.len(), "words": list });
            emit!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => unreachable!(),
    }
    Ok(0)
}

fn cmd_count(n: usize, bound: usize, format: Format) -> Result<i32, String> {
    ensure_format(format, &[Format::Text, Format::Json], "count")?;
    if n == 0 {
        return Err("length must be at least 1".into());
    }
    if n > bound || n >= 32 {
        return Err(format!("length {n} exceeds the enumeration bound {bound}"));
    }
    let count = mignosi_count(n);
    match format {
        Format::Text => emit!("{count}"),
        Format::Json => {
            emit!(
                "{}",
                serde_json::to_string_pretty(&json!({ "n": n, "count": count })).unwrap()
            );
        }
        _ => unreachable!(),
    }
    Ok(0)
}

fn cmd_partition(
    n: usize,
    svg_file: Option<PathBuf>,
    format: Format,
    size: u32,
    shade: bool,
    labels: bool,
) -> Result<i32, String> {
    ensure_format(format, &[Format::Text, Format::Json, Format::Svg], "partition")?;
    if !(1..=16).contains(&n) {
        return Err("decomposition order must be between 1 and 16".into());
    }
    let wants_svg = svg_file.is_some() || format == Format::Svg;
    if wants_svg && n > 8 {
        return Err("SVG output is limited to order 8; it is unreadable beyond that".into());
    }
    if let Some(path) = &svg_file {
        let rendering = svg::partition_plot(n, size, shade, labels);
        std::fs::write(path, rendering)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        eprintln!("wrote {}", path.display());
    }
    match format {
        Format::Text => {
            let cells = partition_p(n);
            emit!("cells: {}", cells.len());
            for c in &cells {
                emit!(
                    "{}: witness ({}, {})",
                    word_string(&c.word),
                    c.witness.0,
                    c.witness.1
                );
            }
        }
        Format::Json => {
            let cells = partition_p(n);
            let out = json!({ "n": n, "count": cells.len(), "cells": cells });
            emit!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Svg => {
            if svg_file.is_none() {
                emit!("{}", svg::partition_plot(n, size, shade, labels));
            }
        }
        _ => unreachable!(),
    }
    Ok(0)
}

fn cmd_metric(
    spec_a: &str,
    spec_b: &str,
    metric: MetricArg,
    horizon: usize,
    format: Format,
    assert: bool,
) -> Result<i32, String> {
    ensure_format(format, &[Format::Text, Format::Json], "metric")?;
    let a = parse_spec(spec_a)?;
    let b = parse_spec(spec_b)?;
    let outcome = match metric {
        MetricArg::Standard => d_standard(&a, &b, horizon),
        MetricArg::Rational => d_rational(&a, &b, horizon),
    };
    if let Certificate::Bounded { horizon } = outcome.certificate {
        eprintln!("note: value certified only up to doorway {horizon}");
    }
    match format {
        Format::Text => emit!("{}", outcome.value),
        Format::Json => {
            let out = json!({
                "metric": match metric {
                    MetricArg::Standard => "dS",
                    MetricArg::Rational => "dR",
                },
                "a": a,
                "b": b,
                "value": outcome.value,
                "certificate": outcome.certificate,
            });
            emit!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        _ => unreachable!(),
    }
    Ok(if assert && outcome.value == MetricValue::Infinite { 2 } else { 0 })
}

fn cmd_los(lefts: &str, format: Format, size: u32, assert: bool) -> Result<i32, String> {
    ensure_format(format, &[Format::Text, Format::Json, Format::Svg], "los")?;
    let lefts = parse_i64_list(lefts, "doorway")?;
    if lefts.is_empty() {
        return Err("need at least one doorway".into());
    }
    let h = FiniteHallway::from_lefts(&lefts);
    let feasible;
    let mut witness: Option<LineOfSight> = None;
    let mut slopes: Option<Interval> = None;
    let mut fiber: Option<Interval> = None;
    if h.len() == 1 {
        // One doorway blocks nothing; report the horizontal mid-door line.
        feasible = true;
        witness = Some(LineOfSight {
            slope: ExactReal::zero(),
            intercept: ExactReal::from_rational(BigRational::new(1.into(), 2.into())),
            side: None,
        });
    } else {
        feasible = doorways::sight::admits_line_of_sight(&h);
        if feasible {
            let w = rational_line_of_sight(&h).map_err(|e| e.to_string())?;
            slopes = Some(slope_interval(&h).map_err(|e| e.to_string())?);
            fiber = Some(intercept_interval(&h, &w.slope, Mode::Open));
            witness = Some(w);
        }
    }
    match format {
        Format::Text => {
            emit!("line of sight: {feasible}");
            if let Some(w) = &witness {
                emit!("{}", witness_line(w));
            }
            if let Some(s) = &slopes {
                emit!("slopes: {s}");
            }
            if let Some(f) = &fiber {
                emit!("intercepts at witness slope: {f}");
            }
        }
        Format::Json => {
            let out = json!({
                "lefts": h.lefts(),
                "line_of_sight": feasible,
                "witness": witness,
                "slope_interval": slopes,
                "intercepts_at_witness": fiber,
            });
            emit!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Svg => {
            if h.len() == 1 {
                return Err("the SVG rendering needs at least two doorways".into());
            }
            emit!("{}", svg::feasible_polygon_plot(&h, size));
        }
        _ => unreachable!(),
    }
    Ok(if assert && !feasible { 2 } else { 0 })
}

fn cmd_semicontinuity(max_n: usize, horizon: usize, format: Format) -> Result<i32, String> {
    ensure_format(format, &[Format::Text, Format::Json, Format::Csv], "semicontinuity")?;
    if max_n == 0 {
        return Err("the family starts at index 1".into());
    }
    let limit = discontinuity_limit();
    let v_limit = visibility(&limit, horizon).visible;
    struct Row {
        n: usize,
        ds: MetricValue,
        dr: MetricValue,
        v_n: bool,
        q_min: Option<u64>,
    }
    let rows: Vec<Row> = (1..=max_n)
        .map(|n| {
            let h = discontinuity_family(n);
            let dr = d_rational(&h, &limit, horizon).value;
            Row {
                n,
                ds: d_standard(&h, &limit, horizon).value,
                dr,
                v_n: visibility(&h, horizon).visible,
                q_min: dr.denominator(),
            }
        })
        .collect();
    let q_str = |q: &Option<u64>| q.map_or_else(|| "-".to_string(), |v| v.to_string());
    match format {
        Format::Text => {
            emit!(
                "{:>4} {:>8} {:>6} {:>4} {:>6} {:>6}",
                "n", "d_S", "d_R", "V_n", "V_inf", "q_min"
            );
            for r in &rows {
                emit!(
                    "{:>4} {:>8} {:>6} {:>4} {:>6} {:>6}",
                    r.n,
                    r.ds.to_string(),
                    r.dr.to_string(),
                    u8::from(r.v_n),
                    u8::from(v_limit),
                    q_str(&r.q_min),
                );
            }
        }
        Format::Csv => {
            let mut out = String::from("n,d_S,d_R,V_n,V_inf,q_min");
            for r in &rows {
                write!(
                    out,
                    "\n{},{},{},{},{},{}",
                    r.n,
                    r.ds,
                    r.dr,
                    u8::from(r.v_n),
                    u8::from(v_limit),
                    q_str(&r.q_min),
                )
                .unwrap();
            }
            emit!("{out}");
        }
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "d_S": r.ds,
                        "d_R": r.dr,
                        "V_n": u8::from(r.v_n),
                        "V_inf": u8::from(v_limit),
                        "q_min": r.q_min,
                    })
                })
                .collect();
            emit!("{}", serde_json::to_string_pretty(&list).unwrap());
        }
        _ => unreachable!(),
    }
    Ok(0)
}
