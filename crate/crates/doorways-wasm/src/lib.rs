//! Browser bindings for the interactive demo page. Each export takes plain
//! strings and numbers and returns a JSON string, so the page needs no glue
//! beyond `JSON.parse`; errors come back in-band as `{"ok": false, ...}`
//! instead of thrown exceptions.

use doorways::hallway::{phi_inv, BinaryWord, Word};
use doorways::sight::{rational_line_of_sight, slope_interval};
use doorways::sturmian::{
    is_sturmian_word, mignosi_count, rotation_sequence, RotationParams, Variant,
};
use doorways::svg;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn fail(msg: impl Into<String>) -> String {
    json!({ "ok": false, "error": msg.into() }).to_string()
}

/// Sturmian verdict plus witness data for a binary word.
#[wasm_bindgen]
pub fn check_word(word: &str) -> String {
    let bits: Vec<u8> = match word
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(c),
        })
        .collect()
    {
        Ok(b) => b,
        Err(c) => return fail(format!("word must be over {{0,1}}, found {c:?}")),
    };
    if bits.is_empty() {
        return json!({ "ok": true, "word": "", "sturmian": true }).to_string();
    }
    let h = phi_inv(&Word::new(bits.iter().map(|&b| b as i64).collect()));
    let sturmian = is_sturmian_word(&BinaryWord::new(bits));
    let (witness, slopes) = if sturmian {
        (
            Some(rational_line_of_sight(&h).expect("sturmian words have witnesses")),
            Some(slope_interval(&h).expect("sturmian words have slope windows")),
        )
    } else {
        (None, None)
    };
    json!({
        "ok": true,
        "word": word,
        "sturmian": sturmian,
        "witness": witness,
        "slope_interval": slopes,
    })
    .to_string()
}

/// Rotation word letters for an exact slope/intercept pair.
#[wasm_bindgen]
pub fn rotation_word(alpha: &str, beta: &str, variant: &str, len: usize) -> String {
    let a = match alpha.trim().parse() {
        Ok(v) => v,
        Err(e) => return fail(format!("bad slope: {e}")),
    };
    let b = match beta.trim().parse() {
        Ok(v) => v,
        Err(e) => return fail(format!("bad intercept: {e}")),
    };
    let v = match variant {
        "floor" => Variant::Floor,
        "ceil" => Variant::Ceil,
        other => return fail(format!("variant must be floor or ceil, found {other:?}")),
    };
    if len > 4096 {
        return fail("length is capped at 4096 for the demo");
    }
    let params = match RotationParams::new(a, b, v) {
        Ok(p) => p,
        Err(e) => return fail(e.to_string()),
    };
    match rotation_sequence(&params, len) {
        Ok(w) => {
            let text: String = w.bits().iter().map(|&b| (b'0' + b) as char).collect();
            json!({ "ok": true, "word": text }).to_string()
        }
        Err(e) => fail(e.to_string()),
    }
}

/// SVG rendering of the order-`n` slope-intercept decomposition.
#[wasm_bindgen]
pub fn partition_svg(n: usize, size: u32, shade: bool, labels: bool) -> String {
    if !(1..=8).contains(&n) {
        return fail("order must be between 1 and 8");
    }
    if !(64..=2048).contains(&size) {
        return fail("size must be between 64 and 2048 pixels");
    }
    json!({
        "ok": true,
        "n": n,
        "cells": mignosi_count(n),
        "svg": svg::partition_plot(n, size, shade, labels),
    })
    .to_string()
}
