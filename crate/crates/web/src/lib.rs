//! WebAssembly bindings for the demo page in `www/`.
//!
//! Inputs arrive as strings so that values beyond 2^53 survive the trip
//! through JavaScript. Each binding returns display text or an error
//! message.

use df_core::eta::eta_factored;
use df_core::factorint::factor_u64;
use df_core::search::{erdos_straus, ERDOS_STRAUS_CAP};
use wasm_bindgen::prelude::*;

fn parse(input: &str) -> Result<u64, String> {
    input.trim().parse().map_err(|_| format!("`{}` is not a natural number", input.trim()))
}

/// η(n) for any 64-bit n ≥ 1.
pub fn eta_text(input: &str) -> Result<String, String> {
    let n = parse(input)?;
    if n == 0 {
        return Err("η is defined for n >= 1".into());
    }
    eta_factored(&factor_u64(n)).map(|v| v.to_string()).map_err(|e| e.to_string())
}

/// The prime factorization of n written as `p^a · q^b`.
pub fn factor_text(input: &str) -> Result<String, String> {
    let n = parse(input)?;
    if n < 2 {
        return Err("factor needs n >= 2".into());
    }
    let parts: Vec<String> = factor_u64(n)
        .factors()
        .iter()
        .map(|&(p, a)| if a == 1 { p.to_string() } else { format!("{p}^{a}") })
        .collect();
    Ok(parts.join(" · "))
}

/// The decompositions 4/n = 1/x + 1/y + 1/z with z ≤ 100, one per line.
pub fn erdos_straus_text(input: &str) -> Result<String, String> {
    let n = parse(input)?;
    if n < 2 {
        return Err("n must be at least 2".into());
    }
    let lines: Vec<String> = erdos_straus(n, ERDOS_STRAUS_CAP)
        .into_iter()
        .map(|(x, y, z)| format!("1/{x} + 1/{y} + 1/{z}"))
        .collect();
    if lines.is_empty() {
        return Ok(format!("no decomposition with denominators up to {ERDOS_STRAUS_CAP}"));
    }
    Ok(lines.join("\n"))
}

#[wasm_bindgen]
pub fn eta(input: &str) -> Result<String, String> {
    eta_text(input)
}

#[wasm_bindgen]
pub fn factor(input: &str) -> Result<String, String> {
    factor_text(input)
}

#[wasm_bindgen(js_name = erdosStraus)]
pub fn erdos_straus_js(input: &str) -> Result<String, String> {
    erdos_straus_text(input)
}
