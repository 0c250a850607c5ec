//! Browser bindings: thin JSON-string wrappers around the pipeline entry
//! points, for the static demo page in `www/`.
//!
//! Every function returns a JSON string; errors come back as
//! `{"error": "..."}` so the page can render them uniformly.

use amitsur_core::pipeline::{
    run_factor_over_fj, run_factor_rational, run_probe, run_verify, InstanceConfig,
};
use wasm_bindgen::prelude::*;

fn error_json(e: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": e.to_string() }).to_string()
}

/// Runs the full verification pipeline on a JSON instance config and
/// returns the report (with probe traces when requested).
#[wasm_bindgen]
pub fn verify_instance(
    config_json: &str,
    probes: Option<u32>,
    seed: Option<u32>,
    include_traces: bool,
) -> String {
    let config = match InstanceConfig::from_json(config_json) {
        Ok(c) => c,
        Err(e) => return error_json(e),
    };
    match run_verify(
        &config,
        probes.map(u64::from),
        seed.map(u64::from),
        include_traces,
    ) {
        Ok((report, _)) => report.to_json_pretty(),
        Err(e) => error_json(e),
    }
}

/// Probes a single element of `D[x,y]` (text syntax) against the witness
/// ideal and returns the full trace.
#[wasm_bindgen]
pub fn probe_element(config_json: &str, element: &str) -> String {
    let config = match InstanceConfig::from_json(config_json) {
        Ok(c) => c,
        Err(e) => return error_json(e),
    };
    match run_probe(&config, element) {
        Ok((trace, verdict)) => serde_json::json!({
            "trace": trace,
            "verdict": verdict.as_str(),
        })
        .to_string(),
        Err(e) => error_json(e),
    }
}

/// Factors a rational polynomial given in text syntax.
#[wasm_bindgen]
pub fn factor_rational(text: &str) -> String {
    match run_factor_rational(text) {
        Ok(result) => serde_json::to_string_pretty(&result).expect("result serializes"),
        Err(e) => error_json(e),
    }
}

/// Factors a polynomial over `F[j]` = `ℚ[s]/(sᵖ−β)` built from the config.
#[wasm_bindgen]
pub fn factor_over_fj(config_json: &str, text: &str) -> String {
    let config = match InstanceConfig::from_json(config_json) {
        Ok(c) => c,
        Err(e) => return error_json(e),
    };
    match run_factor_over_fj(&config, text) {
        Ok(result) => serde_json::to_string_pretty(&result).expect("result serializes"),
        Err(e) => error_json(e),
    }
}
