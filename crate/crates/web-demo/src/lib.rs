//! Browser bindings for the interactive demo: tuple searches, the case C
//! split-point explorer, and the shrinking bound iteration.
//!
//! Every function returns a JSON string so the page stays a single static
//! HTML file with no framework or codegen on the JS side.

use num_bigint::BigUint;
use serde::Serialize;
use wasm_bindgen::prelude::*;

use quintbound::counting::{count_case_c, optimize_eta, Multipliers};
use quintbound::interval::Interval;
use quintbound::logforms::iterate_d_bound;
use quintbound::oracle;
use quintbound::table::{published_dbound_log10, Case, RunConfig};

fn err_json(e: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": e.to_string() }).to_string()
}

fn ok_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap_or_else(err_json)
}

/// All Diophantine tuples of `size` elements up to `limit`, as JSON.
#[wasm_bindgen]
pub fn oracle_search(limit: u64, size: usize) -> String {
    // keep the browser responsive; the CLI handles the full guards
    let capped = limit.min(if size == 4 { 20_000 } else { 100_000 });
    match oracle::search_tuples(capped, size) {
        Ok(tuples) => {
            let rows: Vec<Vec<String>> = tuples
                .iter()
                .map(|t| t.elements().iter().map(|e| e.to_string()).collect())
                .collect();
            serde_json::json!({ "limit": capped, "tuples": rows }).to_string()
        }
        Err(e) => err_json(e),
    }
}

/// Classify a triple and report its regular extensions.
#[wasm_bindgen]
pub fn triple_report(a: u64, b: u64, c: u64) -> String {
    let (a, b, c) = (BigUint::from(a), BigUint::from(b), BigUint::from(c));
    let tuple = match oracle::Tuple::new(vec![a.clone(), b.clone(), c.clone()]) {
        Ok(t) => t,
        Err(e) => return err_json(e),
    };
    if !oracle::is_diophantine(&tuple) {
        return serde_json::json!({ "diophantine": false }).to_string();
    }
    let class = match oracle::classify_triple(&a, &b, &c) {
        Ok(t) => format!("{t:?}"),
        Err(e) => return err_json(e),
    };
    let fourth = oracle::regular_fourth(&a, &b, &c)
        .map(|d| d.to_string())
        .unwrap_or_default();
    serde_json::json!({
        "diophantine": true,
        "class": class,
        "regular_fourth": fourth,
    })
    .to_string()
}

#[derive(Serialize)]
struct CurvePoint {
    log10_eta: f64,
    log10_large_a: f64,
    log10_small_a: f64,
}

#[derive(Serialize)]
struct CaseCCurve {
    points: Vec<CurvePoint>,
    opt_log10_eta: f64,
    opt_log10_count: f64,
    published_log10_eta: f64,
}

/// Both case C branches over a log-spaced grid of split points, plus the
/// optimum. `lo`/`hi` are log10 of eta.
#[wasm_bindgen]
pub fn case_c_curve(lo: f64, hi: f64, points: usize) -> String {
    let ud = published_dbound_log10(Case::C).exp10();
    let mult = Multipliers::default();
    let n = points.clamp(2, 200);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let t = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let eta = Interval::from_f64(t).exp10();
        match count_case_c(&ud, &eta, &mult) {
            Ok(split) => out.push(CurvePoint {
                log10_eta: t,
                log10_large_a: split.branch_large_a.log10().mid_f64(),
                log10_small_a: split.branch_small_a.log10().mid_f64(),
            }),
            Err(e) => return err_json(e),
        }
    }
    match optimize_eta(&ud, &mult) {
        Ok(opt) => ok_json(&CaseCCurve {
            points: out,
            opt_log10_eta: opt.eta.log10().mid_f64(),
            opt_log10_count: opt.minmax().log10().mid_f64(),
            published_log10_eta: 6.76e10f64.log10(),
        }),
        Err(e) => err_json(e),
    }
}

#[derive(Serialize)]
struct TraceOut {
    case: String,
    iterations: Vec<(f64, f64)>,
    log10_d_bound: f64,
    converged: bool,
    binding_row: String,
    published_log10: f64,
}

/// Run the shrinking iteration for one case from a chosen seed.
#[wasm_bindgen]
pub fn dbound_trace(case: &str, seed_log10: f64) -> String {
    let case = match Case::parse(case) {
        Ok(c) => c,
        Err(e) => return err_json(e),
    };
    let cfg = RunConfig {
        seed_log10_c1: Interval::from_f64(seed_log10),
        ..RunConfig::default()
    };
    match iterate_d_bound(&cfg, case) {
        Ok(r) => ok_json(&TraceOut {
            case: case.label().to_string(),
            iterations: r.iterations.clone(),
            log10_d_bound: r.log10_d_bound.mid_f64(),
            converged: r.converged,
            binding_row: r.binding_row.label().to_string(),
            published_log10: published_dbound_log10(case).mid_f64(),
        }),
        Err(e) => err_json(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_payload() {
        let v: serde_json::Value = serde_json::from_str(&oracle_search(10, 2)).unwrap();
        assert_eq!(v["tuples"].as_array().unwrap().len(), 10);
    }

    #[test]
    fn triple_payload() {
        let v: serde_json::Value = serde_json::from_str(&triple_report(1, 3, 8)).unwrap();
        assert_eq!(v["class"], "D");
        assert_eq!(v["regular_fourth"], "120");
        let bad: serde_json::Value = serde_json::from_str(&triple_report(1, 2, 3)).unwrap();
        assert_eq!(bad["diophantine"], false);
    }

    #[test]
    fn trace_payload() {
        let v: serde_json::Value = serde_json::from_str(&dbound_trace("D", 72.188)).unwrap();
        assert_eq!(v["converged"], true);
        let got = v["log10_d_bound"].as_f64().unwrap();
        assert!((got - 51.4153).abs() < 0.01, "{got}");
    }
}
