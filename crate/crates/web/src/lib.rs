//! Browser bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string; errors come back as a thrown string.
//! The `*_json` functions hold the logic so they can be tested natively.

use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::*;

use dompow::dompoly::{DominationRow, Family, GraphSpec};
use dompow::poly::IntPolynomial;
use dompow::unimodal::{
    binomial_row, certify_recurrence_family_toward, check_log_concave,
    check_ultra_log_concave_with, check_unimodal,
};

/// Largest `n` the explorer accepts; keeps `f64` views of the coefficients finite.
pub const MAX_EXPLORE_N: usize = 1000;
pub const MAX_GRID_N: usize = 300;
pub const MAX_GRID_ELL: usize = 40;
pub const MAX_HORIZON: usize = 2000;

#[derive(Debug, Serialize)]
struct Exploration {
    graph: String,
    coefficients: Vec<String>,
    log10: Vec<Option<f64>>,
    /// `a_k / C(n, k)`: the share of `k`-subsets that dominate.
    dominating_share: Vec<f64>,
    degree: usize,
    min_support: usize,
    mode_lo: Option<usize>,
    mode_hi: Option<usize>,
    ceil_half: usize,
    unimodal: bool,
    log_concave: bool,
    ultra_log_concave: bool,
    total: String,
}

pub fn explore_json(family: &str, n: usize, ell: usize) -> Result<String, String> {
    let family: Family = family.parse()?;
    if n == 0 || n > MAX_EXPLORE_N {
        return Err(format!("n must be between 1 and {MAX_EXPLORE_N}"));
    }
    let spec = GraphSpec::new(family, n, ell).map_err(|e| e.to_string())?;
    let poly = spec.domination_polynomial();
    let coeffs = poly.coeffs();
    let binom = binomial_row(n);
    let modes = check_unimodal(coeffs).modes();
    let out = Exploration {
        graph: spec.to_string(),
        coefficients: coeffs.iter().map(ToString::to_string).collect(),
        log10: coeffs
            .iter()
            .map(|c| c.to_f64().filter(|v| *v > 0.0).map(f64::log10))
            .collect(),
        dominating_share: coeffs
            .iter()
            .zip(&binom)
            .map(|(a, c)| a.to_f64().unwrap_or(0.0) / c.to_f64().unwrap_or(f64::INFINITY))
            .collect(),
        degree: poly.degree().unwrap_or(0),
        min_support: poly.min_support().unwrap_or(0),
        mode_lo: modes.map(|m| m.lo),
        mode_hi: modes.map(|m| m.hi),
        ceil_half: n.div_ceil(2),
        unimodal: modes.is_some(),
        log_concave: check_log_concave(coeffs).holds(),
        ultra_log_concave: check_ultra_log_concave_with(coeffs, &binom).holds(),
        total: poly.eval_at_one().to_string(),
    };
    Ok(serde_json::to_string(&out).expect("plain data"))
}

#[derive(Debug, Serialize)]
struct Certification {
    k: usize,
    verified_up_to: Option<usize>,
    chosen_modes: Vec<usize>,
    failure_index: Option<usize>,
    failure_reason: Option<&'static str>,
}

/// Seeds are one polynomial per line, coefficients from degree 0 up,
/// separated by commas or spaces. Blank lines are skipped.
pub fn parse_seeds(text: &str) -> Result<Vec<IntPolynomial>, String> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .enumerate()
        .map(|(i, line)| {
            line.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| format!("seed {i}: '{t}' is not an integer"))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(IntPolynomial::from_coeffs)
        })
        .collect()
}

/// Runs the mode-sequence certifier on `f_n = x (f_(n-1) + ... + f_(n-k))`.
pub fn certify_json(k: usize, seeds: &str, horizon: usize) -> Result<String, String> {
    if horizon > MAX_HORIZON {
        return Err(format!("horizon must be at most {MAX_HORIZON}"));
    }
    let seeds = parse_seeds(seeds)?;
    let report = certify_recurrence_family_toward(k, &seeds, horizon, |i| i.div_ceil(2))
        .map_err(|e| e.to_string())?;
    let out = Certification {
        k,
        verified_up_to: report.verified_up_to,
        chosen_modes: report.chosen_modes,
        failure_index: report.failure.map(|f| f.index),
        failure_reason: report.failure.map(|f| f.reason.as_str()),
    };
    Ok(serde_json::to_string(&out).expect("plain data"))
}

#[derive(Debug, Serialize)]
struct GridCell {
    n: usize,
    ell: usize,
    /// Signed distance from `⌈n/2⌉` to the nearest mode; 0 when it is a mode.
    offset: Option<i64>,
    ultra_log_concave: bool,
}

/// Mode position relative to `⌈n/2⌉` over `1 ≤ n ≤ n_max`, `1 ≤ ell ≤ ell_max`.
pub fn mode_grid_json(family: &str, n_max: usize, ell_max: usize) -> Result<String, String> {
    let family: Family = family.parse()?;
    if n_max == 0 || n_max > MAX_GRID_N || ell_max == 0 || ell_max > MAX_GRID_ELL {
        return Err(format!(
            "grid must satisfy 1 <= n <= {MAX_GRID_N} and 1 <= ell <= {MAX_GRID_ELL}"
        ));
    }
    let binoms: Vec<_> = (0..=n_max).map(binomial_row).collect();
    let mut cells = Vec::with_capacity(n_max * ell_max);
    for ell in 1..=ell_max {
        for (n, poly) in DominationRow::new(family, ell)
            .enumerate()
            .skip(1)
            .take(n_max)
        {
            let target = n.div_ceil(2) as i64;
            let offset = check_unimodal(poly.coeffs())
                .modes()
                .map(|m| target.clamp(m.lo as i64, m.hi as i64) - target);
            cells.push(GridCell {
                n,
                ell,
                offset,
                ultra_log_concave: check_ultra_log_concave_with(poly.coeffs(), &binoms[n]).holds(),
            });
        }
    }
    Ok(serde_json::to_string(&cells).expect("plain data"))
}

#[wasm_bindgen]
pub fn explore(family: &str, n: usize, ell: usize) -> Result<String, JsValue> {
    explore_json(family, n, ell).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn certify(k: usize, seeds: &str, horizon: usize) -> Result<String, JsValue> {
    certify_json(k, seeds, horizon).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn mode_grid(family: &str, n_max: usize, ell_max: usize) -> Result<String, JsValue> {
    mode_grid_json(family, n_max, ell_max).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn explore_cycle() {
        let v = parse(explore_json("cycle", 4, 1).unwrap());
        assert_eq!(
            v["coefficients"],
            serde_json::json!(["0", "0", "6", "4", "1"])
        );
        assert_eq!(
            (v["mode_lo"].as_u64(), v["mode_hi"].as_u64()),
            (Some(2), Some(2))
        );
        assert_eq!(v["total"], "11");
        assert_eq!(v["dominating_share"][4], 1.0);
        assert!(v["log10"][0].is_null());
    }

    #[test]
    fn explore_rejects_bad_input() {
        assert!(explore_json("star", 4, 1).is_err());
        assert!(explore_json("path", 0, 1).is_err());
        assert!(explore_json("path", 4, 0).is_err());
        assert!(explore_json("path", MAX_EXPLORE_N + 1, 1).is_err());
    }

    #[test]
    fn explore_large_n_stays_finite() {
        let v = parse(explore_json("path", MAX_EXPLORE_N, 3).unwrap());
        let logs = v["log10"].as_array().unwrap();
        assert!(logs
            .iter()
            .all(|x| x.is_null() || x.as_f64().unwrap().is_finite()));
    }

    #[test]
    fn certify_counterexample() {
        let v = parse(certify_json(3, "3\n0 1\n0,0,2\n", 10).unwrap());
        assert_eq!(v["failure_index"], 3);
        assert_eq!(v["failure_reason"], "not-unimodal");
        assert_eq!(v["verified_up_to"], 2);
    }

    #[test]
    fn certify_cycle_seeds() {
        let seeds = "0 1\n0 2 1\n0 3 3 1\n0 0 6 4 1";
        let v = parse(certify_json(3, seeds, 200).unwrap());
        assert_eq!(v["verified_up_to"], 200);
        assert!(v["failure_index"].is_null());
    }

    #[test]
    fn certify_rejects_bad_seeds() {
        assert!(certify_json(3, "1\nx\n1", 10).is_err());
        assert!(certify_json(3, "1\n1", 10).is_err());
        assert!(certify_json(3, "1\n1\n1", MAX_HORIZON + 1).is_err());
    }

    #[test]
    fn grid_offsets() {
        let v = parse(mode_grid_json("path", 6, 1).unwrap());
        let cells = v.as_array().unwrap();
        assert_eq!(cells.len(), 6);
        // gamma(P_6) = x^2 + 10x^3 + 13x^4 + 6x^5 + x^6 peaks one step past ceil(6/2).
        assert_eq!(cells[5]["offset"], 1);
        assert_eq!(cells[2]["offset"], 0);
        assert!(cells.iter().all(|c| c["ultra_log_concave"] == true));
    }
}
