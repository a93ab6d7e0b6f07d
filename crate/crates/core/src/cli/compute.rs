use clap::ValueEnum;
use serde::Serialize;

use crate::dompoly::{
    cycle_poly, path_poly_a, path_poly_b, path_poly_via_relaxed, Family, GraphSpec,
};
use crate::oracle::{brute_domination_poly, build_power_graph, MAX_ORACLE_VERTICES};
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Method {
    #[value(name = "A")]
    #[serde(rename = "A")]
    A,
    #[value(name = "B")]
    #[serde(rename = "B")]
    B,
    #[value(name = "relaxed")]
    #[serde(rename = "relaxed")]
    Relaxed,
    #[value(name = "oracle")]
    #[serde(rename = "oracle")]
    Oracle,
}

/// JSON document printed by `compute`. Field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComputeOutput {
    pub family: &'static str,
    pub n: usize,
    pub ell: usize,
    pub method: Method,
    /// Decimal strings, index = degree.
    pub coefficients: Vec<String>,
}

/// Evaluates one polynomial; `Err` carries a one-line usage diagnostic.
pub fn compute(
    family: Family,
    n: usize,
    ell: usize,
    method: Method,
) -> Result<ComputeOutput, String> {
    let spec = GraphSpec::new(family, n, ell).map_err(|e| e.to_string())?;
    let poly = match (method, family) {
        (Method::A, Family::Path) => path_poly_a(n, ell),
        (Method::A, Family::Cycle) => cycle_poly(n, ell),
        (Method::B, Family::Path) => path_poly_b(n, ell),
        (Method::Relaxed, Family::Path) => {
            path_poly_via_relaxed(n, ell).map_err(|e| e.to_string())?
        }
        (Method::B | Method::Relaxed, Family::Cycle) => {
            return Err(format!(
                "method {method:?} is only defined for the path family"
            ));
        }
        (Method::Oracle, _) => {
            if n > MAX_ORACLE_VERTICES {
                return Err(format!(
                    "oracle method needs n <= {MAX_ORACLE_VERTICES}, got {n}"
                ));
            }
            let g = build_power_graph(spec).map_err(|e| e.to_string())?;
            brute_domination_poly(&g)
        }
    };
    Ok(ComputeOutput {
        family: family.as_str(),
        n,
        ell,
        method,
        coefficients: decimal_coefficients(&poly),
    })
}

pub fn decimal_coefficients(poly: &IntPolynomial) -> Vec<String> {
    poly.coeffs().iter().map(ToString::to_string).collect()
}
