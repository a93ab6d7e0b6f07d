use std::fmt;
use std::io::{self, Write};

use clap::ValueEnum;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::dompoly::{DominationRow, Family};
use crate::poly::IntPolynomial;
use crate::unimodal::{
    binomial_row, check_log_concave, check_ultra_log_concave_with, check_unimodal,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Shape verdicts for one `γ(G, x)`. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub family: Family,
    pub n: usize,
    pub ell: usize,
    pub degree: usize,
    pub min_support: usize,
    /// Empty when the sequence is not unimodal.
    pub mode_lo: Option<usize>,
    pub mode_hi: Option<usize>,
    pub unimodal: bool,
    pub log_concave: bool,
    pub ultra_log_concave: bool,
}

impl ScanRow {
    /// `binom` must be the row `C(n, 0..=n)`; `n ≥ 1`.
    pub fn evaluate(
        family: Family,
        n: usize,
        ell: usize,
        poly: &IntPolynomial,
        binom: &[BigInt],
    ) -> Self {
        let coeffs = poly.coeffs();
        let report = check_unimodal(coeffs);
        let modes = report.modes();
        Self {
            family,
            n,
            ell,
            degree: poly.degree().unwrap_or(0),
            min_support: poly.min_support().unwrap_or(0),
            mode_lo: modes.map(|m| m.lo),
            mode_hi: modes.map(|m| m.hi),
            unimodal: report.is_unimodal(),
            log_concave: check_log_concave(coeffs).holds(),
            ultra_log_concave: check_ultra_log_concave_with(coeffs, binom).holds(),
        }
    }

    pub fn is_violation(&self) -> bool {
        !(self.unimodal && self.log_concave && self.ultra_log_concave)
    }

    /// Whether `⌈n/2⌉` is one of the modes.
    pub fn has_ceil_half_mode(&self) -> bool {
        let target = self.n.div_ceil(2);
        matches!((self.mode_lo, self.mode_hi), (Some(lo), Some(hi)) if lo <= target && target <= hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub families: Vec<Family>,
    pub n_max: usize,
    pub ell_max: usize,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
}

/// Evaluates the grid `1 ≤ n ≤ n_max`, `1 ≤ ell ≤ ell_max`, sorted by
/// `(family, ell, n)` regardless of the number of workers.
pub fn run_scan(config: &ScanConfig) -> Result<Vec<ScanRow>, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        if jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        builder = builder.num_threads(jobs);
    }
    let pool = builder.build().map_err(|e| e.to_string())?;

    let n_max = config.n_max;
    let binoms: Vec<Vec<BigInt>> =
        pool.install(|| (0..=n_max).into_par_iter().map(binomial_row).collect());
    let mut families = config.families.clone();
    families.sort();
    families.dedup();
    let work: Vec<(Family, usize)> = families
        .iter()
        .flat_map(|&f| (1..=config.ell_max).map(move |ell| (f, ell)))
        .collect();

    let rows = pool.install(|| {
        work.par_iter()
            .map(|&(family, ell)| {
                DominationRow::new(family, ell)
                    .enumerate()
                    .skip(1)
                    .take(n_max)
                    .map(|(n, poly)| ScanRow::evaluate(family, n, ell, &poly, &binoms[n]))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    });
    Ok(rows.into_iter().flatten().collect())
}

pub const CSV_HEADER: &str =
    "family,n,ell,degree,min_support,mode_lo,mode_hi,unimodal,log_concave,ultra_log_concave";

pub fn write_rows<W: Write>(rows: &[ScanRow], format: OutputFormat, out: &mut W) -> io::Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            w.write_record(CSV_HEADER.split(','))?;
            for row in rows {
                w.serialize(row).map_err(io::Error::other)?;
            }
            w.flush()
        }
        OutputFormat::Jsonl => {
            for row in rows {
                serde_json::to_writer(&mut *out, row)?;
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanSummary {
    pub rows: usize,
    /// Rows failing unimodality, log-concavity or ultra-log-concavity.
    pub violations: usize,
    /// Rows where `⌈n/2⌉` is not a mode (informational).
    pub ceil_half_misses: usize,
}

impl ScanSummary {
    pub fn of(rows: &[ScanRow]) -> Self {
        Self {
            rows: rows.len(),
            violations: rows.iter().filter(|r| r.is_violation()).count(),
            ceil_half_misses: rows.iter().filter(|r| !r.has_ceil_half_mode()).count(),
        }
    }
}

impl fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "scan: {} rows, {} property violations, {} rows without a mode at ceil(n/2)",
            self.rows, self.violations, self.ceil_half_misses
        )
    }
}
