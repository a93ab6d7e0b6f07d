//! Acceptance harness: one PASS/FAIL line per criterion, all comparisons exact.
//!
//! Run with `cargo test --release --test acceptance`. A line marked
//! `FAIL [expected]` is a claim the computation refutes; it is reported with
//! its witness and does not change the exit status. Any other FAIL does.

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;

use dompow::cli::{run_suite, Bounds, Suite};
use dompow::dompoly::{
    cycle_poly, path_poly_via_relaxed, CycleRow, DominationRow, Family, GraphSpec, PathRowA,
    PathRowB, RelaxedRoutePathRow,
};
use dompow::oracle::{brute_domination_poly, build_power_graph};
use dompow::poly::IntPolynomial;
use dompow::unimodal::{
    binomial_row, certify_recurrence_family, certify_recurrence_family_toward,
    check_barely_increasing, check_ultra_log_concave_with, check_unimodal, counterexample_seeds,
    FailureReason,
};

const ROW_N: usize = 300;
const ROW_ELL: usize = 20;

enum Outcome {
    Pass(String),
    Fail(String),
    /// The claim is false; the detail carries the witness.
    Refuted(String),
}

fn verdict(failures: Vec<String>, checks: usize) -> Outcome {
    match failures.first() {
        None => Outcome::Pass(format!("{checks} checks")),
        Some(first) => Outcome::Fail(format!(
            "{} of {checks} checks failed, first: {first}",
            failures.len()
        )),
    }
}

/// `γ` for `n = 0..=n_max` of one family and power.
fn row(family: Family, ell: usize, n_max: usize) -> Vec<IntPolynomial> {
    DominationRow::new(family, ell).take(n_max + 1).collect()
}

fn oracle_equivalence() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for family in Family::ALL {
        for n in 1..=18 {
            for ell in 1..=n {
                let spec = GraphSpec::new(family, n, ell).unwrap();
                let brute = brute_domination_poly(&build_power_graph(spec).unwrap());
                let rec = match family {
                    Family::Path => PathRowA::new(ell).nth(n).unwrap(),
                    Family::Cycle => cycle_poly(n, ell),
                };
                checks += 1;
                if rec != brute {
                    failures.push(format!("{spec}: recurrence {rec}, enumeration {brute}"));
                }
            }
        }
    }
    verdict(failures, checks)
}

fn route_agreement() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for ell in 1..=ROW_ELL {
        let a: Vec<_> = PathRowA::new(ell).take(ROW_N + 1).collect();
        for (n, b) in PathRowB::new(ell).take(ROW_N + 1).enumerate() {
            checks += 1;
            if a[n] != b {
                failures.push(format!("A != B at n={n}, ell={ell}"));
            }
        }
        for (i, r) in RelaxedRoutePathRow::new(ell).take(ROW_N - ell).enumerate() {
            let n = ell + 1 + i;
            checks += 1;
            if a[n] != r {
                failures.push(format!("A != relaxed at n={n}, ell={ell}"));
            }
        }
        // The public single-value entry point agrees with the streamed row.
        checks += 1;
        if path_poly_via_relaxed(ROW_N, ell).ok().as_ref() != Some(&a[ROW_N]) {
            failures.push(format!("path_poly_via_relaxed({ROW_N}, {ell}) differs"));
        }
    }
    verdict(failures, checks)
}

fn cycle_closed_forms() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for ell in 1..=50 {
        let cycles: Vec<_> = CycleRow::new(ell).take(2 * ell + 3).collect();
        for (n, c) in cycles.iter().enumerate().take(2 * ell + 2).skip(1) {
            checks += 1;
            if *c != &IntPolynomial::binomial_expand(n) - &IntPolynomial::one() {
                failures.push(format!("C_{n}^{ell} is not (1+x)^n - 1"));
            }
        }
        let m = 2 * ell + 2;
        let expected = &(&IntPolynomial::binomial_expand(m)
            - &IntPolynomial::monomial(BigInt::from(m), 1))
            - &IntPolynomial::one();
        checks += 1;
        if cycles[m] != expected {
            failures.push(format!("C_{m}^{ell} is not (1+x)^{m} - {m}x - 1"));
        }
    }
    verdict(failures, checks)
}

fn identity_suite() -> Outcome {
    let report = run_suite(
        Suite::Identities,
        Bounds {
            n_max: Some(150),
            ell_max: Some(30),
        },
    )
    .unwrap();
    if report.passed() {
        Outcome::Pass(format!("{} checks, n <= 150", report.checks()))
    } else {
        Outcome::Fail(
            report
                .to_string()
                .lines()
                .last()
                .unwrap_or_default()
                .to_owned(),
        )
    }
}

struct ModeSurvey {
    not_unimodal: Vec<String>,
    misses: Vec<(Family, usize, usize)>,
    rows: usize,
}

fn mode_survey() -> ModeSurvey {
    let mut survey = ModeSurvey {
        not_unimodal: Vec::new(),
        misses: Vec::new(),
        rows: 0,
    };
    for family in Family::ALL {
        for ell in 1..=ROW_ELL {
            for (n, p) in row(family, ell, ROW_N).iter().enumerate() {
                survey.rows += 1;
                match check_unimodal(p.coeffs()).modes() {
                    None => survey
                        .not_unimodal
                        .push(format!("{family} n={n} ell={ell}")),
                    Some(iv) if !iv.contains(n.div_ceil(2)) => survey.misses.push((family, n, ell)),
                    Some(_) => {}
                }
            }
        }
    }
    survey
}

/// Where a mode at `⌈n/2⌉` is actually established: the complete-graph and
/// seed range `n ≤ 2ℓ+1`, and minimum degree at least `2 log2 n`.
fn mode_claim_is_backed(family: Family, n: usize, ell: usize) -> bool {
    let min_degree = match family {
        Family::Path => ell.min(n.saturating_sub(1)),
        Family::Cycle => (2 * ell).min(n.saturating_sub(1)),
    };
    n <= 2 * ell + 1 || (min_degree as f64) >= 2.0 * (n as f64).log2()
}

fn ultra_log_concavity() -> Outcome {
    const BOUND: usize = 150;
    let binoms: Vec<_> = (0..=BOUND).map(binomial_row).collect();
    let mut failures = Vec::new();
    let mut checks = 0;
    for family in Family::ALL {
        for ell in 1..=BOUND {
            for (n, p) in row(family, ell, BOUND).iter().enumerate().skip(1) {
                checks += 1;
                if let Some(k) = check_ultra_log_concave_with(p.coeffs(), &binoms[n]).witness() {
                    failures.push(format!("{family} n={n} ell={ell} at k={k}"));
                }
            }
        }
    }
    verdict(failures, checks)
}

fn certifier_counterexample() -> Outcome {
    let mut failures = Vec::new();
    for k in 3..=8 {
        let report = certify_recurrence_family(k, &counterexample_seeds(k), 2 * k).unwrap();
        let failure = report.failure.map(|f| (f.index, f.reason));
        if failure != Some((k, FailureReason::NotUnimodal)) || report.verified_up_to != Some(k - 1)
        {
            failures.push(format!(
                "k={k}: failure {failure:?}, verified_up_to {:?}",
                report.verified_up_to
            ));
        }
    }
    verdict(failures, 6)
}

fn certifier_domination_rows() -> Outcome {
    const HORIZON: usize = 300;
    let mut failures = Vec::new();
    for ell in 1..=8 {
        let k = 2 * ell + 1;
        let seeds: Vec<_> = PathRowA::new(ell).take(k).collect();
        let report =
            certify_recurrence_family_toward(k, &seeds, HORIZON, |i| i.div_ceil(2)).unwrap();
        let modes = &report.chosen_modes;
        if report.verified_up_to != Some(HORIZON) || !report.is_verified() {
            failures.push(format!("ell={ell}: {:?}", report.failure));
        } else if modes.len() != HORIZON + 1 || !check_barely_increasing(modes).holds() {
            failures.push(format!("ell={ell}: chosen modes are not barely increasing"));
        } else if (0..k).any(|i| modes[i] != i.div_ceil(2)) {
            failures.push(format!("ell={ell}: seed modes differ from ceil(n/2)"));
        }
    }
    verdict(failures, 8)
}

fn literature_bounds() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    let mut falling_exceptions = Vec::new();
    for family in Family::ALL {
        for ell in 1..=ROW_ELL {
            for (n, p) in row(family, ell, ROW_N).iter().enumerate() {
                let a = p.coeffs();
                let at = |i: usize| a.get(i).cloned().unwrap_or_default();
                checks += 2;
                if (1..=n.div_ceil(2)).any(|i| at(i - 1) > at(i)) {
                    failures.push(format!(
                        "{family} n={n} ell={ell} decreases before ceil(n/2)"
                    ));
                }
                // The falling bound is for graphs without isolated vertices.
                if (3 * n / 4 + 1..=n).any(|i| at(i - 1) < at(i)) {
                    falling_exceptions.push((family, n));
                }
            }
        }
    }
    if falling_exceptions.iter().any(|&(_, n)| n != 1) {
        failures.push(format!(
            "increase after floor(3n/4): {falling_exceptions:?}"
        ));
    }
    match verdict(failures, checks) {
        Outcome::Pass(detail) => Outcome::Pass(format!(
            "{detail}; only n = 1 (one isolated vertex) rises late"
        )),
        other => other,
    }
}

fn scan_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in [1, 4] {
        let path = dir.path().join(format!("scan-{jobs}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_dompow"))
            .args([
                "scan",
                "--family",
                "both",
                "--n-max",
                "300",
                "--ell-max",
                "20",
                "--jobs",
            ])
            .arg(jobs.to_string())
            .arg("--out")
            .arg(&path)
            .stderr(std::process::Stdio::null())
            .status()
            .unwrap();
        if !status.success() {
            return Outcome::Fail(format!("scan --jobs {jobs} exited with {status}"));
        }
        outputs.push(std::fs::read(&path).unwrap());
    }
    if outputs[0] == outputs[1] {
        Outcome::Pass(format!(
            "--jobs 1 and --jobs 4 both wrote {} identical bytes",
            outputs[0].len()
        ))
    } else {
        Outcome::Fail("scan outputs differ".into())
    }
}

fn main() -> ExitCode {
    let mut unexpected = 0;
    let mut report = |label: &str, run: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => {
                unexpected += 1;
                ("FAIL", d)
            }
            Outcome::Refuted(d) => ("FAIL [expected]", d),
        };
        println!("{tag} {label} ({detail}) [{secs:.1}s]");
    };

    report(
        "1 recurrences equal brute-force enumeration, n <= 18, 1 <= ell <= n",
        &oracle_equivalence,
    );
    report(
        "2 path routes A, B and relaxed agree, n <= 300, ell <= 20",
        &route_agreement,
    );
    report(
        "3 cycle closed forms for n <= 2ell+2, ell <= 50",
        &cycle_closed_forms,
    );
    report("4 coefficient identity suite, ell <= 30", &identity_suite);

    let survey = mode_survey();
    report("5a unimodal, both families, n <= 300, ell <= 20", &|| {
        verdict(survey.not_unimodal.clone(), survey.rows)
    });
    report(
        "5b ceil(n/2) in the mode interval for every n <= 300, ell <= 20",
        &|| match survey.misses.first() {
            None => Outcome::Pass(format!("{} rows", survey.rows)),
            Some(&(family, n, ell)) => {
                let max_ell = survey.misses.iter().map(|m| m.2).max().unwrap_or(0);
                let coeffs = row(family, ell, n)[n].to_string();
                Outcome::Refuted(format!(
                    "{} of {} rows miss, all with ell <= {max_ell}; first {family} n={n} ell={ell}: {coeffs}",
                    survey.misses.len(),
                    survey.rows
                ))
            }
        },
    );
    report("5c ceil(n/2) in the mode interval where established (n <= 2ell+1 or min degree >= 2 log2 n)", &|| {
        let backed = survey
            .misses
            .iter()
            .filter(|&&(f, n, ell)| mode_claim_is_backed(f, n, ell))
            .map(|(f, n, ell)| format!("{f} n={n} ell={ell}"))
            .collect();
        verdict(backed, survey.rows)
    });

    report(
        "6 ultra-log-concave, both families, n, ell <= 150",
        &ultra_log_concavity,
    );
    report(
        "7a counterexample seeds fail exactly at n = k, k = 3..8",
        &certifier_counterexample,
    );
    report(
        "7b path seeds, k = 2ell+1, ell <= 8, certified to N = 300",
        &certifier_domination_rows,
    );
    report(
        "8 rising to ceil(n/2), falling from floor(3n/4), n <= 300, ell <= 20",
        &literature_bounds,
    );
    report(
        "9 scan output independent of worker count",
        &scan_determinism,
    );

    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
