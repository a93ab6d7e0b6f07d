//! Shape tests for coefficient sequences and mode-sequence certification.
//!
//! All comparisons are exact: log-concavity and ultra-log-concavity are
//! checked in cross-multiplied integer form.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::recurrence::WindowRecurrence;

/// Outcome of an index-wise inequality check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// First index where the property fails.
    FailsAt(usize),
}

impl Verdict {
    pub fn holds(self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(self) -> Option<usize> {
        match self {
            Verdict::Holds => None,
            Verdict::FailsAt(k) => Some(k),
        }
    }
}

/// Inclusive range of indices, `lo ≤ hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModeInterval {
    pub lo: usize,
    pub hi: usize,
}

impl ModeInterval {
    /// Every index; the modes of an all-zero sequence.
    pub const UNBOUNDED: ModeInterval = ModeInterval {
        lo: 0,
        hi: usize::MAX,
    };

    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(lo <= hi, "empty mode interval [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn point(m: usize) -> Self {
        Self { lo: m, hi: m }
    }

    pub fn contains(&self, m: usize) -> bool {
        self.lo <= m && m <= self.hi
    }

    fn intersect(self, lo: usize, hi: usize) -> Option<Self> {
        let lo = self.lo.max(lo);
        let hi = self.hi.min(hi);
        (lo <= hi).then_some(Self { lo, hi })
    }

    fn closest_to(self, target: usize) -> usize {
        target.clamp(self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeReport {
    /// Unimodal; `None` only for the empty sequence.
    Unimodal(Option<ModeInterval>),
    /// `violation_index` is the first strict rise after a strict fall.
    NotUnimodal { violation_index: usize },
}

impl ModeReport {
    pub fn is_unimodal(&self) -> bool {
        matches!(self, ModeReport::Unimodal(_))
    }

    pub fn modes(&self) -> Option<ModeInterval> {
        match self {
            ModeReport::Unimodal(modes) => *modes,
            ModeReport::NotUnimodal { .. } => None,
        }
    }

    pub fn violation_index(&self) -> Option<usize> {
        match self {
            ModeReport::Unimodal(_) => None,
            ModeReport::NotUnimodal { violation_index } => Some(*violation_index),
        }
    }
}

/// Unimodality with the full interval of modes.
///
/// In a unimodal sequence the valid modes are exactly the positions of the
/// maximum, and they are contiguous.
pub fn check_unimodal<T: Ord>(seq: &[T]) -> ModeReport {
    let mut falling = false;
    for k in 1..seq.len() {
        if seq[k] < seq[k - 1] {
            falling = true;
        } else if seq[k] > seq[k - 1] && falling {
            return ModeReport::NotUnimodal { violation_index: k };
        }
    }
    let Some(max) = seq.iter().max() else {
        return ModeReport::Unimodal(None);
    };
    let lo = seq.iter().position(|a| a == max).expect("max is present");
    let hi = seq.iter().rposition(|a| a == max).expect("max is present");
    ModeReport::Unimodal(Some(ModeInterval { lo, hi }))
}

/// `a_k² ≥ a_(k-1) a_(k+1)` at every interior index.
pub fn check_log_concave(seq: &[BigInt]) -> Verdict {
    for k in 1..seq.len().saturating_sub(1) {
        if &seq[k] * &seq[k] < &seq[k - 1] * &seq[k + 1] {
            return Verdict::FailsAt(k);
        }
    }
    Verdict::Holds
}

/// Row `C(n, 0..=n)`.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    IntPolynomial::binomial_expand(n).into_coeffs()
}

/// Log-concavity of `a_k / C(n, k)` for `k = 0..=n`.
///
/// `seq` may be shorter than `n + 1`; missing entries are zero. Panics if it
/// is longer.
pub fn check_ultra_log_concave(seq: &[BigInt], n: usize) -> Verdict {
    check_ultra_log_concave_with(seq, &binomial_row(n))
}

/// As [`check_ultra_log_concave`] with a precomputed binomial row `C(n, 0..=n)`.
pub fn check_ultra_log_concave_with(seq: &[BigInt], binom: &[BigInt]) -> Verdict {
    assert!(
        seq.len() <= binom.len(),
        "sequence of length {} is longer than n + 1 = {}",
        seq.len(),
        binom.len()
    );
    let zero = BigInt::zero();
    let at = |k: usize| seq.get(k).unwrap_or(&zero);
    for k in 1..binom.len().saturating_sub(1) {
        let outer = at(k - 1) * at(k + 1);
        if outer.is_zero() {
            continue;
        }
        let lhs = at(k) * at(k) * &binom[k - 1] * &binom[k + 1];
        let rhs = outer * &binom[k] * &binom[k];
        if lhs < rhs {
            return Verdict::FailsAt(k);
        }
    }
    Verdict::Holds
}

/// Consecutive differences all in `{0, 1}`; the witness is the later index.
pub fn check_barely_increasing(modes: &[usize]) -> Verdict {
    for i in 1..modes.len() {
        if modes[i] < modes[i - 1] || modes[i] - modes[i - 1] > 1 {
            return Verdict::FailsAt(i);
        }
    }
    Verdict::Holds
}

/// Picks `m_i ∈ intervals[i]` forming a barely increasing sequence, if any.
///
/// Greedy from the left, taking the smallest value that still admits a
/// completion.
pub fn select_modes(intervals: &[ModeInterval]) -> Option<Vec<usize>> {
    select_modes_toward(intervals, |_| 0)
}

/// Like [`select_modes`], but each `m_i` is the completable value closest to `target(i)`.
pub fn select_modes_toward(
    intervals: &[ModeInterval],
    target: impl Fn(usize) -> usize,
) -> Option<Vec<usize>> {
    // completable[i]: values at i from which intervals[i+1..] can still be met.
    let mut completable = Vec::with_capacity(intervals.len());
    let mut next: Option<ModeInterval> = None;
    for iv in intervals.iter().rev() {
        let here = match next {
            None => *iv,
            Some(nx) => iv.intersect(nx.lo.saturating_sub(1), nx.hi)?,
        };
        completable.push(here);
        next = Some(here);
    }
    completable.reverse();

    let mut chosen: Vec<usize> = Vec::with_capacity(intervals.len());
    for (i, iv) in completable.iter().enumerate() {
        let allowed = match chosen.last() {
            None => *iv,
            Some(&prev) => iv
                .intersect(prev, prev.saturating_add(1))
                .expect("completable intervals always admit a step"),
        };
        chosen.push(allowed.closest_to(target(i)));
    }
    Some(chosen)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    NotUnimodal,
    NegativeCoefficient,
    NoBarelyIncreasingModes,
}

impl FailureReason {
    pub fn as_str(self) -> &'static str {
        match self {
            FailureReason::NotUnimodal => "not-unimodal",
            FailureReason::NegativeCoefficient => "negative-coefficient",
            FailureReason::NoBarelyIncreasingModes => "no-barely-increasing-mode-assignment",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifierFailure {
    pub index: usize,
    pub reason: FailureReason,
}

/// Result of [`certify_recurrence_family`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifierReport {
    pub k: usize,
    /// Largest `n` such that `f_0..=f_n` are nonnegative, unimodal and admit
    /// a barely increasing choice of modes. `None` if `f_0` already fails.
    pub verified_up_to: Option<usize>,
    /// A barely increasing mode choice for `f_0..=f_verified_up_to`.
    pub chosen_modes: Vec<usize>,
    pub failure: Option<CertifierFailure>,
    pub mode_intervals: Vec<ModeInterval>,
}

impl CertifierReport {
    pub fn is_verified(&self) -> bool {
        self.failure.is_none()
    }
}

/// Seeds `f_0 = 3, f_1 = x, f_i = 2x^2 (2 ≤ i < k)`: every prefix up to
/// `k - 1` passes, but `f_k` is not unimodal.
pub fn counterexample_seeds(k: usize) -> Vec<IntPolynomial> {
    (0..k)
        .map(|i| match i {
            0 => IntPolynomial::from_i64s(&[3]),
            1 => IntPolynomial::x(),
            _ => IntPolynomial::from_i64s(&[0, 0, 2]),
        })
        .collect()
}

/// Extends `f_n = x (f_(n-1) + ... + f_(n-k))` from `seeds` up to `f_horizon`
/// and checks, prefix by prefix, that every term is nonnegative and unimodal
/// and that the terms admit a barely increasing sequence of modes.
///
/// `seeds` is `f_0..f_(k-1)`, optionally followed by `f_k`, which must then
/// agree with the recurrence. Modes are selected as by [`select_modes`].
pub fn certify_recurrence_family(
    k: usize,
    seeds: &[IntPolynomial],
    horizon: usize,
) -> Result<CertifierReport> {
    certify_recurrence_family_toward(k, seeds, horizon, |_| 0)
}

/// As [`certify_recurrence_family`], choosing each mode closest to `target(i)`.
pub fn certify_recurrence_family_toward(
    k: usize,
    seeds: &[IntPolynomial],
    horizon: usize,
    target: impl Fn(usize) -> usize,
) -> Result<CertifierReport> {
    if k < 3 {
        return Err(Error::WindowTooShort(k));
    }
    if seeds.len() != k && seeds.len() != k + 1 {
        return Err(Error::SeedCount {
            k,
            got: seeds.len(),
        });
    }
    if horizon < k {
        return Err(Error::HorizonTooSmall { horizon, k });
    }
    let mut window = WindowRecurrence::new(k);
    for seed in &seeds[..k] {
        window.push(seed.clone());
    }
    if let Some(given) = seeds.get(k) {
        if *given != window.next_term() {
            return Err(Error::SeedMismatch { k });
        }
    }

    let mut intervals = Vec::with_capacity(horizon + 1);
    let mut reachable: Option<ModeInterval> = None;
    let mut failure = None;
    for n in 0..=horizon {
        let owned;
        let term = if let Some(seed) = seeds[..k].get(n) {
            seed
        } else {
            owned = window.advance();
            &owned
        };
        match classify(term, reachable) {
            Ok((iv, reach)) => {
                intervals.push(iv);
                reachable = Some(reach);
            }
            Err(reason) => {
                failure = Some(CertifierFailure { index: n, reason });
                break;
            }
        }
    }

    let chosen_modes =
        select_modes_toward(&intervals, target).expect("prefix was checked reachable");
    Ok(CertifierReport {
        k,
        verified_up_to: intervals.len().checked_sub(1),
        chosen_modes,
        failure,
        mode_intervals: intervals,
    })
}

/// Mode interval of `term` and the updated set of reachable last modes.
fn classify(
    term: &IntPolynomial,
    reachable: Option<ModeInterval>,
) -> std::result::Result<(ModeInterval, ModeInterval), FailureReason> {
    if term.coeffs().iter().any(Signed::is_negative) {
        return Err(FailureReason::NegativeCoefficient);
    }
    let iv = match check_unimodal(term.coeffs()) {
        ModeReport::NotUnimodal { .. } => return Err(FailureReason::NotUnimodal),
        ModeReport::Unimodal(None) => ModeInterval::UNBOUNDED,
        ModeReport::Unimodal(Some(iv)) => iv,
    };
    let reach = match reachable {
        None => Some(iv),
        Some(r) => iv.intersect(r.lo, r.hi.saturating_add(1)),
    };
    reach
        .map(|r| (iv, r))
        .ok_or(FailureReason::NoBarelyIncreasingModes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    fn iv(lo: usize, hi: usize) -> ModeInterval {
        ModeInterval::new(lo, hi)
    }

    #[test]
    fn unimodal_examples() {
        assert_eq!(
            check_unimodal(&[0, 1, 3, 1]),
            ModeReport::Unimodal(Some(iv(2, 2)))
        );
        assert_eq!(
            check_unimodal(&[1, 2, 2, 1]),
            ModeReport::Unimodal(Some(iv(1, 2)))
        );
        assert_eq!(
            check_unimodal(&[1, 0, 1]),
            ModeReport::NotUnimodal { violation_index: 2 }
        );
        assert_eq!(check_unimodal::<i32>(&[]), ModeReport::Unimodal(None));
        assert_eq!(
            check_unimodal(&[0, 0, 0]),
            ModeReport::Unimodal(Some(iv(0, 2)))
        );
        // plateau below the maximum is not a mode
        assert_eq!(
            check_unimodal(&[1, 1, 2]),
            ModeReport::Unimodal(Some(iv(2, 2)))
        );
        assert_eq!(check_unimodal(&[3, 1, 1, 2]).violation_index(), Some(3));
    }

    #[test]
    fn log_concave_examples() {
        assert_eq!(check_log_concave(&big(&[0, 1, 3, 1])), Verdict::Holds);
        assert_eq!(check_log_concave(&big(&[1, 1, 2])), Verdict::FailsAt(1));
        assert_eq!(check_log_concave(&big(&[1, 4, 6, 4, 1])), Verdict::Holds);
        assert_eq!(check_log_concave(&big(&[])), Verdict::Holds);
    }

    #[test]
    fn ultra_log_concave_examples() {
        assert_eq!(
            check_ultra_log_concave(&big(&[0, 1, 3, 1]), 3),
            Verdict::Holds
        );
        assert_eq!(
            check_ultra_log_concave(&big(&[1, 1, 2]), 2),
            Verdict::FailsAt(1)
        );
        for n in 0..30 {
            assert!(check_ultra_log_concave(&binomial_row(n), n).holds());
        }
        // log-concave but not ultra log-concave
        assert!(check_log_concave(&big(&[1, 1, 1])).holds());
        assert_eq!(
            check_ultra_log_concave(&big(&[1, 1, 1]), 2),
            Verdict::FailsAt(1)
        );
    }

    #[test]
    fn barely_increasing_examples() {
        assert_eq!(check_barely_increasing(&[1, 1, 2, 2]), Verdict::Holds);
        assert_eq!(check_barely_increasing(&[1, 3]), Verdict::FailsAt(1));
        assert_eq!(check_barely_increasing(&[2, 1]), Verdict::FailsAt(1));
        assert_eq!(check_barely_increasing(&[]), Verdict::Holds);
    }

    #[test]
    fn select_modes_examples() {
        assert_eq!(
            select_modes(&[iv(1, 1), iv(1, 2), iv(2, 2)]),
            Some(vec![1, 1, 2])
        );
        assert_eq!(select_modes(&[iv(0, 0), iv(2, 2)]), None);
        assert_eq!(select_modes(&[iv(1, 2), iv(1, 1)]), Some(vec![1, 1]));
        assert_eq!(select_modes(&[]), Some(vec![]));
    }

    #[test]
    fn select_modes_looks_ahead() {
        // Taking 0 first would strand the second interval.
        assert_eq!(select_modes(&[iv(0, 1), iv(2, 2)]), Some(vec![1, 2]));
        assert_eq!(
            select_modes_toward(&[iv(1, 1), iv(1, 1), iv(1, 2), iv(2, 2)], |i| (i + 1)
                .div_ceil(2)),
            Some(vec![1, 1, 2, 2])
        );
    }

    #[test]
    fn certifier_rejects_bad_arguments() {
        let seeds = vec![IntPolynomial::one(); 3];
        assert_eq!(
            certify_recurrence_family(2, &seeds, 10),
            Err(Error::WindowTooShort(2))
        );
        assert_eq!(
            certify_recurrence_family(3, &seeds[..2], 10),
            Err(Error::SeedCount { k: 3, got: 2 })
        );
        assert_eq!(
            certify_recurrence_family(3, &seeds, 2),
            Err(Error::HorizonTooSmall { horizon: 2, k: 3 })
        );
        let mut bad = seeds.clone();
        bad.push(IntPolynomial::x());
        assert_eq!(
            certify_recurrence_family(3, &bad, 10),
            Err(Error::SeedMismatch { k: 3 })
        );
    }

    #[test]
    fn certifier_counterexample_fails_at_k() {
        let seeds = counterexample_seeds(3);
        let report = certify_recurrence_family(3, &seeds, 10).unwrap();
        assert_eq!(
            report.failure,
            Some(CertifierFailure {
                index: 3,
                reason: FailureReason::NotUnimodal
            })
        );
        assert_eq!(report.verified_up_to, Some(2));
        assert_eq!(report.chosen_modes, vec![0, 1, 2]);
    }

    #[test]
    fn certifier_cycle_seeds() {
        let seeds = vec![
            IntPolynomial::from_i64s(&[0, 1]),
            IntPolynomial::from_i64s(&[0, 2, 1]),
            IntPolynomial::from_i64s(&[0, 3, 3, 1]),
            IntPolynomial::from_i64s(&[0, 0, 6, 4, 1]),
        ];
        let report = certify_recurrence_family(3, &seeds, 200).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.verified_up_to, Some(200));
        assert_eq!(report.chosen_modes.len(), 201);
        assert_eq!(&report.chosen_modes[..4], &[1, 1, 1, 2]);
        assert!(check_barely_increasing(&report.chosen_modes).holds());
        let toward =
            certify_recurrence_family_toward(3, &seeds, 200, |i| (i + 1).div_ceil(2)).unwrap();
        assert_eq!(&toward.chosen_modes[..4], &[1, 1, 2, 2]);
    }

    #[test]
    fn certifier_constant_seeds() {
        let seeds = vec![IntPolynomial::from_i64s(&[1, 1]); 3];
        let report = certify_recurrence_family(3, &seeds, 60).unwrap();
        assert!(report.is_verified());
        assert_eq!(report.mode_intervals[3], iv(1, 2));
    }

    #[test]
    fn certifier_flags_negative_and_mode_gaps() {
        let neg = vec![
            IntPolynomial::one(),
            IntPolynomial::from_i64s(&[0, -1]),
            IntPolynomial::x(),
        ];
        let report = certify_recurrence_family(3, &neg, 5).unwrap();
        assert_eq!(
            report.failure.map(|f| f.reason),
            Some(FailureReason::NegativeCoefficient)
        );
        assert_eq!(report.verified_up_to, Some(0));

        let gap = vec![
            IntPolynomial::one(),
            IntPolynomial::from_i64s(&[0, 0, 1]),
            IntPolynomial::x(),
        ];
        let report = certify_recurrence_family(3, &gap, 5).unwrap();
        assert_eq!(
            report.failure,
            Some(CertifierFailure {
                index: 1,
                reason: FailureReason::NoBarelyIncreasingModes
            })
        );
    }

    #[test]
    fn certifier_zero_polynomial_has_every_mode() {
        let seeds = vec![
            IntPolynomial::zero(),
            IntPolynomial::x(),
            IntPolynomial::zero(),
        ];
        let report = certify_recurrence_family(3, &seeds, 30).unwrap();
        assert_eq!(report.mode_intervals[0], ModeInterval::UNBOUNDED);
        assert!(check_barely_increasing(&report.chosen_modes).holds());
    }
}
