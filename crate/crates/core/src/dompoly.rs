//! Domination polynomials of `P_n^ℓ` (ℓth power of the path on `n` vertices)
//! and `C_n^ℓ` (ℓth power of the cycle).
//!
//! Every family is exposed as an infinite row iterator over `n = 0, 1, 2, ...`
//! for a fixed power `ℓ`; the single-value functions just take the `n`th item.
//! Conventions: `P_0^ℓ` and `C_0^ℓ` have no vertices (polynomial `1`),
//! `C_1^ℓ` is one isolated vertex and `C_2^ℓ` is `K_2`.
//!
//! Routes for the path family:
//!
//! * [`PathRowA`]: `1`, `x`, then `γ_1 x + x Σ_{j<n} γ(P_{n-j})` while
//!   `n ≤ 2ℓ`, then `x Σ_{j=1}^{2ℓ+1} γ(P_{n-j})`. Subtraction free.
//! * [`PathRowB`]: `(1+x)^n - 1` while the graph is complete, then
//!   `(1+x) γ(P_{n-1}) - x` up to `n = 2ℓ+1`, then
//!   `(1+x) γ(P_{n-1}) - x γ(P_{n-2ℓ-2})`.
//! * [`RelaxedRoutePathRow`]: `x Σ_{i=1}^{ℓ+1} γ^r(P_{n-i})` from the
//!   relaxed polynomials of [`RelaxedPathRow`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::recurrence::WindowRecurrence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Path,
    Cycle,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Path, Family::Cycle];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            other => Err(format!("unknown family {other:?} (expected path or cycle)")),
        }
    }
}

/// A power of a path or cycle: `family`, vertex count `n`, power `ell ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    pub family: Family,
    pub n: usize,
    pub ell: usize,
}

impl GraphSpec {
    pub fn new(family: Family, n: usize, ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::ZeroPower);
        }
        Ok(Self { family, n, ell })
    }

    pub fn path(n: usize, ell: usize) -> Result<Self> {
        Self::new(Family::Path, n, ell)
    }

    pub fn cycle(n: usize, ell: usize) -> Result<Self> {
        Self::new(Family::Cycle, n, ell)
    }

    /// True when every pair of vertices is adjacent (including `n ≤ 1`).
    pub fn is_complete(&self) -> bool {
        let reach = match self.family {
            Family::Path => self.ell,
            Family::Cycle => window_len(self.ell) - 1,
        };
        self.n <= reach.saturating_add(1)
    }

    /// `γ(G, x)` by the production route: closed form when `G` is complete,
    /// scheme A for paths, the window recurrence for cycles.
    pub fn domination_polynomial(&self) -> IntPolynomial {
        if self.n == 0 {
            return IntPolynomial::one();
        }
        if self.is_complete() {
            return complete_graph_poly(self.n);
        }
        match self.family {
            Family::Path => path_poly_a(self.n, self.ell),
            Family::Cycle => cycle_poly(self.n, self.ell),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.family {
            Family::Path => 'P',
            Family::Cycle => 'C',
        };
        write!(f, "{sym}_{}^{}", self.n, self.ell)
    }
}

/// `2ℓ + 1`, saturating for absurdly large powers.
fn window_len(ell: usize) -> usize {
    ell.saturating_mul(2).saturating_add(1)
}

fn assert_power(ell: usize) {
    assert!(ell >= 1, "power must be at least 1");
}

/// `(1+x)^n - 1`, the domination polynomial of `K_n` for `n ≥ 1`.
pub fn complete_graph_poly(n: usize) -> IntPolynomial {
    &IntPolynomial::binomial_expand(n) - &IntPolynomial::one()
}

fn linear(c: usize) -> IntPolynomial {
    IntPolynomial::monomial(BigInt::from(c), 1)
}

/// Number of single vertices dominating `P_n^ℓ`, from the closed form.
///
/// A vertex `v_i` covers `v_(i-ℓ) ..= v_(i+ℓ)`, so: `n` when the graph is
/// complete, `2ℓ+2-n` for `ℓ+2 ≤ n ≤ 2ℓ+1`, and nothing beyond `2ℓ+1`.
pub fn gamma1_path(n: usize, ell: usize) -> Result<usize> {
    if ell == 0 {
        return Err(Error::ZeroPower);
    }
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    Ok(gamma1_unchecked(n, ell))
}

fn gamma1_unchecked(n: usize, ell: usize) -> usize {
    if n - 1 <= ell {
        n
    } else if n <= window_len(ell) {
        2 * ell + 2 - n
    } else {
        0
    }
}

/// `γ(P_n^ℓ, x)` for `n = 0, 1, ...` by the subtraction-free scheme.
#[derive(Clone, Debug)]
pub struct PathRowA {
    ell: usize,
    n: usize,
    window: WindowRecurrence,
}

impl PathRowA {
    pub fn new(ell: usize) -> Self {
        assert_power(ell);
        Self {
            ell,
            n: 0,
            window: WindowRecurrence::new(window_len(ell)),
        }
    }
}

impl Iterator for PathRowA {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        let n = self.n;
        let term = match n {
            0 => IntPolynomial::one(),
            1 => IntPolynomial::x(),
            _ if n < self.window.window_len() => {
                // The window still holds f_0 = 1, which the short-n sum excludes.
                let tail = self.window.window_sum() - &IntPolynomial::one();
                &tail.shift(1) + &linear(gamma1_unchecked(n, self.ell))
            }
            _ => self.window.next_term(),
        };
        self.window.push(term.clone());
        self.n += 1;
        Some(term)
    }
}

/// `γ(P_n^ℓ, x)` for `n = 0, 1, ...` by the `(1+x)`-multiplier scheme.
#[derive(Clone, Debug)]
pub struct PathRowB {
    ell: usize,
    n: usize,
    binom: IntPolynomial,
    // f_(n-2ℓ-2) ..= f_(n-1)
    history: WindowRecurrence,
}

impl PathRowB {
    pub fn new(ell: usize) -> Self {
        assert_power(ell);
        Self {
            ell,
            n: 0,
            binom: IntPolynomial::one(),
            history: WindowRecurrence::new(window_len(ell).saturating_add(1)),
        }
    }
}

impl Iterator for PathRowB {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        let n = self.n;
        let term = if n == 0 {
            IntPolynomial::one()
        } else if n - 1 <= self.ell {
            self.binom = self.binom.mul_one_plus_x();
            &self.binom - &IntPolynomial::one()
        } else {
            let prev = self.history.back(0).expect("history holds f_(n-1)");
            let grown = prev.mul_one_plus_x();
            if n <= window_len(self.ell) {
                &grown - &IntPolynomial::x()
            } else {
                let far = self
                    .history
                    .back(window_len(self.ell))
                    .expect("history holds f_(n-2ℓ-2)");
                &grown - &far.shift(1)
            }
        };
        debug_assert!(
            term.is_nonnegative(),
            "negative coefficient in P_{n}^{}",
            self.ell
        );
        self.history.push(term.clone());
        self.n += 1;
        Some(term)
    }
}

/// `γ(C_n^ℓ, x)` for `n = 0, 1, ...`.
#[derive(Clone, Debug)]
pub struct CycleRow {
    n: usize,
    binom: IntPolynomial,
    window: WindowRecurrence,
}

impl CycleRow {
    pub fn new(ell: usize) -> Self {
        assert_power(ell);
        Self {
            n: 0,
            binom: IntPolynomial::one(),
            window: WindowRecurrence::new(window_len(ell)),
        }
    }
}

impl Iterator for CycleRow {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        let n = self.n;
        self.n += 1;
        if n == 0 {
            return Some(IntPolynomial::one());
        }
        // C_0 never enters the window: the recurrence starts at n = 2ℓ+2.
        let term = if n <= self.window.window_len() {
            self.binom = self.binom.mul_one_plus_x();
            &self.binom - &IntPolynomial::one()
        } else {
            self.window.next_term()
        };
        self.window.push(term.clone());
        Some(term)
    }
}

/// Relaxed domination polynomials `γ^r(P_n^ℓ, x)`: the first `ℓ` path
/// vertices need not be dominated.
///
/// For `n ≤ ℓ` every subset qualifies. For `ℓ < n ≤ 2ℓ+1` a set dominates
/// the required suffix `v_(ℓ+1) ..= v_n` iff it meets `v_(n-ℓ) ..= v_n`,
/// giving `(1+x)^n - (1+x)^(n-ℓ-1)`. From `n = 2ℓ+1` on the window
/// recurrence with `k = 2ℓ+1` applies.
#[derive(Clone, Debug)]
pub struct RelaxedPathRow {
    ell: usize,
    n: usize,
    binom: IntPolynomial,
    lagged: IntPolynomial,
    window: WindowRecurrence,
}

impl RelaxedPathRow {
    pub fn new(ell: usize) -> Self {
        assert_power(ell);
        Self {
            ell,
            n: 0,
            binom: IntPolynomial::one(),
            lagged: IntPolynomial::one(),
            window: WindowRecurrence::new(window_len(ell)),
        }
    }
}

impl Iterator for RelaxedPathRow {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        let n = self.n;
        let term = if n < self.window.window_len() {
            if n > 0 {
                self.binom = self.binom.mul_one_plus_x();
            }
            if n <= self.ell {
                self.binom.clone()
            } else {
                if n > self.ell + 1 {
                    self.lagged = self.lagged.mul_one_plus_x();
                }
                &self.binom - &self.lagged
            }
        } else {
            self.window.next_term()
        };
        self.window.push(term.clone());
        self.n += 1;
        Some(term)
    }
}

/// `γ(P_n^ℓ, x)` for `n = ℓ+1, ℓ+2, ...` assembled from relaxed polynomials.
#[derive(Clone, Debug)]
pub struct RelaxedRoutePathRow {
    relaxed: RelaxedPathRow,
    window: WindowRecurrence,
}

impl RelaxedRoutePathRow {
    pub fn new(ell: usize) -> Self {
        let mut relaxed = RelaxedPathRow::new(ell);
        let mut window = WindowRecurrence::new(ell + 1);
        for _ in 0..=ell {
            window.push(relaxed.next().expect("row is infinite"));
        }
        Self { relaxed, window }
    }
}

impl Iterator for RelaxedRoutePathRow {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        let term = self.window.next_term();
        self.window
            .push(self.relaxed.next().expect("row is infinite"));
        Some(term)
    }
}

/// Production row iterator for either family.
#[derive(Clone, Debug)]
pub enum DominationRow {
    Path(PathRowA),
    Cycle(CycleRow),
}

impl DominationRow {
    pub fn new(family: Family, ell: usize) -> Self {
        match family {
            Family::Path => DominationRow::Path(PathRowA::new(ell)),
            Family::Cycle => DominationRow::Cycle(CycleRow::new(ell)),
        }
    }
}

impl Iterator for DominationRow {
    type Item = IntPolynomial;

    fn next(&mut self) -> Option<IntPolynomial> {
        match self {
            DominationRow::Path(row) => row.next(),
            DominationRow::Cycle(row) => row.next(),
        }
    }
}

/// `γ(P_n^ℓ, x)` by scheme A. Panics if `ell == 0`.
pub fn path_poly_a(n: usize, ell: usize) -> IntPolynomial {
    PathRowA::new(ell).nth(n).expect("row is infinite")
}

/// `γ(P_n^ℓ, x)` by scheme B. Panics if `ell == 0`.
pub fn path_poly_b(n: usize, ell: usize) -> IntPolynomial {
    PathRowB::new(ell).nth(n).expect("row is infinite")
}

/// `γ(C_n^ℓ, x)`. Panics if `ell == 0`.
pub fn cycle_poly(n: usize, ell: usize) -> IntPolynomial {
    CycleRow::new(ell).nth(n).expect("row is infinite")
}

/// `γ^r(P_n^ℓ, x)`. Panics if `ell == 0`.
pub fn relaxed_path_poly(n: usize, ell: usize) -> IntPolynomial {
    RelaxedPathRow::new(ell).nth(n).expect("row is infinite")
}

/// `γ(P_n^ℓ, x)` by the relaxed route; needs `n ≥ ℓ+1`.
pub fn path_poly_via_relaxed(n: usize, ell: usize) -> Result<IntPolynomial> {
    if ell == 0 {
        return Err(Error::ZeroPower);
    }
    if n <= ell {
        return Err(Error::TooFewVertices { n, min: ell + 1 });
    }
    Ok(RelaxedRoutePathRow::new(ell)
        .nth(n - ell - 1)
        .expect("row is infinite"))
}
