use std::collections::VecDeque;

use crate::poly::IntPolynomial;

/// Sliding window for recurrences of the form `f_n = x * (f_(n-1) + ... + f_(n-k))`.
///
/// Holds at most the last `k` pushed terms together with their running sum,
/// so each step costs one addition, one subtraction and one shift.
#[derive(Clone, Debug)]
pub struct WindowRecurrence {
    k: usize,
    terms: VecDeque<IntPolynomial>,
    sum: IntPolynomial,
}

impl WindowRecurrence {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            terms: VecDeque::with_capacity(k.min(64)),
            sum: IntPolynomial::zero(),
        }
    }

    pub fn window_len(&self) -> usize {
        self.k
    }

    /// Number of terms currently held (at most `k`).
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, term: IntPolynomial) {
        self.sum += &term;
        self.terms.push_back(term);
        if self.terms.len() > self.k {
            if let Some(old) = self.terms.pop_front() {
                self.sum -= &old;
            }
        }
    }

    /// Sum of the held terms.
    pub fn window_sum(&self) -> &IntPolynomial {
        &self.sum
    }

    /// `x` times the window sum: the next term once the window is full.
    pub fn next_term(&self) -> IntPolynomial {
        self.sum.shift(1)
    }

    /// Computes the next term, pushes it, and returns it.
    pub fn advance(&mut self) -> IntPolynomial {
        let next = self.next_term();
        self.push(next.clone());
        next
    }

    /// The `i`th most recent term (`0` = newest).
    pub fn back(&self, i: usize) -> Option<&IntPolynomial> {
        self.terms
            .len()
            .checked_sub(i + 1)
            .map(|idx| &self.terms[idx])
    }
}
