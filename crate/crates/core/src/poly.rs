//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored lowest degree first. Every value is kept in
//! canonical form: the last stored coefficient is nonzero, and the zero
//! polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from `coeffs[k]` = coefficient of `x^k`, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(1+x)^n`, built row by row with Pascal's rule.
    pub fn binomial_expand(n: usize) -> Self {
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::one());
        for _ in 0..n {
            row.push(BigInt::zero());
            for k in (1..row.len()).rev() {
                let prev = row[k - 1].clone();
                row[k] += prev;
            }
        }
        Self { coeffs: row }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest index with a nonzero coefficient.
    pub fn min_support(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Sum of coefficients, i.e. the value at `x = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + k);
        coeffs.resize(k, BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Multiplies by `(1+x)`.
    pub fn mul_one_plus_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(self.coeffs[0].clone());
        for k in 1..n {
            coeffs.push(&self.coeffs[k] + &self.coeffs[k - 1]);
        }
        coeffs.push(self.coeffs[n - 1].clone());
        Self { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self -= &rhs;
        self
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[0, 1]) + &p(&[1, 1]), p(&[1, 2]));
        assert_eq!(&p(&[4, 0, 2]) + &IntPolynomial::zero(), p(&[4, 0, 2]));
        // gamma(P_3) + gamma(P_2)
        assert_eq!(&p(&[0, 1, 3, 1]) + &p(&[0, 2, 1]), p(&[0, 3, 4, 1]));
    }

    #[test]
    fn sub_examples() {
        assert_eq!(&p(&[0, 2, 1]) - &p(&[0, 1]), p(&[0, 1, 1]));
        let q = p(&[3, -1, 7]);
        assert!((&q - &q).is_zero());
        let b3 = &(&p(&[1, 1]) * &p(&[0, 2, 1])) - &IntPolynomial::x();
        assert_eq!(b3, p(&[0, 1, 3, 1]));
    }

    #[test]
    fn sub_cancels_leading_terms() {
        let d = &p(&[1, 2, 3]) - &p(&[0, 0, 3]);
        assert_eq!(d.degree(), Some(1));
        assert_eq!(d.coeffs().last().map(|c| c.is_zero()), Some(false));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&IntPolynomial::x() * &p(&[1, 1, 1]), p(&[0, 1, 1, 1]));
        assert_eq!(&p(&[1, 1]) * &p(&[0, 1, 3, 1]), p(&[0, 1, 4, 4, 1]));
        assert!((&p(&[1, 1]) * &IntPolynomial::zero()).is_zero());
    }

    #[test]
    fn binomial_expand_examples() {
        assert_eq!(IntPolynomial::binomial_expand(0), IntPolynomial::one());
        assert_eq!(IntPolynomial::binomial_expand(2), p(&[1, 2, 1]));
        assert_eq!(IntPolynomial::binomial_expand(4), p(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(p(&[0, 1, 3, 1]).eval_at_one(), BigInt::from(5));
        assert_eq!(IntPolynomial::zero().eval_at_one(), BigInt::zero());
        let k10 = &IntPolynomial::binomial_expand(10) - &IntPolynomial::one();
        assert_eq!(k10.eval_at_one(), BigInt::from(1023));
    }

    #[test]
    fn degree_and_support() {
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0, 6, 4, 1]).degree(), Some(4));
        assert_eq!(p(&[0, 0, 6, 4, 1]).min_support(), Some(2));
        assert_eq!(p(&[0, 0, 0]), IntPolynomial::zero());
    }

    #[test]
    fn shift_and_one_plus_x() {
        assert_eq!(p(&[1, 2]).shift(2), p(&[0, 0, 1, 2]));
        assert_eq!(p(&[0, 2, 1]).mul_one_plus_x(), &p(&[1, 1]) * &p(&[0, 2, 1]));
        assert!(IntPolynomial::zero().shift(3).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 1, 3, 1]).to_string(), "x + 3x^2 + x^3");
        assert_eq!(p(&[-2, 0, -1]).to_string(), "-2 - x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
