//! Dense univariate polynomials over exact rationals.
//!
//! [`RatPoly`] backs the closed counting formulas that are polynomial in the
//! slope parameter (path counts, interval counts for small sizes): computing
//! the whole polynomial once and evaluating it at many slopes is both faster
//! and a stronger cross-check than recomputing per slope. Coefficients are
//! stored densely from degree 0 upward with trailing zeros trimmed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// A univariate polynomial with `BigRational` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::from_integer(BigInt::from(1))])
    }

    /// Build from degree-0-first coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divide by `divisor`, returning the quotient when the division is
    /// exact and `None` when there is a nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.degree().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree().expect("nonzero");
        if n < d {
            return None;
        }
        let lead = divisor.coeff(d);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = &rem[k + d] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Render with the given variable name, highest degree first,
    /// e.g. `3*r^2 + 7*r + 3`.
    pub fn to_string_with_var(&self, var: &str) -> String {
        use num_traits::{One, Signed};
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    s.push('-');
                }
                first = false;
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&abs.to_string());
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn exact_division() {
        // (x + 1)(x + 2) / (x + 2) = x + 1
        let p = RatPoly::x().add(&RatPoly::from_int(1));
        let q = RatPoly::x().add(&RatPoly::from_int(2));
        let prod = p.mul(&q);
        assert_eq!(prod.div_exact(&q), Some(p.clone()));
        assert_eq!(prod.div_exact(&p), Some(q.clone()));
        // x^2 + 3x + 3 is not divisible by x + 1.
        let off = prod.add(&RatPoly::from_int(1));
        assert_eq!(off.div_exact(&p), None);
        assert_eq!(RatPoly::zero().div_exact(&q), Some(RatPoly::zero()));
        // Degree too small for a quotient.
        assert_eq!(p.div_exact(&prod), None);
    }

    #[test]
    fn mul_and_eval() {
        // (x + 1)(x + 2) = x^2 + 3x + 2
        let p = RatPoly::x().add(&RatPoly::from_int(1));
        let q = RatPoly::x().add(&RatPoly::from_int(2));
        let prod = p.mul(&q);
        assert_eq!(prod.coeff(0), big(2));
        assert_eq!(prod.coeff(1), big(3));
        assert_eq!(prod.coeff(2), big(1));
        assert_eq!(prod.eval_int(3), big(20));
        assert_eq!(prod.to_string_with_var("r"), "r^2 + 3*r + 2");
    }

    #[test]
    fn trim_and_zero() {
        let z = RatPoly::from_coeffs(vec![big(0), big(0)]);
        assert!(z.is_zero());
        assert_eq!(z.to_string_with_var("x"), "0");
        assert_eq!(z.degree(), None);
    }
}
