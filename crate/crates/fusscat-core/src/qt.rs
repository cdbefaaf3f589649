//! Sparse bivariate polynomials in `q` and `t` over exact rationals.
//!
//! [`QTPoly`] is the single coefficient type used by every enumerator in the
//! crate: univariate `q`-polynomials simply never touch `t`. Terms live in a
//! `BTreeMap` keyed by `(q_exponent, t_exponent)`, so iteration order is
//! canonical and zero coefficients are never stored. Printing follows the
//! crate-wide convention: `q`-degree descending, then `t`-degree descending,
//! with explicit `*` between factors — e.g. `q^2*t + 3*q + t^2 + 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A polynomial in `q` and `t` with `BigRational` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QTPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(big(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The single term `c * q^qe * t^te`; the zero polynomial when `c = 0`.
    pub fn monomial(qe: u32, te: u32, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, te), c);
        }
        QTPoly { terms }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 0, big(1))
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(0, 1, big(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `q^qe * t^te` (zero if absent).
    pub fn coeff(&self, qe: u32, te: u32) -> BigRational {
        self.terms.get(&(qe, te)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Iterate terms in ascending `(q_exponent, t_exponent)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, qe: u32, te: u32, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((qe, te)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(qe, te));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(qe, te), c) in &other.terms {
            out.add_term(qe, te, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(qe, te), c) in &other.terms {
            out.add_term(qe, te, &-c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        QTPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QTPoly::zero();
        for (&(qa, ta), ca) in &self.terms {
            for (&(qb, tb), cb) in &other.terms {
                out.add_term(qa + qb, ta + tb, &(ca * cb));
            }
        }
        out
    }

    /// Multiply every coefficient by the rational `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QTPoly::zero();
        }
        QTPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Shift every term by `q^qe * t^te`.
    pub fn shift(&self, qe: u32, te: u32) -> Self {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(qa, ta), c)| ((qa + qe, ta + te), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = QTPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Evaluate at numeric `q` and `t`.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(qe, te), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..qe {
                term *= q;
            }
            for _ in 0..te {
                term *= t;
            }
            acc += term;
        }
        acc
    }

    pub fn eval_int(&self, q: i64, t: i64) -> BigRational {
        self.eval(&big(q), &big(t))
    }

    /// Substitute a numeric value for `q`, leaving `t` formal.
    pub fn specialize_q(&self, q: &BigRational) -> Self {
        let mut out = QTPoly::zero();
        for (&(qe, te), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..qe {
                term *= q;
            }
            out.add_term(0, te, &term);
        }
        out
    }

    /// Substitute a numeric value for `t`, leaving `q` formal.
    pub fn specialize_t(&self, t: &BigRational) -> Self {
        let mut out = QTPoly::zero();
        for (&(qe, te), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..te {
                term *= t;
            }
            out.add_term(qe, 0, &term);
        }
        out
    }

    /// Exchange the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(qe, te), c)| ((te, qe), c.clone()))
                .collect(),
        }
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(qe, _)| qe).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, te)| te).max()
    }

    /// Exact division by a positive integer.
    pub fn div_nat(&self, k: usize) -> Self {
        assert!(k > 0, "division by zero");
        let inv = BigRational::new(BigInt::one(), BigInt::from(k));
        self.scale(&inv)
    }

    /// Do all coefficients lie in the non-negative integers?
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    fn render_term(qe: u32, te: u32, c: &BigRational, out: &mut String) {
        let mono = match (qe, te) {
            (0, 0) => String::new(),
            (1, 0) => "q".to_string(),
            (qe, 0) => format!("q^{qe}"),
            (0, 1) => "t".to_string(),
            (0, te) => format!("t^{te}"),
            (1, 1) => "q*t".to_string(),
            (1, te) => format!("q*t^{te}"),
            (qe, 1) => format!("q^{qe}*t"),
            (qe, te) => format!("q^{qe}*t^{te}"),
        };
        if mono.is_empty() {
            out.push_str(&c.to_string());
        } else if c.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&c.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
}

impl fmt::Display for QTPoly {
    /// Canonical form: `q`-degree descending, then `t`-degree descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (&(qe, te), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            Self::render_term(qe, te, &abs, &mut s);
        }
        write!(f, "{s}")
    }
}

impl Add for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        QTPoly::add(self, rhs)
    }
}

impl Sub for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        QTPoly::sub(self, rhs)
    }
}

impl Mul for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        QTPoly::mul(self, rhs)
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly::neg(self)
    }
}

impl AddAssign<&QTPoly> for QTPoly {
    fn add_assign(&mut self, rhs: &QTPoly) {
        for (&(qe, te), c) in &rhs.terms {
            self.add_term(qe, te, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_round_trip() {
        let p = QTPoly::q().add(&QTPoly::t()).add(&QTPoly::one());
        let q = p.mul(&p);
        let back = q.sub(&p.mul(&p));
        assert!(back.is_zero());
        assert_eq!(q.coeff(1, 1), big(2));
        assert_eq!(q.coeff(0, 0), big(1));
    }

    #[test]
    fn display_is_q_major_descending() {
        // q^2 + 4q + 7  (classic shape)
        let p = QTPoly::monomial(2, 0, big(1))
            .add(&QTPoly::monomial(1, 0, big(4)))
            .add(&QTPoly::from_int(7));
        assert_eq!(p.to_string(), "q^2 + 4*q + 7");

        let mixed = QTPoly::monomial(2, 1, big(1))
            .add(&QTPoly::monomial(0, 2, big(-3)))
            .add(&QTPoly::monomial(1, 0, big(1)));
        assert_eq!(mixed.to_string(), "q^2*t + q - 3*t^2");
        assert_eq!(QTPoly::zero().to_string(), "0");
    }

    #[test]
    fn specialization_and_swap() {
        // p = q^2 t + 2 q
        let p = QTPoly::monomial(2, 1, big(1)).add(&QTPoly::monomial(1, 0, big(2)));
        assert_eq!(p.specialize_t(&big(1)).to_string(), "q^2 + 2*q");
        assert_eq!(p.specialize_q(&big(0)).to_string(), "0");
        assert_eq!(p.swap_qt().to_string(), "q*t^2 + 2*t");
        assert_eq!(p.eval_int(2, 3), big(16));
    }
}
