//! Truncated formal power series over an exact coefficient ring, and the
//! generating-function identities verified through them.
//!
//! [`TruncatedSeries`] keeps the coefficients of `x^0 .. x^(precision-1)`
//! in a vector over any [`CoeffRing`] — exact rationals or [`QTPoly`] — and
//! provides ring operations plus composition, inversion, `exp`, and `log`
//! (the last three by the standard coefficient recurrences, so everything
//! stays exact). Each identity checker below builds its two sides through
//! *independent* routes (closed-form coefficients on one side, functional
//! or differential equations on the other) and reports the comparison as
//! an [`IdentityReport`].

use crate::dyck;
use crate::error::{Error, Result};
use crate::parking;
use crate::partitions::{binom, factorial};
use crate::qt::QTPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;

/// The coefficient operations a series needs. Implemented for
/// [`BigRational`] and [`QTPoly`].
pub trait CoeffRing: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiply by a natural number.
    fn mul_usize(&self, k: usize) -> Self;
    /// Exact division by a positive natural number.
    fn div_usize(&self, k: usize) -> Self;
}

impl CoeffRing for BigRational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_usize(&self, k: usize) -> Self {
        self * BigRational::from_integer(BigInt::from(k))
    }
    fn div_usize(&self, k: usize) -> Self {
        assert!(k > 0, "division by zero");
        self / BigRational::from_integer(BigInt::from(k))
    }
}

impl CoeffRing for QTPoly {
    fn zero() -> Self {
        QTPoly::zero()
    }
    fn one() -> Self {
        QTPoly::one()
    }
    fn is_zero(&self) -> bool {
        QTPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        QTPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        QTPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        QTPoly::mul(self, other)
    }
    fn mul_usize(&self, k: usize) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }
    fn div_usize(&self, k: usize) -> Self {
        self.div_nat(k)
    }
}

/// A power series truncated at a fixed precision: the coefficients of
/// `x^0 .. x^(precision-1)`. Binary operations truncate to the smaller
/// precision of the two operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C: CoeffRing> {
    coeffs: Vec<C>,
}

impl<C: CoeffRing> TruncatedSeries<C> {
    /// Wrap explicit coefficients; the vector length is the precision.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        TruncatedSeries { coeffs }
    }

    /// Build from a coefficient function evaluated at `0..precision`.
    pub fn from_fn(precision: usize, f: impl Fn(usize) -> C) -> Self {
        assert!(precision > 0, "precision must be positive");
        TruncatedSeries {
            coeffs: (0..precision).map(f).collect(),
        }
    }

    pub fn zero(precision: usize) -> Self {
        Self::from_fn(precision, |_| C::zero())
    }

    pub fn one(precision: usize) -> Self {
        Self::from_fn(precision, |i| if i == 0 { C::one() } else { C::zero() })
    }

    /// The monomial `c * x^k`.
    pub fn monomial(precision: usize, k: usize, c: C) -> Self {
        assert!(k < precision, "monomial degree {k} outside precision {precision}");
        Self::from_fn(precision, |i| if i == k { c.clone() } else { C::zero() })
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficient of `x^i`; zero at or beyond the precision.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Drop coefficients at or beyond `precision`.
    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        let n = precision.min(self.coeffs.len());
        Self::from_coeffs(self.coeffs[..n].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        Self::from_fn(n, |i| self.coeffs[i].add(&other.coeffs[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        Self::from_fn(n, |i| self.coeffs[i].sub(&other.coeffs[i]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_fn(self.coeffs.len(), |i| self.coeffs[i].mul(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.coeffs.len());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Termwise derivative; the precision drops by one.
    pub fn derivative(&self) -> Self {
        let n = self.coeffs.len();
        if n == 1 {
            return Self::zero(1);
        }
        Self::from_fn(n - 1, |i| self.coeffs[i + 1].mul_usize(i + 1))
    }

    /// Transform each coefficient with access to its index — used for
    /// argument substitutions like `x -> q^r x` that scale the `n`-th
    /// coefficient by a factor depending on `n`.
    pub fn map_indexed(&self, f: impl Fn(usize, &C) -> C) -> Self {
        Self::from_fn(self.coeffs.len(), |i| f(i, &self.coeffs[i]))
    }

    /// Multiply by the variable: shift all coefficients up one order,
    /// keeping the precision (the top coefficient falls off).
    pub fn shift_up(&self) -> Self {
        let n = self.coeffs.len();
        Self::from_fn(n, |i| {
            if i == 0 {
                C::zero()
            } else {
                self.coeffs[i - 1].clone()
            }
        })
    }

    /// Substitute `inner` for the variable. `inner` must have zero
    /// constant term so that the truncation is exact.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::SeriesPrecondition(
                "composition requires a zero constant term in the inner series".into(),
            ));
        }
        let n = self.coeffs.len().min(inner.coeffs.len());
        let inner = inner.truncate(n);
        let mut out = Self::zero(n);
        for k in (0..n).rev() {
            out = out.mul(&inner);
            out.coeffs[0] = out.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(out)
    }

    /// Multiplicative inverse of a series with constant term one:
    /// `g_0 = 1`, `g_n = -(f_1 g_{n-1} + … + f_n g_0)`.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeff(0).sub(&C::one()).is_zero() {
            return Err(Error::SeriesPrecondition(
                "inversion requires a constant term of one".into(),
            ));
        }
        let n = self.coeffs.len();
        let mut g = vec![C::zero(); n];
        g[0] = C::one();
        for m in 1..n {
            let mut acc = C::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&g[m - k]));
                }
            }
            g[m] = C::zero().sub(&acc);
        }
        Ok(Self::from_coeffs(g))
    }

    /// Exponential of a series with zero constant term, by the coefficient
    /// recurrence `n g_n = sum_{k=1..n} k f_k g_{n-k}` with `g_0 = 1`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::SeriesPrecondition(
                "exp requires a zero constant term".into(),
            ));
        }
        let n = self.coeffs.len();
        let mut g = vec![C::zero(); n];
        g[0] = C::one();
        for m in 1..n {
            let mut acc = C::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul_usize(k).mul(&g[m - k]));
                }
            }
            g[m] = acc.div_usize(m);
        }
        Ok(Self::from_coeffs(g))
    }

    /// Logarithm of a series with constant term one, by the coefficient
    /// recurrence `n h_n = n f_n - sum_{k=1..n-1} k h_k f_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeff(0).sub(&C::one()).is_zero() {
            return Err(Error::SeriesPrecondition(
                "log requires a constant term of one".into(),
            ));
        }
        let n = self.coeffs.len();
        let mut h = vec![C::zero(); n];
        for m in 1..n {
            let mut acc = self.coeffs[m].mul_usize(m);
            for k in 1..m {
                if !h[k].is_zero() && !self.coeffs[m - k].is_zero() {
                    acc = acc.sub(&h[k].mul_usize(k).mul(&self.coeffs[m - k]));
                }
            }
            h[m] = acc.div_usize(m);
        }
        Ok(Self::from_coeffs(h))
    }
}

/// The shifted falling product `(u-1)(u-2)…(u-j+1)` — `j-1` factors, so the
/// value is `1` whenever `j <= 1`.
pub fn pochhammer_shifted(u: &BigRational, j: u64) -> BigRational {
    let mut acc = BigRational::one();
    for i in 1..j {
        acc *= u - BigRational::from_integer(BigInt::from(i));
    }
    acc
}

/// Outcome of one generating-function identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    /// Stable identifier, e.g. `y-algebraic`.
    pub identity: String,
    /// Named numeric parameters of this instance.
    pub params: BTreeMap<String, u64>,
    /// Number of orders compared (coefficients of `x^0 .. x^(cap-1)`).
    pub cap: usize,
    pub holds: bool,
    /// Smallest order where the two sides differ, when they do.
    pub first_failure: Option<usize>,
}

impl IdentityReport {
    fn from_sides<C: CoeffRing>(
        identity: &str,
        params: &[(&str, u64)],
        lhs: &TruncatedSeries<C>,
        rhs: &TruncatedSeries<C>,
    ) -> Self {
        let cap = lhs.precision().min(rhs.precision());
        let first_failure = (0..cap).find(|&i| lhs.coeff(i) != rhs.coeff(i));
        IdentityReport {
            identity: identity.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            cap,
            holds: first_failure.is_none(),
            first_failure,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "identity": self.identity,
            "params": self.params,
            "cap": self.cap,
            "holds": self.holds,
            "first_failure": self.first_failure,
        })
    }
}

fn big_of(n: &num_bigint::BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// Identity `y-algebraic`: the ordinary generating function of the path
/// counts satisfies `Y = 1 + x Y^(r+1)`. The left side uses the closed
/// product formula for the counts; the right side only series arithmetic.
pub fn check_y_algebraic(r: u32, cap: usize) -> IdentityReport {
    let y: TruncatedSeries<BigRational> =
        TruncatedSeries::from_fn(cap, |n| big_of(&dyck::fuss_catalan(r, n as u32)));
    let rhs = TruncatedSeries::one(cap).add(&y.pow(r + 1).shift_up());
    IdentityReport::from_sides("y-algebraic", &[("r", r as u64)], &y, &rhs)
}

/// Identity `q-functional`: the area generating functions `C_n(q)` built
/// from the convolution recurrence satisfy the functional equation
/// `Y(x) = 1 + x * Y(q^r x) Y(q^(r-1) x) … Y(x)`.
pub fn check_q_functional(r: u32, cap: usize) -> IdentityReport {
    let polys = dyck::area_polynomials_by_recurrence(r, cap.saturating_sub(1));
    let y: TruncatedSeries<QTPoly> = TruncatedSeries::from_fn(cap, |n| polys[n].clone());
    let mut product = TruncatedSeries::one(cap);
    for i in 0..=r {
        let scaled = y.map_indexed(|n, c| c.shift(i * n as u32, 0));
        product = product.mul(&scaled);
    }
    let rhs = TruncatedSeries::one(cap).add(&product.shift_up());
    IdentityReport::from_sides("q-functional", &[("r", r as u64)], &y, &rhs)
}

/// Identity `z-functional`: with `m = r(r+2)`, the series with coefficients
/// `binom((m+1)n - 2, n-1)/n` satisfies `z = t / (1-z)^m`.
pub fn check_z_functional(r: u32, cap: usize) -> IdentityReport {
    let m = (r * (r + 2)) as u64;
    let z: TruncatedSeries<BigRational> = TruncatedSeries::from_fn(cap, |n| {
        if n == 0 {
            BigRational::zero()
        } else {
            let n = n as u64;
            big_of(&binom((m + 1) * n - 2, n - 1)) / BigRational::from_integer(BigInt::from(n))
        }
    });
    let one_minus_z = TruncatedSeries::one(cap).sub(&z);
    let rhs = one_minus_z
        .pow(m as u32)
        .invert()
        .expect("(1-z)^m has constant term one")
        .shift_up();
    IdentityReport::from_sides("z-functional", &[("r", r as u64)], &z, &rhs)
}

/// Identity `exp-binomial`: `exp(sum_k a binom(bk, k) t^k / k)` equals
/// `1 + sum_j a b (ab + jb - 1)(ab + jb - 2)…(ab + jb - j + 1) t^j / j!`.
pub fn check_exp_binomial(a: u64, b: u64, cap: usize) -> IdentityReport {
    let arg: TruncatedSeries<BigRational> = TruncatedSeries::from_fn(cap, |k| {
        if k == 0 {
            BigRational::zero()
        } else {
            let count = big_of(&binom(b * k as u64, k as u64));
            (count * BigRational::from_integer(BigInt::from(a))).div_usize(k)
        }
    });
    let lhs = arg.exp().expect("argument has zero constant term");
    let rhs = TruncatedSeries::from_fn(cap, |j| {
        if j == 0 {
            BigRational::one()
        } else {
            let u = BigRational::from_integer(BigInt::from(a * b + j as u64 * b));
            let ab = BigRational::from_integer(BigInt::from(a * b));
            ab * pochhammer_shifted(&u, j as u64)
                / BigRational::from_integer(BigInt::from(factorial(j as u64)))
        }
    });
    IdentityReport::from_sides("exp-binomial", &[("a", a), ("b", b)], &lhs, &rhs)
}

/// Identity `z-algebraic`: the series with coefficients
/// `Z_n = binom(bn + b, n)/(n+1)` satisfies `Z = (1 + tZ)^b`.
pub fn check_z_algebraic(b: u64, cap: usize) -> IdentityReport {
    let z = z_algebraic_series(b, cap);
    let rhs = TruncatedSeries::one(cap).add(&z.shift_up()).pow(b as u32);
    IdentityReport::from_sides("z-algebraic", &[("b", b)], &z, &rhs)
}

fn z_algebraic_series(b: u64, cap: usize) -> TruncatedSeries<BigRational> {
    TruncatedSeries::from_fn(cap, |n| {
        let n = n as u64;
        big_of(&binom(b * n + b, n)) / BigRational::from_integer(BigInt::from(n + 1))
    })
}

/// Identity `log-derivative`: the same `Z` satisfies the differential
/// equation `Z' (1 - (b-1) t Z) = b Z^2`, compared one order short of the
/// cap because differentiation loses an order.
pub fn check_log_derivative(b: u64, cap: usize) -> IdentityReport {
    let z = z_algebraic_series(b, cap);
    let dz = z.derivative();
    let factor = TruncatedSeries::one(cap)
        .sub(&z.shift_up().scale(&BigRational::from_integer(BigInt::from(b - 1))));
    let lhs = dz.mul(&factor);
    let rhs = z
        .mul(&z)
        .scale(&BigRational::from_integer(BigInt::from(b)))
        .truncate(cap.saturating_sub(1).max(1));
    IdentityReport::from_sides("log-derivative", &[("b", b)], &lhs, &rhs)
}

/// Identity `labelled-pairs-egf`: the exponential generating function of
/// the labelled pair counts `(r+1)^n (rn+1)^(n-2)` equals
/// `(1 - r z) e^((r+1) z)` where `z = t e^(r(r+1) z)`, solved by
/// fixed-point iteration.
pub fn check_labelled_pairs_egf(r: u32, cap: usize) -> IdentityReport {
    let lhs: TruncatedSeries<BigRational> = TruncatedSeries::from_fn(cap, |n| {
        big_of(&parking::count_q_formula(r as u64, n as u64))
            / BigRational::from_integer(BigInt::from(factorial(n as u64)))
    });
    // Solve z = t * exp(r(r+1) z); each iteration is exact one order deeper.
    let factor = BigRational::from_integer(BigInt::from(r as u64 * (r as u64 + 1)));
    let mut z = TruncatedSeries::zero(cap);
    for _ in 0..cap {
        z = z
            .scale(&factor)
            .exp()
            .expect("iterate keeps a zero constant term")
            .shift_up();
    }
    let expz = z
        .scale(&BigRational::from_integer(BigInt::from(r as u64 + 1)))
        .exp()
        .expect("z has zero constant term");
    let one_minus_rz = TruncatedSeries::one(cap)
        .sub(&z.scale(&BigRational::from_integer(BigInt::from(r as u64))));
    let rhs = one_minus_rz.mul(&expz);
    IdentityReport::from_sides("labelled-pairs-egf", &[("r", r as u64)], &lhs, &rhs)
}

/// One configured identity instance; [`SeriesIdentity::check`] runs it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesIdentity {
    YAlgebraic { r: u32 },
    QFunctional { r: u32 },
    ZFunctional { r: u32 },
    ExpBinomial { a: u64, b: u64 },
    ZAlgebraic { b: u64 },
    LogDerivative { b: u64 },
    LabelledPairsEgf { r: u32 },
}

impl SeriesIdentity {
    pub fn check(&self, cap: usize) -> IdentityReport {
        match *self {
            SeriesIdentity::YAlgebraic { r } => check_y_algebraic(r, cap),
            SeriesIdentity::QFunctional { r } => check_q_functional(r, cap),
            SeriesIdentity::ZFunctional { r } => check_z_functional(r, cap),
            SeriesIdentity::ExpBinomial { a, b } => check_exp_binomial(a, b, cap),
            SeriesIdentity::ZAlgebraic { b } => check_z_algebraic(b, cap),
            SeriesIdentity::LogDerivative { b } => check_log_derivative(b, cap),
            SeriesIdentity::LabelledPairsEgf { r } => check_labelled_pairs_egf(r, cap),
        }
    }
}

/// The default verification suite: every identity over slopes `1..=r_max`
/// and exponents `1..=b_max` (binomial instances pair `a <= 3` with each
/// `b`).
pub fn default_suite(r_max: u32, b_max: u64) -> Vec<SeriesIdentity> {
    let mut out = Vec::new();
    for r in 1..=r_max {
        out.push(SeriesIdentity::YAlgebraic { r });
        out.push(SeriesIdentity::QFunctional { r });
        out.push(SeriesIdentity::ZFunctional { r });
        out.push(SeriesIdentity::LabelledPairsEgf { r });
    }
    for b in 1..=b_max {
        for a in 1..=3.min(b_max) {
            out.push(SeriesIdentity::ExpBinomial { a, b });
        }
        out.push(SeriesIdentity::ZAlgebraic { b });
        out.push(SeriesIdentity::LogDerivative { b });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn series(coeffs: &[i64]) -> TruncatedSeries<BigRational> {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn arithmetic_and_inversion() {
        let one_plus = series(&[1, 1, 0, 0, 0, 0]);
        let one_minus = series(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(one_plus.mul(&one_minus), series(&[1, 0, -1, 0, 0, 0]));
        let geo = one_minus.invert().unwrap();
        assert_eq!(geo, series(&[1, 1, 1, 1, 1, 1]));
        assert!(one_minus.mul(&geo).sub(&TruncatedSeries::one(6)).is_zero());
        // x/(1-x) composed into itself: x/(1-2x).
        let f = geo.shift_up();
        let g = f.compose(&f).unwrap();
        assert_eq!(g, series(&[0, 1, 2, 4, 8, 16]));
    }

    #[test]
    fn exp_log_derivative() {
        let x = TruncatedSeries::monomial(8, 1, rat(1));
        let e = x.exp().unwrap();
        for i in 0..8usize {
            assert_eq!(
                e.coeff(i),
                BigRational::one() / BigRational::from_integer(BigInt::from(factorial(i as u64)))
            );
        }
        // d/dx exp(x) = exp(x), log(exp(f)) = f.
        assert_eq!(e.derivative(), e.truncate(7));
        let f = series(&[0, 1, 0, 2, 0, -3, 0, 0]);
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
        let g = series(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(g.log().unwrap().exp().unwrap(), g);
    }

    #[test]
    fn preconditions_are_reported() {
        let bad = series(&[1, 1]);
        assert!(matches!(bad.exp(), Err(Error::SeriesPrecondition(_))));
        let bad = series(&[0, 1]);
        assert!(matches!(bad.log(), Err(Error::SeriesPrecondition(_))));
        assert!(matches!(bad.invert(), Err(Error::SeriesPrecondition(_))));
        let inner = series(&[1, 1]);
        assert!(matches!(
            series(&[1, 2]).compose(&inner),
            Err(Error::SeriesPrecondition(_))
        ));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer_shifted(&rat(7), 1), rat(1));
        assert_eq!(pochhammer_shifted(&rat(7), 0), rat(1));
        assert_eq!(pochhammer_shifted(&rat(5), 3), rat(12));
        assert_eq!(pochhammer_shifted(&rat(10), 2), rat(9));
    }

    #[test]
    fn identities_hold() {
        for r in 1..=2u32 {
            let a = check_y_algebraic(r, 8);
            assert!(a.holds, "{a:?}");
            let b = check_q_functional(r, 6);
            assert!(b.holds, "{b:?}");
            let c = check_z_functional(r, if r == 1 { 8 } else { 6 });
            assert!(c.holds, "{c:?}");
            let g = check_labelled_pairs_egf(r, 6);
            assert!(g.holds, "{g:?}");
        }
        for (a, b) in [(3, 2), (2, 3), (1, 4), (2, 1)] {
            let d = check_exp_binomial(a, b, 7);
            assert!(d.holds, "{d:?}");
        }
        for b in 1..=3u64 {
            let e = check_z_algebraic(b, 10);
            assert!(e.holds, "{e:?}");
            let f = check_log_derivative(b, 10);
            assert!(f.holds, "{f:?}");
        }
    }

    #[test]
    fn path_count_series_has_expected_coefficients() {
        // Slope-2 counts: 1, 1, 3, 12, 55, 273, 1428.
        let y: TruncatedSeries<BigRational> =
            TruncatedSeries::from_fn(7, |n| super::big_of(&dyck::fuss_catalan(2, n as u32)));
        let expect = [1i64, 1, 3, 12, 55, 273, 1428];
        for (i, &v) in expect.iter().enumerate() {
            assert_eq!(y.coeff(i), rat(v));
        }
    }

    #[test]
    fn failure_reporting_points_at_first_bad_order() {
        // Perturb one closed-form coefficient and the report localizes it.
        let z = z_algebraic_series(2, 8);
        let mut broken = z.coeffs().to_vec();
        broken[5] += rat(1);
        let broken = TruncatedSeries::from_coeffs(broken);
        let rhs = TruncatedSeries::one(8).add(&broken.shift_up()).pow(2);
        let report = IdentityReport::from_sides("z-algebraic", &[("b", 2)], &broken, &rhs);
        assert!(!report.holds);
        assert_eq!(report.first_failure, Some(5));
        // JSON rendering is stable.
        let v = report.to_json();
        assert_eq!(v["identity"], "z-algebraic");
        assert_eq!(v["holds"], false);
        assert_eq!(v["first_failure"], 5);
        assert_eq!(v["params"]["b"], 2);
    }

    #[test]
    fn default_suite_all_green_at_small_cap() {
        for id in default_suite(2, 3) {
            let rep = id.check(6);
            assert!(rep.holds, "{rep:?}");
            assert!(rep.to_json()["holds"].as_bool().unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(
            a in proptest::collection::vec(-6i64..=6, 6),
            b in proptest::collection::vec(-6i64..=6, 6),
            c in proptest::collection::vec(-6i64..=6, 6),
        ) {
            let f = series(&a);
            let g = series(&b);
            let h = series(&c);
            prop_assert_eq!(f.add(&g), g.add(&f));
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
            prop_assert_eq!(f.sub(&f), TruncatedSeries::zero(6));
            prop_assert_eq!(f.mul(&TruncatedSeries::one(6)), f);
        }
    }
}
