//! Symmetric functions with exact `q,t`-polynomial coefficients.
//!
//! [`SymFunc`] stores a finite expansion in one of the five classical bases
//! — monomial, elementary, complete homogeneous, power sum, Schur — keyed
//! by integer partitions. Basis changes route through the monomial basis
//! using per-degree transition matrices built from first principles:
//! matrix-filling counts for `h` and `e`, part-distribution counts for
//! `p`, and Kostka numbers (counted by growing horizontal strips) for `s`.
//! The matrices are inverted exactly over the rationals and cached per
//! (basis, degree).
//!
//! Also provided: the Hall scalar product through `h`/`m` duality, the
//! involution [`SymFunc::omega`], principal specialization at `N` equal
//! variables, expansion into concretely many variables, hook lengths,
//! standard tableau counts, and Kostka numbers.

use crate::error::{Error, Result};
use crate::expand::{self, MultiPoly};
use crate::partitions::{binom, factorial, Partition};
use crate::qt::QTPoly;
use crate::DEFAULT_DEGREE_CAP;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

/// The five classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymBasis {
    Monomial,
    Elementary,
    Complete,
    Power,
    Schur,
}

impl SymBasis {
    /// One-letter basis tag used in displays: `m`, `e`, `h`, `p`, `s`.
    pub fn letter(self) -> char {
        match self {
            SymBasis::Monomial => 'm',
            SymBasis::Elementary => 'e',
            SymBasis::Complete => 'h',
            SymBasis::Power => 'p',
            SymBasis::Schur => 's',
        }
    }

    /// Is the basis multiplicative (`b_λ b_μ = b_{λ∪μ}`)?
    fn is_multiplicative(self) -> bool {
        matches!(
            self,
            SymBasis::Elementary | SymBasis::Complete | SymBasis::Power
        )
    }
}

/// A symmetric function: a finite linear combination of basis elements
/// indexed by partitions, with [`QTPoly`] coefficients. Zero coefficients
/// are never stored, and iteration order over terms — weight ascending,
/// then `[4]` before `[3,1]` before `[2,2]` — is the display order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: SymBasis,
    terms: BTreeMap<Partition, QTPoly>,
}

impl SymFunc {
    pub fn zero(basis: SymBasis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    /// The basis element `b_lambda` with coefficient one.
    pub fn generator(basis: SymBasis, lambda: Partition) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(lambda, &QTPoly::one());
        out
    }

    /// `m_lambda`; the parts may be given in any order.
    pub fn m(parts: &[u32]) -> Self {
        Self::generator(SymBasis::Monomial, Partition::from_unsorted(parts.to_vec()))
    }

    /// `e_lambda`; the parts may be given in any order.
    pub fn e(parts: &[u32]) -> Self {
        Self::generator(SymBasis::Elementary, Partition::from_unsorted(parts.to_vec()))
    }

    /// `h_lambda`; the parts may be given in any order.
    pub fn h(parts: &[u32]) -> Self {
        Self::generator(SymBasis::Complete, Partition::from_unsorted(parts.to_vec()))
    }

    /// `p_lambda`; the parts may be given in any order.
    pub fn p(parts: &[u32]) -> Self {
        Self::generator(SymBasis::Power, Partition::from_unsorted(parts.to_vec()))
    }

    /// `s_lambda`; the parts may be given in any order.
    pub fn s(parts: &[u32]) -> Self {
        Self::generator(SymBasis::Schur, Partition::from_unsorted(parts.to_vec()))
    }

    pub fn from_terms<I>(basis: SymBasis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, QTPoly)>,
    {
        let mut out = Self::zero(basis);
        for (lambda, c) in terms {
            out.add_term(lambda, &c);
        }
        out
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `b_lambda` (zero if absent).
    pub fn coeff(&self, lambda: &Partition) -> QTPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(QTPoly::zero)
    }

    /// Iterate terms in canonical (display) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QTPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &QTPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c.clone());
            }
        }
    }

    /// Sum of two expansions in the *same* basis.
    pub fn add(&self, other: &Self) -> Self {
        assert!(self.basis == other.basis, "cannot add across bases");
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c);
        }
        out
    }

    /// Difference of two expansions in the *same* basis.
    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.basis == other.basis, "cannot subtract across bases");
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), &c.neg());
        }
        out
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &QTPoly) -> Self {
        let mut out = Self::zero(self.basis);
        for (lambda, v) in &self.terms {
            out.add_term(lambda.clone(), &v.mul(c));
        }
        out
    }

    /// Multiply every coefficient by the rational `c`.
    /// Apply `map` to every coefficient, dropping terms that map to zero.
    /// Useful for specializing `q` or `t` across a whole expansion.
    pub fn map_coeffs<F: Fn(&QTPoly) -> QTPoly>(&self, map: F) -> Self {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(lambda, c)| (lambda.clone(), map(c))),
        )
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.scale(&QTPoly::from_rational(c.clone()))
    }

    /// `Some(d)` when every stored partition has weight `d` (the zero
    /// function reports `Some(0)`), `None` for mixed weights.
    pub fn is_homogeneous(&self) -> Option<u64> {
        let mut weights = self.terms.keys().map(|p| p.weight());
        let first = match weights.next() {
            None => return Some(0),
            Some(w) => w,
        };
        if weights.all(|w| w == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Largest weight among stored partitions (0 for the zero function).
    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(|p| p.weight()).max().unwrap_or(0)
    }

    /// Change basis, refusing degrees above [`DEFAULT_DEGREE_CAP`].
    pub fn to_basis(&self, target: SymBasis) -> Result<SymFunc> {
        self.to_basis_capped(target, DEFAULT_DEGREE_CAP)
    }

    /// Change basis, refusing degrees above `cap` (the transition matrices
    /// grow with the number of partitions of the degree).
    pub fn to_basis_capped(&self, target: SymBasis, cap: usize) -> Result<SymFunc> {
        let w = self.max_weight();
        if w as usize > cap {
            return Err(Error::DegreeCap { degree: w as usize, cap });
        }
        Ok(self.convert(target))
    }

    /// Basis change without a cap guard; internal callers only convert
    /// objects whose degree they already control.
    fn convert(&self, target: SymBasis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let in_m = self.to_monomial_inner();
        if target == SymBasis::Monomial {
            return in_m;
        }
        // Group the monomial coefficients per degree and multiply by the
        // inverse transition matrix of the target basis.
        let mut out = SymFunc::zero(target);
        let mut by_degree: BTreeMap<u32, Vec<(Partition, QTPoly)>> = BTreeMap::new();
        for (lambda, c) in &in_m.terms {
            by_degree
                .entry(lambda.weight() as u32)
                .or_default()
                .push((lambda.clone(), c.clone()));
        }
        for (d, entries) in by_degree {
            let tbl = degree_table(target, d);
            for (i, target_part) in tbl.parts.iter().enumerate() {
                let mut acc = QTPoly::zero();
                for (mu, c) in &entries {
                    let j = tbl.index[mu.parts()];
                    let w = &tbl.from_m[j][i];
                    if !w.is_zero() {
                        acc = acc.add(&c.scale(w));
                    }
                }
                out.add_term(target_part.clone(), &acc);
            }
        }
        out
    }

    fn to_monomial_inner(&self) -> SymFunc {
        if self.basis == SymBasis::Monomial {
            return self.clone();
        }
        let mut out = SymFunc::zero(SymBasis::Monomial);
        for (lambda, c) in &self.terms {
            let tbl = degree_table(self.basis, lambda.weight() as u32);
            let i = tbl.index[lambda.parts()];
            for (j, w) in tbl.to_m[i].iter().enumerate() {
                if !w.is_zero() {
                    out.add_term(tbl.parts[j].clone(), &c.scale(w));
                }
            }
        }
        out
    }

    /// Product, refusing result degrees above [`DEFAULT_DEGREE_CAP`] when a
    /// basis conversion is required.
    pub fn mul(&self, other: &Self) -> Result<SymFunc> {
        self.mul_capped(other, DEFAULT_DEGREE_CAP)
    }

    /// Product returned in `self`'s basis. Multiplicative bases (`e`, `h`,
    /// `p`) multiply by merging part multisets and need no cap; `m` and `s`
    /// products route through `h`, and the result degree must stay within
    /// `cap`.
    pub fn mul_capped(&self, other: &Self, cap: usize) -> Result<SymFunc> {
        if self.basis == other.basis && self.basis.is_multiplicative() {
            return Ok(mul_by_merging(self, other));
        }
        let product_degree = (self.max_weight() + other.max_weight()) as usize;
        if product_degree > cap {
            return Err(Error::DegreeCap { degree: product_degree, cap });
        }
        let a = self.convert(SymBasis::Complete);
        let b = other.convert(SymBasis::Complete);
        Ok(mul_by_merging(&a, &b).convert(self.basis))
    }

    /// The involution `omega`: exchanges `e_lambda` and `h_lambda`, acts on
    /// `p_lambda` by the sign `(-1)^(weight - length)`, and conjugates the
    /// indexing partition on `s_lambda`. Exact in every basis (a monomial
    /// expansion routes through `h` internally).
    pub fn omega(&self) -> SymFunc {
        match self.basis {
            SymBasis::Elementary => SymFunc {
                basis: SymBasis::Complete,
                terms: self.terms.clone(),
            },
            SymBasis::Complete => SymFunc {
                basis: SymBasis::Elementary,
                terms: self.terms.clone(),
            },
            SymBasis::Power => {
                let mut out = SymFunc::zero(SymBasis::Power);
                for (lambda, c) in &self.terms {
                    let sign = lambda.weight() - lambda.len() as u64;
                    let signed = if sign % 2 == 0 { c.clone() } else { c.neg() };
                    out.add_term(lambda.clone(), &signed);
                }
                out
            }
            SymBasis::Schur => {
                let mut out = SymFunc::zero(SymBasis::Schur);
                for (lambda, c) in &self.terms {
                    out.add_term(lambda.conjugate(), c);
                }
                out
            }
            SymBasis::Monomial => self
                .convert(SymBasis::Complete)
                .omega()
                .convert(SymBasis::Monomial),
        }
    }

    /// Expand into `vars` concrete variables. All coefficients must be free
    /// of `q` and `t`.
    pub fn expand_in_variables(&self, vars: usize) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(vars);
        for (lambda, c) in &self.terms {
            if c.num_terms() > 1 || (c.num_terms() == 1 && c.coeff(0, 0).is_zero()) {
                return Err(Error::InvalidParameter(format!(
                    "cannot expand into variables: coefficient of {lambda} involves q or t"
                )));
            }
            let k = c.coeff(0, 0);
            let piece = match self.basis {
                SymBasis::Monomial => expand::monomial_expansion(lambda, vars),
                SymBasis::Elementary => expand::elementary_expansion(lambda, vars),
                SymBasis::Complete => expand::complete_expansion(lambda, vars),
                SymBasis::Power => expand::power_expansion(lambda, vars),
                SymBasis::Schur => expand::schur_expansion(lambda, vars),
            };
            out = out.add(&piece.scale(&k));
        }
        Ok(out)
    }

    /// Principal specialization: substitute `1` for each of `n` variables
    /// (and `0` beyond). Uses closed product formulas per basis; the result
    /// keeps the `q,t` coefficients intact.
    pub fn specialize_ones(&self, n: u64) -> QTPoly {
        let mut out = QTPoly::zero();
        for (lambda, c) in &self.terms {
            let count = specialize_generator_at_ones(self.basis, lambda, n);
            if !count.is_zero() {
                out = out.add(&c.scale(&count));
            }
        }
        out
    }
}

fn mul_by_merging(a: &SymFunc, b: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(a.basis);
    for (lambda, c) in &a.terms {
        for (mu, d) in &b.terms {
            let mut parts = lambda.parts().to_vec();
            parts.extend_from_slice(mu.parts());
            out.add_term(Partition::from_unsorted(parts), &c.mul(d));
        }
    }
    out
}

fn specialize_generator_at_ones(basis: SymBasis, lambda: &Partition, n: u64) -> BigRational {
    let value: BigInt = match basis {
        SymBasis::Monomial => {
            let l = lambda.len() as u64;
            if l > n {
                BigInt::zero()
            } else {
                // Number of distinct monomials: choose which of the n
                // variables carry the parts, times rearrangements.
                let mut v = binom(n, l) * factorial(l);
                for (_, m) in lambda.multiplicities() {
                    let f = factorial(m as u64);
                    assert!((&v % &f).is_zero(), "multinomial not integral");
                    v /= f;
                }
                BigInt::from(v)
            }
        }
        SymBasis::Complete => {
            let mut v = BigUint::one();
            for &k in lambda.parts() {
                v *= binom(n + k as u64 - 1, k as u64);
            }
            BigInt::from(v)
        }
        SymBasis::Elementary => {
            let mut v = BigUint::one();
            for &k in lambda.parts() {
                v *= binom(n, k as u64);
            }
            BigInt::from(v)
        }
        SymBasis::Power => BigInt::from(n).pow(lambda.len() as u32),
        SymBasis::Schur => BigInt::from(schur_at_ones(lambda, n)),
    };
    BigRational::from_integer(value)
}

/// Hook lengths of the diagram of `lambda`, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<u64> {
    let conj = lambda.conjugate();
    let mut out = Vec::with_capacity(lambda.weight() as usize);
    for (r, &row_len) in lambda.parts().iter().enumerate() {
        for c in 0..row_len as usize {
            let arm = row_len as u64 - 1 - c as u64;
            let leg = conj.parts()[c] as u64 - 1 - r as u64;
            out.push(arm + leg + 1);
        }
    }
    out
}

/// Number of standard Young tableaux of shape `lambda` (the dimension of
/// the associated irreducible), via the hook length formula.
pub fn f_dim(lambda: &Partition) -> BigUint {
    let mut num = factorial(lambda.weight());
    for h in hook_lengths(lambda) {
        let h = BigUint::from(h);
        assert!((&num % &h).is_zero(), "hook product must divide the factorial");
        num /= h;
    }
    num
}

/// Evaluation of `s_lambda` at `n` variables all equal to one, via the
/// hook content formula; zero when `lambda` has more rows than variables.
pub fn schur_at_ones(lambda: &Partition, n: u64) -> BigUint {
    let n = BigInt::from(n);
    let mut num = BigInt::one();
    for (r, &row_len) in lambda.parts().iter().enumerate() {
        for c in 0..row_len as i64 {
            num *= &n + BigInt::from(c - r as i64);
        }
    }
    if num.is_zero() {
        return BigUint::zero();
    }
    let mut den = BigInt::one();
    for h in hook_lengths(lambda) {
        den *= BigInt::from(h);
    }
    assert!((&num % &den).is_zero(), "hook content quotient must be integral");
    (num / den).to_biguint().expect("hook content value is non-negative")
}

/// Kostka number: the number of semistandard tableaux of shape `lambda`
/// and content `mu`, counted by growing the shape one horizontal strip per
/// letter. Errors when the weights differ.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    Ok(kostka_count(lambda, mu.parts()))
}

/// All ways to add a horizontal strip of `size` cells to `old` while
/// staying inside `bound` (componentwise). A horizontal strip puts at most
/// one new cell per column: row `i` may grow at most to `old[i-1]`.
fn horizontal_strip_growths(old: &[u32], bound: &[u32], size: u32) -> Vec<Vec<u32>> {
    fn rec(
        i: usize,
        left: u32,
        old: &[u32],
        bound: &[u32],
        acc: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == old.len() {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let strip_cap = if i == 0 { bound[0] } else { old[i - 1].min(bound[i]) };
        let hi = strip_cap.min(old[i].saturating_add(left));
        for v in old[i]..=hi {
            acc.push(v);
            rec(i + 1, left - (v - old[i]), old, bound, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, size, old, bound, &mut Vec::new(), &mut out);
    out
}

fn kostka_count(lambda: &Partition, content: &[u32]) -> BigUint {
    let target: Vec<u32> = lambda.parts().to_vec();
    if target.is_empty() {
        return BigUint::one();
    }
    let mut shapes: HashMap<Vec<u32>, BigUint> = HashMap::new();
    shapes.insert(vec![0; target.len()], BigUint::one());
    for &letter in content {
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (shape, ways) in shapes {
            for grown in horizontal_strip_growths(&shape, &target, letter) {
                *next.entry(grown).or_insert_with(BigUint::zero) += &ways;
            }
        }
        shapes = next;
    }
    shapes.remove(&target).unwrap_or_else(BigUint::zero)
}

/// Hall scalar product with the default degree cap.
pub fn hall_scalar(f: &SymFunc, g: &SymFunc) -> Result<QTPoly> {
    hall_scalar_capped(f, g, DEFAULT_DEGREE_CAP)
}

/// Hall scalar product `<f, g>` computed through `h`/`m` duality: the
/// complete and monomial bases pair to a Kronecker delta, so the product is
/// the coefficientwise dot product after converting `f` to `h` and `g` to
/// `m`.
pub fn hall_scalar_capped(f: &SymFunc, g: &SymFunc, cap: usize) -> Result<QTPoly> {
    let fh = f.to_basis_capped(SymBasis::Complete, cap)?;
    let gm = g.to_basis_capped(SymBasis::Monomial, cap)?;
    let mut out = QTPoly::zero();
    for (lambda, c) in fh.terms() {
        let d = gm.coeff(lambda);
        if !d.is_zero() {
            out = out.add(&c.mul(&d));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Transition matrices
// ---------------------------------------------------------------------------

struct DegreeTable {
    parts: Vec<Partition>,
    index: HashMap<Vec<u32>, usize>,
    /// Row `i`: the expansion of basis element `parts[i]` over `m`.
    to_m: Vec<Vec<BigRational>>,
    /// Inverse of `to_m`.
    from_m: Vec<Vec<BigRational>>,
}

static TABLES: LazyLock<Mutex<HashMap<(SymBasis, u32), Arc<DegreeTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn degree_table(basis: SymBasis, d: u32) -> Arc<DegreeTable> {
    if let Some(t) = TABLES.lock().unwrap().get(&(basis, d)) {
        return Arc::clone(t);
    }
    let built = Arc::new(build_table(basis, d));
    Arc::clone(
        TABLES
            .lock()
            .unwrap()
            .entry((basis, d))
            .or_insert(built),
    )
}

fn build_table(basis: SymBasis, d: u32) -> DegreeTable {
    let parts = Partition::all_of(d);
    let index: HashMap<Vec<u32>, usize> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.parts().to_vec(), i))
        .collect();
    let n = parts.len();
    let mut to_m = vec![vec![BigRational::zero(); n]; n];
    for (i, lambda) in parts.iter().enumerate() {
        for (j, mu) in parts.iter().enumerate() {
            let count: BigUint = match basis {
                SymBasis::Monomial => {
                    if i == j {
                        BigUint::one()
                    } else {
                        BigUint::zero()
                    }
                }
                SymBasis::Complete => count_fillings(lambda.parts(), mu.parts(), false),
                SymBasis::Elementary => count_fillings(lambda.parts(), mu.parts(), true),
                SymBasis::Power => count_part_distributions(lambda.parts(), mu.parts()),
                SymBasis::Schur => kostka_count(lambda, mu.parts()),
            };
            to_m[i][j] = BigRational::from_integer(BigInt::from(count));
        }
    }
    let from_m = invert_matrix(&to_m);
    DegreeTable { parts, index, to_m, from_m }
}

/// Number of matrices with row sums `rows`, column sums `cols`, and
/// entries in the naturals (`binary = false`) or in `{0,1}` (`binary =
/// true`). This is the coefficient of the monomial `x^cols` in the product
/// of complete (resp. elementary) generators over `rows`.
fn count_fillings(rows: &[u32], cols: &[u32], binary: bool) -> BigUint {
    fn fill_row(
        j: usize,
        left: u32,
        rest: &[u32],
        remaining: &mut Vec<u32>,
        binary: bool,
    ) -> BigUint {
        if j == remaining.len() {
            if left == 0 {
                return next_row(rest, remaining, binary);
            }
            return BigUint::zero();
        }
        let hi = remaining[j].min(left).min(if binary { 1 } else { u32::MAX });
        let mut acc = BigUint::zero();
        for v in 0..=hi {
            remaining[j] -= v;
            acc += fill_row(j + 1, left - v, rest, remaining, binary);
            remaining[j] += v;
        }
        acc
    }
    fn next_row(rows: &[u32], remaining: &mut Vec<u32>, binary: bool) -> BigUint {
        match rows.split_first() {
            None => BigUint::one(),
            Some((&r, rest)) => fill_row(0, r, rest, remaining, binary),
        }
    }
    let mut remaining = cols.to_vec();
    next_row(rows, &mut remaining, binary)
}

/// Number of ways to assign each part of `parts` to one of the positions
/// of `cols` so that the assigned parts at position `j` sum to `cols[j]`.
/// This is the coefficient of the monomial `x^cols` in the product of
/// power sum generators over `parts`.
fn count_part_distributions(parts: &[u32], cols: &[u32]) -> BigUint {
    fn rec(parts: &[u32], remaining: &mut Vec<u32>) -> BigUint {
        match parts.split_first() {
            None => BigUint::one(),
            Some((&p, rest)) => {
                let mut acc = BigUint::zero();
                for j in 0..remaining.len() {
                    if remaining[j] >= p {
                        remaining[j] -= p;
                        acc += rec(rest, remaining);
                        remaining[j] += p;
                    }
                }
                acc
            }
        }
    }
    let mut remaining = cols.to_vec();
    rec(parts, &mut remaining)
}

/// Exact inverse of a square rational matrix by Gauss-Jordan elimination.
fn invert_matrix(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut work: Vec<Vec<BigRational>> = a.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .expect("transition matrix is invertible");
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let p = work[col][col].clone();
        for x in work[col].iter_mut().chain(inv[col].iter_mut()) {
            *x /= &p;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for c in 0..n {
                let w = &work[col][c] * &factor;
                work[r][c] -= w;
                let v = &inv[col][c] * &factor;
                inv[r][c] -= v;
            }
        }
    }
    inv
}

impl fmt::Display for SymFunc {
    /// Canonical form, e.g. `(q^2 + 3*q + 3)*e[2,1] + e[1,1,1]`: terms in
    /// canonical partition order, coefficient `1` omitted, multi-term or
    /// negative coefficients parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(lambda, c)| {
                let cs = c.to_string();
                let simple = c.num_terms() == 1 && !cs.starts_with('-');
                if lambda.is_empty() {
                    if simple {
                        cs
                    } else {
                        format!("({cs})")
                    }
                } else {
                    let base = format!("{}[{}]", self.basis.letter(), lambda.display_inner());
                    if c.is_one() {
                        base
                    } else if simple {
                        format!("{cs}*{base}")
                    } else {
                        format!("({cs})*{base}")
                    }
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}
