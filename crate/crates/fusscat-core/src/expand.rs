//! Exact multivariate polynomials in finitely many variables.
//!
//! [`MultiPoly`] is a small sparse polynomial type used as an *independent
//! oracle*: identities between abstract basis elements of symmetric or
//! quasisymmetric functions are cross-checked by expanding both sides into
//! concrete variables and comparing term by term. The expansion routines
//! below enumerate the defining combinatorial objects directly (distinct
//! rearrangements, subsets, weak compositions, semistandard tableaux,
//! refinements), so they share no code with the basis-conversion matrices
//! they are used to validate.

use crate::partitions::{Composition, Partition};
use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A polynomial in a fixed number of commuting variables with exact
/// rational coefficients. Every stored exponent vector has length
/// [`MultiPoly::vars`]; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: BigRational) -> Self {
        let mut out = Self::zero(vars);
        out.add_term(vec![0; vars], &c);
        out
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, BigRational::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars, "variable index {i} out of range for {vars} variables");
        let mut e = vec![0; vars];
        e[i] = 1;
        Self::monomial(vars, e, BigRational::one())
    }

    /// A single term `c * x^exponents`; the zero polynomial when `c = 0`.
    pub fn monomial(vars: usize, exponents: Vec<u32>, c: BigRational) -> Self {
        assert!(exponents.len() == vars, "exponent vector length mismatch");
        let mut out = Self::zero(vars);
        out.add_term(exponents, &c);
        out
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `x^exponents` (zero if absent).
    pub fn coeff(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Iterate terms in ascending exponent-vector order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: &BigRational) {
        assert!(exponents.len() == self.vars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exponents);
                }
            }
            None => {
                self.terms.insert(exponents, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.vars == other.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.vars == other.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.vars == other.vars, "variable count mismatch");
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }

    /// Multiply every coefficient by the rational `c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &(v * c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.vars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The sum of all coefficients, i.e. the evaluation with every variable
    /// set to 1.
    pub fn eval_at_ones(&self) -> BigRational {
        self.terms.values().sum()
    }

    /// The terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: u32) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                out.add_term(e.clone(), c);
            }
        }
        out
    }

    /// Reinterpret in a ring with `total` variables, sending variable `i`
    /// to variable `i + offset`.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        assert!(
            offset + self.vars <= total,
            "embedding window {offset}..{} exceeds {total} variables",
            offset + self.vars
        );
        let mut out = Self::zero(total);
        for (e, c) in &self.terms {
            let mut big = vec![0u32; total];
            big[offset..offset + self.vars].copy_from_slice(e);
            out.add_term(big, c);
        }
        out
    }
}

/// All distinct rearrangements of the multiset `values` (given with
/// multiplicities), each emitted as a full-length vector.
fn distinct_arrangements(mut pool: Vec<(u32, usize)>, len: usize) -> Vec<Vec<u32>> {
    fn rec(pool: &mut Vec<(u32, usize)>, prefix: &mut Vec<u32>, len: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for i in 0..pool.len() {
            if pool[i].1 == 0 {
                continue;
            }
            pool[i].1 -= 1;
            prefix.push(pool[i].0);
            rec(pool, prefix, len, out);
            prefix.pop();
            pool[i].1 += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut pool, &mut Vec::new(), len, &mut out);
    out
}

/// Expansion of the monomial symmetric function `m_lambda`: the sum of all
/// distinct monomials whose nonzero exponents rearrange to `lambda`.
pub fn monomial_expansion(lambda: &Partition, vars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    if lambda.len() > vars {
        return out;
    }
    let mut pool: Vec<(u32, usize)> = lambda
        .multiplicities()
        .into_iter()
        .map(|(v, m)| (v, m as usize))
        .collect();
    let zeros = vars - lambda.len();
    if zeros > 0 {
        pool.push((0, zeros));
    }
    for e in distinct_arrangements(pool, vars) {
        out.add_term(e, &BigRational::one());
    }
    out
}

/// Expansion of one elementary generator `e_k`: the sum over all
/// `k`-subsets of the variables of their product.
fn elementary_generator(k: u32, vars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    if (k as usize) > vars {
        return out;
    }
    for subset in (0..vars).combinations(k as usize) {
        let mut e = vec![0u32; vars];
        for i in subset {
            e[i] = 1;
        }
        out.add_term(e, &BigRational::one());
    }
    out
}

/// Expansion of one complete homogeneous generator `h_k`: the sum of all
/// monomials of total degree `k`.
fn complete_generator(k: u32, vars: usize) -> MultiPoly {
    fn rec(rest: u32, slot: usize, e: &mut Vec<u32>, out: &mut MultiPoly) {
        if slot + 1 == e.len() {
            e[slot] = rest;
            out.add_term(e.clone(), &BigRational::one());
            e[slot] = 0;
            return;
        }
        for v in 0..=rest {
            e[slot] = v;
            rec(rest - v, slot + 1, e, out);
        }
        e[slot] = 0;
    }
    let mut out = MultiPoly::zero(vars);
    if vars == 0 {
        if k == 0 {
            return MultiPoly::one(0);
        }
        return out;
    }
    rec(k, 0, &mut vec![0u32; vars], &mut out);
    out
}

/// Expansion of one power sum generator `p_k = x_1^k + … + x_vars^k`.
fn power_generator(k: u32, vars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    for i in 0..vars {
        let mut e = vec![0u32; vars];
        e[i] = k;
        out.add_term(e, &BigRational::one());
    }
    out
}

fn product_over_parts(lambda: &Partition, vars: usize, gen: fn(u32, usize) -> MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::one(vars);
    for &p in lambda.parts() {
        out = out.mul(&gen(p, vars));
    }
    out
}

/// Expansion of `e_lambda` as the product of its elementary generators.
pub fn elementary_expansion(lambda: &Partition, vars: usize) -> MultiPoly {
    product_over_parts(lambda, vars, elementary_generator)
}

/// Expansion of `h_lambda` as the product of its complete generators.
pub fn complete_expansion(lambda: &Partition, vars: usize) -> MultiPoly {
    product_over_parts(lambda, vars, complete_generator)
}

/// Expansion of `p_lambda` as the product of its power sum generators.
pub fn power_expansion(lambda: &Partition, vars: usize) -> MultiPoly {
    product_over_parts(lambda, vars, power_generator)
}

/// Expansion of the Schur function `s_lambda` as the content generating
/// series over semistandard tableaux of shape `lambda` with entries at most
/// `vars`: rows weakly increase left to right, columns strictly increase
/// downward.
pub fn schur_expansion(lambda: &Partition, vars: usize) -> MultiPoly {
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut out = MultiPoly::zero(vars);
    if shape.is_empty() {
        return MultiPoly::one(vars);
    }
    if shape.len() > vars {
        return out;
    }
    // Fill cells row-major; rows[r][c] holds the chosen entry (1-based).
    fn rec(
        shape: &[usize],
        rows: &mut Vec<Vec<u32>>,
        r: usize,
        c: usize,
        vars: usize,
        content: &mut Vec<u32>,
        out: &mut MultiPoly,
    ) {
        if r == shape.len() {
            out.add_term(content.clone(), &BigRational::one());
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] { (r, c + 1) } else { (r + 1, 0) };
        let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let min_above = if r > 0 && c < shape[r - 1] { rows[r - 1][c] + 1 } else { 1 };
        let lo = min_left.max(min_above);
        for v in lo..=(vars as u32) {
            rows[r][c] = v;
            content[(v - 1) as usize] += 1;
            rec(shape, rows, nr, nc, vars, content, out);
            content[(v - 1) as usize] -= 1;
        }
        rows[r][c] = 0;
    }
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0u32; len]).collect();
    rec(&shape, &mut rows, 0, 0, vars, &mut vec![0u32; vars], &mut out);
    out
}

/// Expansion of the quasisymmetric monomial `M_gamma`: the parts of `gamma`
/// are placed, in order, on strictly increasing variable indices.
pub fn qsym_monomial_expansion(gamma: &Composition, vars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    if gamma.len() > vars {
        return out;
    }
    for positions in (0..vars).combinations(gamma.len()) {
        let mut e = vec![0u32; vars];
        for (slot, &p) in positions.iter().zip(gamma.parts()) {
            e[*slot] = p;
        }
        out.add_term(e, &BigRational::one());
    }
    out
}

/// Expansion of the quasisymmetric fundamental `F_gamma`: the sum of
/// `M_alpha` over all compositions `alpha` refining `gamma`.
pub fn qsym_fundamental_expansion(gamma: &Composition, vars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    for alpha in gamma.refinements() {
        out = out.add(&qsym_monomial_expansion(&alpha, vars));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn part(parts: &[u32]) -> Partition {
        Partition::from_unsorted(parts.to_vec())
    }

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn ring_arithmetic() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let square = x.add(&y).pow(2);
        assert_eq!(square.coeff(&[2, 0]), rat(1));
        assert_eq!(square.coeff(&[1, 1]), rat(2));
        assert_eq!(square.coeff(&[0, 2]), rat(1));
        assert_eq!(square.num_terms(), 3);
        assert!(square.sub(&square).is_zero());
        // Embedding x_0 + x_1 into four variables at offset 2.
        let emb = x.add(&y).embed(4, 2);
        assert_eq!(emb.coeff(&[0, 0, 1, 0]), rat(1));
        assert_eq!(emb.coeff(&[0, 0, 0, 1]), rat(1));
        assert_eq!(emb.num_terms(), 2);
    }

    #[test]
    fn monomial_and_qsym_monomial() {
        // m_{21} in three variables: six distinct monomials.
        let m21 = monomial_expansion(&part(&[2, 1]), 3);
        assert_eq!(m21.num_terms(), 6);
        assert_eq!(m21.coeff(&[2, 1, 0]), rat(1));
        assert_eq!(m21.coeff(&[0, 1, 2]), rat(1));
        // M_{21}(x,y,z) = x^2y + x^2z + y^2z and M_{12}(x,y,z) = xy^2 + xz^2 + yz^2.
        let big_m21 = qsym_monomial_expansion(&comp(&[2, 1]), 3);
        let big_m12 = qsym_monomial_expansion(&comp(&[1, 2]), 3);
        assert_eq!(
            big_m21,
            MultiPoly::monomial(3, vec![2, 1, 0], rat(1))
                .add(&MultiPoly::monomial(3, vec![2, 0, 1], rat(1)))
                .add(&MultiPoly::monomial(3, vec![0, 2, 1], rat(1)))
        );
        assert_eq!(
            big_m12,
            MultiPoly::monomial(3, vec![1, 2, 0], rat(1))
                .add(&MultiPoly::monomial(3, vec![1, 0, 2], rat(1)))
                .add(&MultiPoly::monomial(3, vec![0, 1, 2], rat(1)))
        );
        // The monomial symmetric function is the sum over the rearrangement class.
        assert_eq!(m21, big_m21.add(&big_m12));
    }

    #[test]
    fn generator_expansions() {
        let e2 = elementary_expansion(&part(&[2]), 3);
        assert_eq!(e2.num_terms(), 3);
        assert_eq!(e2.coeff(&[1, 1, 0]), rat(1));
        let h2 = complete_expansion(&part(&[2]), 2);
        assert_eq!(h2.num_terms(), 3);
        assert_eq!(h2.coeff(&[1, 1]), rat(1));
        assert_eq!(h2.coeff(&[2, 0]), rat(1));
        let p3 = power_expansion(&part(&[3]), 4);
        assert_eq!(p3.num_terms(), 4);
        assert_eq!(p3.coeff(&[0, 0, 3, 0]), rat(1));
        // Newton's identity at degree 2: p_2 = h_1^2 - 2 e_2 ... rather
        // e_1^2 = p_2 + 2 e_2 in any number of variables.
        let e1sq = elementary_expansion(&part(&[1, 1]), 4);
        let p2 = power_expansion(&part(&[2]), 4);
        let e2v4 = elementary_expansion(&part(&[2]), 4);
        assert_eq!(e1sq, p2.add(&e2v4.scale(&rat(2))));
    }

    #[test]
    fn schur_matches_known_expansions() {
        // Single rows and columns degenerate to h and e.
        for vars in 1..=4usize {
            for k in 1..=3u32 {
                assert_eq!(
                    schur_expansion(&part(&[k]), vars),
                    complete_expansion(&part(&[k]), vars)
                );
                let column = part(&vec![1; k as usize]);
                assert_eq!(
                    schur_expansion(&column, vars),
                    elementary_expansion(&part(&[k]), vars)
                );
            }
        }
        // s_{21} in three variables: m_{21} + 2 m_{111}, eight tableaux total.
        let s21 = schur_expansion(&part(&[2, 1]), 3);
        assert_eq!(s21.coeff(&[1, 1, 1]), rat(2));
        assert_eq!(s21.coeff(&[2, 1, 0]), rat(1));
        assert_eq!(s21.eval_at_ones(), rat(8));
        // Too few variables kills a tall shape.
        assert!(schur_expansion(&part(&[2, 1, 1]), 2).is_zero());
        // s_{22} in two variables is the single tableau (x y)^2.
        assert_eq!(
            schur_expansion(&part(&[2, 2]), 2),
            MultiPoly::monomial(2, vec![2, 2], rat(1))
        );
    }

    #[test]
    fn fundamental_of_one_part_is_complete() {
        for d in 1..=4u32 {
            assert_eq!(
                qsym_fundamental_expansion(&comp(&[d]), d as usize),
                complete_expansion(&part(&[d]), d as usize)
            );
        }
        // F_{21}(x,y,z) = M_{21} + M_{111}.
        let f21 = qsym_fundamental_expansion(&comp(&[2, 1]), 3);
        let expected = qsym_monomial_expansion(&comp(&[2, 1]), 3)
            .add(&qsym_monomial_expansion(&comp(&[1, 1, 1]), 3));
        assert_eq!(f21, expected);
    }
}
