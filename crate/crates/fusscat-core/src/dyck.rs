//! Slope-`r` Dyck paths and their `q`-enumeration.
//!
//! A path of size `n` and slope `r` is encoded by its weakly increasing
//! column code `a_1 <= … <= a_n` with `a_1 = 0` and `a_i <= r*(i-1)`; entry
//! `a_i` is the horizontal displacement of the `i`-th vertical step from the
//! left wall. The *area* of a path counts the lattice cells between the path
//! and the maximal staircase, so the staircase code `a_i = r*(i-1)` has area
//! zero and the all-zeros code has the maximal area `r*n*(n-1)/2`.
//!
//! Counting is exact: [`fuss_catalan`] gives the closed-form count,
//! [`fuss_catalan_poly`] the same count as a polynomial in the slope, and
//! [`area_polynomial`] / [`area_polynomials_by_recurrence`] compute the area
//! generating function by two independent routes (direct enumeration and a
//! slot-decomposition recurrence), which the tests play against each other.

use crate::error::{Error, Result};
use crate::partitions::{binom, factorial, Composition};
use crate::qt::QTPoly;
use crate::ratpoly::RatPoly;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use std::fmt;

/// A slope-`r` path, stored by its weakly increasing column code.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    r: u32,
    code: Vec<u32>,
}

impl DyckPath {
    /// Validate a column code for slope `r`.
    pub fn new(r: u32, code: Vec<u32>) -> Result<Self> {
        if code.is_empty() {
            return Err(Error::InvalidPath {
                r,
                reason: "empty code".to_string(),
            });
        }
        if code[0] != 0 {
            return Err(Error::InvalidPath {
                r,
                reason: format!("first entry must be 0, got {}", code[0]),
            });
        }
        for i in 1..code.len() {
            if code[i] < code[i - 1] {
                return Err(Error::InvalidPath {
                    r,
                    reason: format!("code not weakly increasing at position {}", i + 1),
                });
            }
            if code[i] as u64 > r as u64 * i as u64 {
                return Err(Error::InvalidPath {
                    r,
                    reason: format!(
                        "entry {} at position {} exceeds slope bound {}",
                        code[i],
                        i + 1,
                        r as u64 * i as u64
                    ),
                });
            }
        }
        Ok(DyckPath { r, code })
    }

    /// The all-zeros code: the unique path of maximal area.
    pub fn zero_path(r: u32, n: usize) -> Self {
        DyckPath {
            r,
            code: vec![0; n],
        }
    }

    /// The staircase code `a_i = r*(i-1)`: the unique path of area zero.
    pub fn staircase(r: u32, n: usize) -> Self {
        DyckPath {
            r,
            code: (0..n).map(|i| r * i as u32).collect(),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.code.len()
    }

    pub fn code(&self) -> &[u32] {
        &self.code
    }

    /// Cells between the path and the staircase: `r*C(n,2) - sum(code)`.
    pub fn area(&self) -> u64 {
        let n = self.code.len() as u64;
        self.r as u64 * n * (n - 1) / 2 - self.coarea()
    }

    /// Sum of the code entries.
    pub fn coarea(&self) -> u64 {
        self.code.iter().map(|&a| a as u64).sum()
    }

    /// Run lengths of equal code values, by increasing value. The result is
    /// a composition of `n`.
    pub fn gamma(&self) -> Composition {
        let mut parts: Vec<u32> = Vec::new();
        let mut prev: Option<u32> = None;
        for &a in &self.code {
            match prev {
                Some(v) if v == a => *parts.last_mut().expect("run in progress") += 1,
                _ => parts.push(1),
            }
            prev = Some(a);
        }
        Composition::new(parts).expect("run lengths are positive")
    }

    /// Positions `p` (0-based, `p >= 1`) where `code[p-1] < code[p]`.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.code.len())
            .filter(|&p| self.code[p - 1] < self.code[p])
            .collect()
    }

    /// Compact rendering: concatenated digits while every entry can be a
    /// single digit (`r*(n-1) <= 9`), comma-separated otherwise.
    pub fn to_compact_string(&self) -> String {
        code_to_compact(self.r, &self.code)
    }

    /// Parse the output of [`DyckPath::to_compact_string`].
    pub fn parse_compact(r: u32, s: &str) -> Result<Self> {
        Self::new(r, compact_to_code(s)?)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

pub(crate) fn code_to_compact(r: u32, code: &[u32]) -> String {
    let max = r as u64 * (code.len() as u64).saturating_sub(1);
    if max <= 9 {
        code.iter().map(|a| a.to_string()).collect()
    } else {
        code.iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(crate) fn compact_to_code(s: &str) -> Result<Vec<u32>> {
    let parse_err = |tok: &str| Error::InvalidParameter(format!("bad code entry `{tok}` in `{s}`"));
    if s.contains(',') {
        s.split(',')
            .map(|tok| tok.trim().parse::<u32>().map_err(|_| parse_err(tok)))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as u32).ok_or_else(|| parse_err(&c.to_string())))
            .collect()
    }
}

/// Largest index `k >= p` such that every `j` in `p < j <= k` satisfies
/// `code[j] - code[p] < r*(j - p)`; the block `code[p..=k]` is the maximal
/// segment that may be shifted down as a unit from an ascent at `p`.
pub fn primitive_end(r: u32, code: &[u32], p: usize) -> usize {
    let mut k = p;
    while k + 1 < code.len()
        && (code[k + 1] as u64) < code[p] as u64 + r as u64 * (k + 1 - p) as u64
    {
        k += 1;
    }
    k
}

/// Exact path count `C(n)^{(r)} = binom((r+1)n, n) / (rn + 1)`.
pub fn fuss_catalan(r: u32, n: u32) -> BigUint {
    let num = binom((r as u64 + 1) * n as u64, n as u64);
    let den = BigUint::from(r as u64 * n as u64 + 1);
    let (q, rem) = num_integer::Integer::div_rem(&num, &den);
    assert!(rem == BigUint::from(0u32), "count formula must divide exactly");
    q
}

/// The path count as a polynomial in the slope:
/// `(1/n!) * (rn+2)(rn+3) … (rn+n)` (empty product for `n <= 1`).
pub fn fuss_catalan_poly(n: u32) -> RatPoly {
    let mut p = RatPoly::from_int(1);
    let rn = RatPoly::x().scale(&BigRational::from_integer(BigInt::from(n)));
    for k in 2..=n as i64 {
        p = p.mul(&rn.add(&RatPoly::from_int(k)));
    }
    let inv_fact = BigRational::new(BigInt::one(), BigInt::from(factorial(n as u64)));
    p.scale(&inv_fact)
}

/// All slope-`r` paths of size `n` in ascending lexicographic code order.
/// Fails with [`Error::ResourceCap`] when the count exceeds `cap`.
pub fn enumerate(r: u32, n: usize, cap: u64) -> Result<Vec<DyckPath>> {
    assert!(n >= 1, "path size must be positive");
    let count = fuss_catalan(r, n as u32);
    match count.to_u64() {
        Some(c) if c <= cap => {}
        _ => {
            return Err(Error::ResourceCap {
                count: count.to_string(),
                cap,
            })
        }
    }
    let mut out = Vec::new();
    let mut code = vec![0u32; n];
    fn rec(r: u32, n: usize, i: usize, code: &mut Vec<u32>, out: &mut Vec<DyckPath>) {
        if i == n {
            out.push(DyckPath {
                r,
                code: code.clone(),
            });
            return;
        }
        let lo = code[i - 1];
        let hi = r as u64 * i as u64;
        let hi = u32::try_from(hi).expect("slope bound fits in u32 for enumerable sizes");
        for a in lo..=hi {
            code[i] = a;
            rec(r, n, i + 1, code, out);
        }
    }
    rec(r, n, 1, &mut code, &mut out);
    Ok(out)
}

/// Area generating function `sum_paths q^{area}` by direct enumeration.
pub fn area_polynomial(r: u32, n: usize, cap: u64) -> Result<QTPoly> {
    let mut poly = QTPoly::zero();
    for p in enumerate(r, n, cap)? {
        poly.add_term(u32::try_from(p.area()).expect("area fits u32"), 0, &BigRational::one());
    }
    Ok(poly)
}

/// Area generating functions `C_0(q), …, C_{n_max}(q)` computed by the
/// slot-decomposition recurrence
/// `C_{m+1} = sum over (n_1,…,n_{r+1}) with sum m of
///  prod_i q^{(r+1-i) n_i} C_{n_i}`,
/// an enumeration-free route used to cross-check [`area_polynomial`].
pub fn area_polynomials_by_recurrence(r: u32, n_max: usize) -> Vec<QTPoly> {
    let slots = r as usize + 1;
    let mut table: Vec<QTPoly> = vec![QTPoly::one()];
    for m in 0..n_max {
        // Sum over weak compositions (n_1, …, n_slots) of m.
        let mut total = QTPoly::zero();
        let mut parts = vec![0usize; slots];
        fn rec(
            table: &[QTPoly],
            slots: usize,
            idx: usize,
            rest: usize,
            parts: &mut Vec<usize>,
            total: &mut QTPoly,
        ) {
            if idx == slots - 1 {
                parts[idx] = rest;
                let mut term = QTPoly::one();
                for (i, &ni) in parts.iter().enumerate() {
                    let exp = (slots - 1 - i) * ni;
                    term = term.mul(&table[ni].shift(u32::try_from(exp).expect("exponent fits"), 0));
                }
                *total += &term;
                return;
            }
            for v in 0..=rest {
                parts[idx] = v;
                rec(table, slots, idx + 1, rest - v, parts, total);
            }
        }
        rec(&table, slots, 0, m, &mut parts, &mut total);
        table.push(total);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_enumeration() {
        let catalan = [1u64, 1, 2, 5, 14, 42, 132];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(fuss_catalan(1, n as u32), BigUint::from(c));
        }
        assert_eq!(fuss_catalan(2, 3), BigUint::from(12u32));
        for r in 1..=3u32 {
            for n in 1..=6usize {
                let paths = enumerate(r, n, 1_000_000).unwrap();
                assert_eq!(BigUint::from(paths.len()), fuss_catalan(r, n as u32));
                // Lexicographic ascending, all valid, no duplicates.
                for w in paths.windows(2) {
                    assert!(w[0].code() < w[1].code());
                }
                for p in &paths {
                    DyckPath::new(r, p.code().to_vec()).unwrap();
                }
            }
        }
    }

    #[test]
    fn count_polynomial_agrees_with_formula() {
        assert_eq!(fuss_catalan_poly(2).to_string_with_var("r"), "r + 1");
        for n in 0..=6u32 {
            let p = fuss_catalan_poly(n);
            for r in 1..=4i64 {
                assert_eq!(
                    p.eval_int(r),
                    BigRational::from_integer(BigInt::from(
                        fuss_catalan(r as u32, n)
                    ))
                );
            }
        }
    }

    #[test]
    fn area_extremes_and_gamma() {
        let zero = DyckPath::zero_path(2, 4);
        assert_eq!(zero.area(), 12);
        assert_eq!(zero.coarea(), 0);
        assert_eq!(zero.gamma().parts(), &[4]);
        let stair = DyckPath::staircase(2, 4);
        assert_eq!(stair.area(), 0);
        assert_eq!(stair.gamma().parts(), &[1, 1, 1, 1]);
        let p = DyckPath::new(1, vec![0, 0, 1, 3]).unwrap();
        assert_eq!(p.area(), 2);
        assert_eq!(p.gamma().parts(), &[2, 1, 1]);
        assert_eq!(p.ascents(), vec![2, 3]);
    }

    #[test]
    fn recurrence_matches_enumeration() {
        for r in 1..=2u32 {
            let table = area_polynomials_by_recurrence(r, 5);
            for n in 1..=5usize {
                let direct = area_polynomial(r, n, 1_000_000).unwrap();
                assert_eq!(table[n], direct, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn compact_round_trip() {
        let p = DyckPath::new(2, vec![0, 1, 3, 5]).unwrap();
        assert_eq!(p.to_compact_string(), "0135");
        assert_eq!(DyckPath::parse_compact(2, "0135").unwrap(), p);
        let wide = DyckPath::new(3, vec![0, 3, 6, 9, 12]).unwrap();
        assert_eq!(wide.to_compact_string(), "0,3,6,9,12");
        assert_eq!(DyckPath::parse_compact(3, "0,3,6,9,12").unwrap(), wide);
        assert!(DyckPath::parse_compact(1, "01x").is_err());
        assert!(DyckPath::new(1, vec![0, 2]).is_err());
        assert!(DyckPath::new(1, vec![1]).is_err());
        assert!(DyckPath::new(1, vec![0, 1, 0]).is_err());
    }

    #[test]
    fn primitive_end_blocks() {
        // code 012 at slope 1: each ascent moves only itself.
        let code = [0u32, 1, 2];
        assert_eq!(primitive_end(1, &code, 1), 1);
        assert_eq!(primitive_end(1, &code, 2), 2);
        // code 011: the ascent at position 1 drags position 2 along.
        let code = [0u32, 1, 1];
        assert_eq!(primitive_end(1, &code, 1), 2);
        // slope 2: 0,2,3 — entry 3 is within the slope cone of position 1.
        let code = [0u32, 2, 3];
        assert_eq!(primitive_end(2, &code, 1), 2);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let err = enumerate(1, 10, 10).unwrap_err();
        match err {
            Error::ResourceCap { count, cap } => {
                assert_eq!(count, "16796");
                assert_eq!(cap, 10);
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(area_polynomial(1, 3, 0).is_err());
    }
}
