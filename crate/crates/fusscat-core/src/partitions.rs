//! Integer partitions and compositions.
//!
//! Both types share one canonical order used everywhere indexed collections
//! are displayed: weight ascending, then *reverse* lexicographic on the part
//! vectors, so that within a fixed weight `[4]` precedes `[3,1]` precedes
//! `[2,2]` precedes `[2,1,1]`. Iterating a `BTreeMap` keyed by these types
//! therefore already yields display order.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// A partition: weakly decreasing positive parts (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A composition: ordered positive parts (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

fn join_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Weight ascending, then reverse-lex on parts (see module docs).
fn canonical_cmp(a: &[u32], wa: u64, b: &[u32], wb: u64) -> Ordering {
    wa.cmp(&wb).then_with(|| b.cmp(a))
}

impl Partition {
    /// Validate weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition {
                    reason: format!("parts not weakly decreasing: {parts:?}"),
                });
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition {
                reason: format!("zero part in {parts:?}"),
            });
        }
        Ok(Partition { parts })
    }

    /// The empty partition of weight 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sort arbitrary positive parts into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Multiplicity of each distinct part value, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The transpose diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Centralizer size `prod_i i^{m_i} m_i!` over part multiplicities.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (v, m) in self.multiplicities() {
            for _ in 0..m {
                z *= BigUint::from(v);
            }
            z *= factorial(m as u64);
        }
        z
    }

    /// Dominance: every prefix sum of `self` is at least that of `other`.
    /// Only meaningful for equal weights.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let mut sa = 0u64;
        let mut sb = 0u64;
        let n = self.parts.len().max(other.parts.len());
        for i in 0..n {
            sa += self.parts.get(i).copied().unwrap_or(0) as u64;
            sb += other.parts.get(i).copied().unwrap_or(0) as u64;
            if sa < sb {
                return false;
            }
        }
        true
    }

    /// All partitions of `n` in canonical order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                prefix.push(k);
                rec(rest - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All distinct orderings of the parts, as compositions in canonical
    /// order (the rearrangement class of the partition).
    pub fn rearrangements(&self) -> Vec<Composition> {
        fn rec(pool: &mut Vec<(u32, u32)>, len: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
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
                rec(pool, len, prefix, out);
                prefix.pop();
                pool[i].1 += 1;
            }
        }
        let mut pool = self.multiplicities();
        let mut raw = Vec::new();
        rec(&mut pool, self.parts.len(), &mut Vec::new(), &mut raw);
        let mut out: Vec<Composition> = raw.into_iter().map(|parts| Composition { parts }).collect();
        out.sort();
        out
    }

    /// Comma-joined parts without brackets, e.g. `2,1`.
    pub fn display_inner(&self) -> String {
        join_parts(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.parts, self.weight(), &other.parts, other.weight())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.display_inner())
    }
}

impl Composition {
    /// Validate positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition {
                reason: format!("zero part in composition {parts:?}"),
            });
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Proper prefix sums, i.e. the descent set of the composition inside
    /// `{1, …, weight-1}`.
    pub fn descent_set(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        let mut acc = 0u64;
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p as u64;
            out.insert(acc);
        }
        out
    }

    /// Recover a composition of `weight` from a descent set.
    pub fn from_descent_set(weight: u64, descents: &BTreeSet<u64>) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0u64;
        for &d in descents {
            assert!(d > prev && d < weight, "descent {d} outside 1..{weight}");
            parts.push((d - prev) as u32);
            prev = d;
        }
        if weight > prev {
            parts.push((weight - prev) as u32);
        }
        Composition { parts }
    }

    /// Does `self` refine `other`? True when every descent of `other` is a
    /// descent of `self` (equivalently `other` is obtained by merging
    /// adjacent parts of `self`).
    pub fn refines(&self, other: &Composition) -> bool {
        self.weight() == other.weight()
            && other.descent_set().is_subset(&self.descent_set())
    }

    /// All compositions refining `self`, in canonical order.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for &p in &self.parts {
            let blocks = Composition::all_of(p);
            let mut next = Vec::with_capacity(out.len() * blocks.len());
            for prefix in &out {
                for b in &blocks {
                    let mut v = prefix.clone();
                    v.extend_from_slice(&b.parts);
                    next.push(v);
                }
            }
            out = next;
        }
        let mut out: Vec<Composition> =
            out.into_iter().map(|parts| Composition { parts }).collect();
        out.sort();
        out
    }

    /// All compositions of `n` in canonical order.
    pub fn all_of(n: u32) -> Vec<Composition> {
        fn rec(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: prefix.clone() });
                return;
            }
            for k in (1..=rest).rev() {
                prefix.push(k);
                rec(rest - k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Sort the parts into a partition.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }

    /// Reverse the parts.
    pub fn reversed(&self) -> Composition {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    /// Comma-joined parts without brackets, e.g. `3,1,2,1`.
    pub fn display_inner(&self) -> String {
        join_parts(&self.parts)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.parts, self.weight(), &other.parts, other.weight())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.display_inner())
    }
}

/// `n!` as an exact big integer.
pub fn factorial(n: u64) -> BigUint {
    let mut f = BigUint::one();
    for k in 2..=n {
        f *= BigUint::from(k);
    }
    f
}

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_matches_display_conventions() {
        let ps = Partition::all_of(4);
        let shown: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]
        );
        assert_eq!(Partition::all_of(10).len(), 42);

        let cs = Composition::all_of(3);
        let shown: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["[3]", "[2,1]", "[1,2]", "[1,1,1]"]);
    }

    #[test]
    fn conjugate_and_z() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        // z([2,2,1]) = 2^2 * 2! * 1 = 8
        let q = Partition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(q.z(), BigUint::from(8u32));
    }

    #[test]
    fn refinement_matches_descent_containment() {
        let gamma = Composition::new(vec![3, 1]).unwrap();
        let refs = gamma.refinements();
        let shown: Vec<String> = refs.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            shown,
            vec!["[3,1]", "[2,1,1]", "[1,2,1]", "[1,1,1,1]"]
        );
        for r in &refs {
            assert!(r.refines(&gamma));
        }
        let other = Composition::new(vec![1, 3]).unwrap();
        assert!(!other.refines(&gamma));
        // Round-trip through descent sets.
        for c in Composition::all_of(5) {
            assert_eq!(Composition::from_descent_set(5, &c.descent_set()), c);
        }
    }

    #[test]
    fn dominance() {
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 2]).unwrap();
        let c = Partition::new(vec![2, 1, 1]).unwrap();
        assert!(a.dominates(&b) && b.dominates(&c) && a.dominates(&c));
        assert!(!c.dominates(&b));
        assert!(a.dominates(&a));
    }

    #[test]
    fn numeric_helpers() {
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binom(8, 3), BigUint::from(56u32));
        assert_eq!(binom(3, 8), BigUint::from(0u32));
    }
}
