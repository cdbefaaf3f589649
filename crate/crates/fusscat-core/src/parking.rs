//! Slope-`r` parking functions: words, shapes, standardization, blocks,
//! tableau cells, the two-row array encoding, the `dinv` and descent
//! statistics, the cover moves that refine the rotation order, and the set
//! of path/function pairs `(alpha, phi)` with `alpha <= shape(phi)`.
//!
//! A word `phi = (phi_1, …, phi_n)` of non-negative integers is a slope-`r`
//! parking function when its increasing rearrangement is a valid path code
//! (see [`crate::dyck`]); that rearrangement is the *shape* of `phi`. The
//! tableau picture places one cell per letter: letters are sorted by (value
//! ascending, position descending) and the `i`-th cell sits in column
//! `value` on row `n - i` (rows counted from the bottom), carrying its
//! 1-based position as entry. Column of cell plus `r` times its row is the
//! cell's *diagonal*; the two-row array encoding stores the entries `v_i`
//! together with the labels `u_i = r*(i-1) - value_i`, so `area = sum(u_i)`.

use crate::dyck::{self, DyckPath};
use crate::error::{Error, Result};
use crate::partitions::{factorial, Composition};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A slope-`r` parking word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingFunction {
    r: u32,
    values: Vec<u32>,
}

/// One tableau cell: `column` is the letter value, `diagonal` is
/// `column + r*row`, `entry` is the 1-based position of the letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub column: u32,
    pub diagonal: u32,
    pub entry: u32,
}

/// The two-row array form: entries `top = v_1…v_n` and labels
/// `bottom = u_1…u_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrayEncoding {
    r: u32,
    top: Vec<u32>,
    bottom: Vec<u32>,
}

/// Is the word a slope-`r` parking function?
pub fn is_r_parking(r: u32, word: &[u32]) -> bool {
    if word.is_empty() {
        return false;
    }
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    sorted
        .iter()
        .enumerate()
        .all(|(i, &b)| b as u64 <= r as u64 * i as u64)
}

impl ParkingFunction {
    pub fn new(r: u32, values: Vec<u32>) -> Result<Self> {
        if !is_r_parking(r, &values) {
            return Err(Error::InvalidParking {
                reason: format!("{values:?} is not a slope-{r} parking word"),
            });
        }
        Ok(ParkingFunction { r, values })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The increasing rearrangement as a path.
    pub fn shape(&self) -> DyckPath {
        let mut sorted = self.values.clone();
        sorted.sort_unstable();
        DyckPath::new(self.r, sorted).expect("parking invariant is the path invariant")
    }

    /// Area of the shape; also the sum of the array labels.
    pub fn area(&self) -> u64 {
        self.shape().area()
    }

    /// Standardization: positions ranked by (value, then left to right),
    /// returned as 1-based ranks per position.
    pub fn standardize(&self) -> Vec<u32> {
        standardize_word(&self.values)
    }

    /// Tableau cells sorted by (value ascending, position descending); the
    /// `i`-th cell (0-based) has row `n - 1 - i`.
    pub fn cells(&self) -> Vec<Cell> {
        let n = self.values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&x, &y| self.values[x].cmp(&self.values[y]).then(y.cmp(&x)));
        order
            .iter()
            .enumerate()
            .map(|(i, &pos)| {
                let column = self.values[pos];
                let row = (n - 1 - i) as u32;
                Cell {
                    column,
                    diagonal: column + self.r * row,
                    entry: pos as u32 + 1,
                }
            })
            .collect()
    }

    /// The two-row array form of the cells.
    pub fn array_encoding(&self) -> ArrayEncoding {
        let cells = self.cells();
        let top = cells.iter().map(|c| c.entry).collect();
        let bottom = cells
            .iter()
            .enumerate()
            .map(|(i, c)| self.r * i as u32 - c.column)
            .collect();
        ArrayEncoding {
            r: self.r,
            top,
            bottom,
        }
    }

    /// Diagonal inversion count over the tableau cells.
    pub fn dinv(&self) -> u64 {
        dinv_from_cells(self.r, &self.cells())
    }

    /// Entries read by ascending diagonal label, left to right within each
    /// label; a permutation of `1..=n`.
    pub fn reading_word(&self) -> Vec<u32> {
        let arr = self.array_encoding();
        let n = arr.top.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (arr.bottom[i], i));
        order.iter().map(|&i| arr.top[i]).collect()
    }

    /// Descents of the inverse of the reading word: all `a` such that
    /// `a + 1` occurs to the left of `a`.
    pub fn descent_set(&self) -> BTreeSet<u64> {
        let w = self.reading_word();
        let n = w.len();
        let mut pos = vec![0usize; n + 1];
        for (i, &a) in w.iter().enumerate() {
            pos[a as usize] = i;
        }
        (1..n as u64)
            .filter(|&a| pos[a as usize + 1] < pos[a as usize])
            .collect()
    }

    /// The composition of `n` whose partial sums are the descent set.
    pub fn theta(&self) -> Composition {
        Composition::from_descent_set(self.values.len() as u64, &self.descent_set())
    }

    /// Compact rendering, same scheme as path codes.
    pub fn to_compact_string(&self) -> String {
        dyck::code_to_compact(self.r, &self.values)
    }

    pub fn parse_compact(r: u32, s: &str) -> Result<Self> {
        Self::new(r, dyck::compact_to_code(s)?)
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

/// Standardize any word: 1-based ranks by (value, then left to right).
pub fn standardize_word(values: &[u32]) -> Vec<u32> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (values[i], i));
    let mut ranks = vec![0u32; n];
    for (rank, &i) in order.iter().enumerate() {
        ranks[i] = rank as u32 + 1;
    }
    ranks
}

impl ArrayEncoding {
    /// Validate a two-row array: `top` a permutation of `1..=n`, labels with
    /// `u_1 = 0`, `0 <= u_i <= u_{i-1} + r`, and `v_i < v_{i-1}` whenever
    /// `u_i = u_{i-1} + r` (consecutive cells in one column).
    pub fn new(r: u32, top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        let n = top.len();
        if bottom.len() != n || n == 0 {
            return Err(Error::InvalidArray {
                reason: "rows must be non-empty and of equal length".to_string(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &top {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidArray {
                    reason: format!("top row is not a permutation of 1..={n}"),
                });
            }
            seen[v as usize] = true;
        }
        if bottom[0] != 0 {
            return Err(Error::InvalidArray {
                reason: format!("first label must be 0, got {}", bottom[0]),
            });
        }
        for i in 1..n {
            if bottom[i] > bottom[i - 1] + r {
                return Err(Error::InvalidArray {
                    reason: format!("label jump exceeds {r} at position {}", i + 1),
                });
            }
            if bottom[i] == bottom[i - 1] + r && top[i] >= top[i - 1] {
                return Err(Error::InvalidArray {
                    reason: format!(
                        "entries within a column must decrease (position {})",
                        i + 1
                    ),
                });
            }
        }
        Ok(ArrayEncoding { r, top, bottom })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// `area = sum(u_i)`.
    pub fn area(&self) -> u64 {
        self.bottom.iter().map(|&u| u as u64).sum()
    }

    /// Rebuild the parking word: the letter at position `v_i` is
    /// `r*(i-1) - u_i`.
    pub fn decode(&self) -> ParkingFunction {
        let n = self.top.len();
        let mut values = vec![0u32; n];
        for i in 0..n {
            values[self.top[i] as usize - 1] = self.r * i as u32 - self.bottom[i];
        }
        ParkingFunction::new(self.r, values).expect("valid arrays decode to parking words")
    }

    /// Diagonal inversions computed from the labels alone: the cell behind
    /// `(v_i, u_i)` has column `r*(i-1) - u_i` and diagonal
    /// `r*(n-1) - u_i`. An independent route to [`ParkingFunction::dinv`].
    pub fn dinv(&self) -> u64 {
        let n = self.top.len() as u32;
        let cells: Vec<Cell> = self
            .top
            .iter()
            .zip(&self.bottom)
            .enumerate()
            .map(|(i, (&v, &u))| Cell {
                column: self.r * i as u32 - u,
                diagonal: self.r * (n - 1) - u,
                entry: v,
            })
            .collect();
        dinv_from_cells(self.r, &cells)
    }
}

/// Pairwise diagonal-inversion count over labeled cells. For a pair with
/// entries `a < b`: same column contributes 0; `column(a) > column(b)`
/// contributes `max(0, r - |diag(b) - diag(a)|)`; `column(a) < column(b)`
/// contributes `max(0, r - |diag(b) - diag(a) - 1|)`. Equal entries (which
/// occur only in generalized fillings, never in parking functions) take the
/// minimum of the two orientations.
pub fn dinv_from_cells(r: u32, cells: &[Cell]) -> u64 {
    let mut total = 0u64;
    for (x, cx) in cells.iter().enumerate() {
        for cy in &cells[x + 1..] {
            total += dinv_pair(r, cx, cy);
        }
    }
    total
}

fn dinv_pair(r: u32, x: &Cell, y: &Cell) -> u64 {
    if x.column == y.column {
        return 0;
    }
    let oriented = |a: &Cell, b: &Cell| -> u64 {
        let gap = b.diagonal as i64 - a.diagonal as i64;
        let dist = if a.column > b.column {
            gap.abs()
        } else {
            (gap - 1).abs()
        };
        (r as i64 - dist).max(0) as u64
    };
    match x.entry.cmp(&y.entry) {
        std::cmp::Ordering::Less => oriented(x, y),
        std::cmp::Ordering::Greater => oriented(y, x),
        std::cmp::Ordering::Equal => oriented(x, y).min(oriented(y, x)),
    }
}

/// `(rn + 1)^{n-1}` parking words of size `n`.
pub fn count(r: u32, n: u32) -> BigUint {
    assert!(n >= 1, "parking count needs n >= 1");
    BigUint::from(r as u64 * n as u64 + 1).pow(n - 1)
}

/// Words sharing a given shape: `n! / (c_1! … c_k!)` over the run lengths.
pub fn count_of_shape(path: &DyckPath) -> BigUint {
    let mut denom = BigUint::one();
    for &c in path.gamma().parts() {
        denom *= factorial(c as u64);
    }
    factorial(path.n() as u64) / denom
}

/// All words with the given shape, in ascending lexicographic order.
pub fn enumerate_with_shape(path: &DyckPath) -> Vec<ParkingFunction> {
    // Distinct multiset rearrangements, built left to right choosing each
    // remaining value in ascending order.
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &a in path.code() {
        *counts.entry(a).or_insert(0) += 1;
    }
    let n = path.n();
    let r = path.r();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn rec(
        r: u32,
        n: usize,
        counts: &mut BTreeMap<u32, u32>,
        word: &mut Vec<u32>,
        out: &mut Vec<ParkingFunction>,
    ) {
        if word.len() == n {
            out.push(ParkingFunction {
                r,
                values: word.clone(),
            });
            return;
        }
        let choices: Vec<u32> = counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&v, _)| v)
            .collect();
        for v in choices {
            *counts.get_mut(&v).expect("chosen value present") -= 1;
            word.push(v);
            rec(r, n, counts, word, out);
            word.pop();
            *counts.get_mut(&v).expect("chosen value present") += 1;
        }
    }
    rec(r, n, &mut counts, &mut word, &mut out);
    out
}

/// All slope-`r` parking words of size `n` in ascending lexicographic
/// order. Shapes are expanded in parallel and merged deterministically.
pub fn enumerate(r: u32, n: usize, cap: u64) -> Result<Vec<ParkingFunction>> {
    let total = count(r, n as u32);
    match total.to_u64() {
        Some(c) if c <= cap => {}
        _ => {
            return Err(Error::ResourceCap {
                count: total.to_string(),
                cap,
            })
        }
    }
    let shapes = dyck::enumerate(r, n, cap)?;
    let mut all: Vec<ParkingFunction> = shapes
        .par_iter()
        .map(enumerate_with_shape)
        .reduce(Vec::new, |mut acc, mut chunk| {
            acc.append(&mut chunk);
            acc
        });
    all.sort();
    Ok(all)
}

/// Fibers of standardization: permutation (one-line, 1-based) to the
/// lexicographically sorted members of its block.
pub fn blocks(r: u32, n: usize, cap: u64) -> Result<BTreeMap<Vec<u32>, Vec<ParkingFunction>>> {
    let mut out: BTreeMap<Vec<u32>, Vec<ParkingFunction>> = BTreeMap::new();
    for phi in enumerate(r, n, cap)? {
        out.entry(phi.standardize()).or_default().push(phi);
    }
    Ok(out)
}

/// The unique minimal word of the block of `sigma`: position `j` holds
/// `r * (sigma_j - 1)`.
pub fn minimal_in_block(r: u32, sigma: &[u32]) -> Result<ParkingFunction> {
    let n = sigma.len();
    let mut seen = vec![false; n + 1];
    for &s in sigma {
        if s == 0 || s as usize > n || seen[s as usize] {
            return Err(Error::InvalidParameter(format!(
                "{sigma:?} is not a permutation of 1..={n}"
            )));
        }
        seen[s as usize] = true;
    }
    ParkingFunction::new(r, sigma.iter().map(|&s| r * (s - 1)).collect())
}

/// Upper covers of `phi`: for each ascent of the shape, shift the spanned
/// value classes one column left; when the landing column is occupied the
/// move is kept only if every landing-column position precedes every moved
/// bottom-class position (this keeps the standardization fixed).
pub fn parking_covers(phi: &ParkingFunction) -> Vec<ParkingFunction> {
    let shape = phi.shape();
    let a = shape.code();
    let r = phi.r();
    let mut out = BTreeSet::new();
    for p in shape.ascents() {
        let k = dyck::primitive_end(r, a, p);
        let moved: BTreeSet<u32> = a[p..=k].iter().copied().collect();
        let low = a[p] - 1;
        if a[p - 1] == low {
            let last_low = phi
                .values()
                .iter()
                .rposition(|&v| v == low)
                .expect("value class present");
            let first_moved = phi
                .values()
                .iter()
                .position(|&v| v == a[p])
                .expect("value class present");
            if last_low > first_moved {
                continue;
            }
        }
        let values = phi
            .values()
            .iter()
            .map(|&v| if moved.contains(&v) { v - 1 } else { v })
            .collect();
        out.insert(ParkingFunction::new(r, values).expect("cover yields a parking word"));
    }
    out.into_iter().collect()
}

/// Closed-form count of pairs `(alpha, phi)` with `alpha <= shape(phi)`:
/// `(r+1)^n (rn+1)^{n-2}` (exact; the negative exponents at `n < 2` are
/// handled rationally and still produce naturals — both small cases give 1).
pub fn count_q_formula(r: u64, n: u64) -> BigUint {
    let base = BigRational::from_integer(BigInt::from(r * n + 1));
    let mut value = BigRational::from_integer(BigInt::from(r + 1).pow(n as u32));
    if n >= 2 {
        value *= base.pow((n - 2) as i32);
    } else {
        for _ in n..2 {
            value /= &base;
        }
    }
    assert!(value.is_integer() && !value.is_negative(), "pair count must be a natural number");
    value.to_integer().to_biguint().expect("non-negative")
}

/// All pairs `(alpha, phi)` with `alpha <= shape(phi)` in the rotation
/// order, sorted by path code then word.
pub fn enumerate_q_pairs(
    r: u32,
    n: usize,
    cap: u64,
) -> Result<Vec<(DyckPath, ParkingFunction)>> {
    let lattice = crate::tamari::TamariLattice::new(r, n, cap)?;
    let mut out = Vec::new();
    for alpha in 0..lattice.size() {
        let mut members: Vec<ParkingFunction> = Vec::new();
        for beta in lattice.upset(alpha).iter_ones() {
            members.extend(enumerate_with_shape(lattice.path(beta)));
        }
        members.sort();
        let a = lattice.path(alpha).clone();
        out.extend(members.into_iter().map(|phi| (a.clone(), phi)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(r: u32, s: &str) -> ParkingFunction {
        ParkingFunction::parse_compact(r, s).unwrap()
    }

    #[test]
    fn recognition_and_shape() {
        assert!(is_r_parking(1, &[4, 0, 2, 0, 4, 0, 1, 0, 1]));
        let phi = ParkingFunction::new(1, vec![4, 0, 2, 0, 4, 0, 1, 0, 1]).unwrap();
        assert_eq!(phi.shape().code(), &[0, 0, 0, 0, 1, 1, 2, 4, 4]);
        assert!(!is_r_parking(1, &[2, 2, 0]));
        assert!(is_r_parking(2, &[2, 1, 0]));
        assert!(ParkingFunction::new(2, vec![5, 0, 0]).is_err());
    }

    #[test]
    fn counting_matches_enumeration() {
        for r in 1..=2u32 {
            for n in 1..=5usize {
                let all = enumerate(r, n, 1_000_000).unwrap();
                assert_eq!(BigUint::from(all.len()), count(r, n as u32), "r={r} n={n}");
                for w in all.windows(2) {
                    assert!(w[0] < w[1], "lexicographic output");
                }
                // Multinomial identity: shape fibers partition the set.
                let by_shape: BigUint = dyck::enumerate(r, n, 1_000_000)
                    .unwrap()
                    .iter()
                    .map(count_of_shape)
                    .sum();
                assert_eq!(by_shape, count(r, n as u32));
            }
        }
        assert_eq!(count(2, 3), BigUint::from(49u32));
        assert_eq!(enumerate(1, 1, 10).unwrap().len(), 1);
    }

    #[test]
    fn shape_fiber_enumeration_matches_multinomial() {
        let path = DyckPath::new(2, vec![0, 0, 2]).unwrap();
        let fiber = enumerate_with_shape(&path);
        assert_eq!(BigUint::from(fiber.len()), count_of_shape(&path));
        let words: Vec<String> = fiber.iter().map(|p| p.to_string()).collect();
        assert_eq!(words, vec!["002", "020", "200"]);
    }

    #[test]
    fn standardization_example() {
        let phi = ParkingFunction::new(2, vec![9, 7, 7, 5, 0, 0, 3, 2]).unwrap();
        assert_eq!(phi.standardize(), vec![8, 6, 7, 5, 1, 2, 4, 3]);
        // Permutation words standardize to themselves (0-based values need
        // the +1 shift to read as one-line ranks).
        assert_eq!(standardize_word(&[2, 0, 1]), vec![3, 1, 2]);
        assert_eq!(standardize_word(&[5, 5, 5]), vec![1, 2, 3]);
    }

    #[test]
    fn blocks_partition_the_set() {
        let bl = blocks(2, 3, 10_000).unwrap();
        assert_eq!(bl.len(), 6);
        let sizes: Vec<usize> = bl.values().map(Vec::len).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 49);
        let b321: Vec<String> = bl[&vec![3, 2, 1]].iter().map(|p| p.to_string()).collect();
        assert_eq!(b321, vec!["210", "310", "320", "410", "420"]);
        // Identity block = sorted words = path codes.
        let id: Vec<String> = bl[&vec![1, 2, 3]].iter().map(|p| p.to_string()).collect();
        let codes: Vec<String> = dyck::enumerate(2, 3, 100)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(id, codes);
        for (sigma, members) in &bl {
            for m in members {
                assert_eq!(&m.standardize(), sigma);
            }
            let min = minimal_in_block(2, sigma).unwrap();
            assert!(members.contains(&min));
        }
        assert_eq!(minimal_in_block(2, &[3, 2, 1]).unwrap().values(), &[4, 2, 0]);
        assert!(minimal_in_block(2, &[1, 1, 2]).is_err());
    }

    #[test]
    fn cover_moves() {
        let phi = pf(1, "35661100");
        let covers: Vec<String> = parking_covers(&phi).iter().map(|c| c.to_string()).collect();
        assert_eq!(covers, vec!["25661100", "34661100", "35551100"]);

        // The sigma = 321 block at slope 2 reaches everything from 420.
        assert_eq!(
            parking_covers(&pf(2, "420"))
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            vec!["320", "410"]
        );
        assert_eq!(
            parking_covers(&pf(2, "410"))
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            vec!["310"]
        );
        assert_eq!(
            parking_covers(&pf(2, "320"))
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            vec!["210"]
        );
        assert_eq!(
            parking_covers(&pf(2, "310"))
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            vec!["210"]
        );
        assert!(parking_covers(&pf(2, "210")).is_empty());
    }

    #[test]
    fn covers_preserve_standardization_and_match_shape_covers() {
        for phi in enumerate(2, 3, 10_000).unwrap() {
            for cover in parking_covers(&phi) {
                assert_eq!(cover.standardize(), phi.standardize(), "phi={phi}");
            }
        }
        // On sorted words the moves are exactly the shape-level covers.
        for path in dyck::enumerate(1, 3, 100).unwrap() {
            let sorted = ParkingFunction::new(1, path.code().to_vec()).unwrap();
            let from_words: Vec<Vec<u32>> = parking_covers(&sorted)
                .iter()
                .map(|c| c.values().to_vec())
                .collect();
            let from_shapes: Vec<Vec<u32>> = crate::tamari::upper_covers(&path)
                .iter()
                .map(|c| c.code().to_vec())
                .collect();
            assert_eq!(from_words, from_shapes);
        }
    }

    #[test]
    fn array_encoding_round_trip_and_statistics() {
        let phi = ParkingFunction::new(2, vec![6, 10, 12, 12, 3, 0, 3, 0]).unwrap();
        let arr = phi.array_encoding();
        assert_eq!(arr.top(), &[8, 6, 7, 5, 1, 2, 4, 3]);
        assert_eq!(arr.bottom(), &[0, 2, 1, 3, 2, 0, 0, 2]);
        assert_eq!(arr.area(), 10);
        assert_eq!(phi.area(), 10);
        assert_eq!(arr.decode(), phi);
        assert_eq!(phi.reading_word(), vec![8, 2, 4, 7, 6, 1, 3, 5]);
        assert_eq!(
            phi.descent_set().into_iter().collect::<Vec<_>>(),
            vec![1, 3, 5, 6, 7]
        );
        assert_eq!(phi.theta().parts(), &[1, 2, 2, 1, 1, 1]);

        for phi in enumerate(2, 3, 10_000).unwrap() {
            let arr = phi.array_encoding();
            assert_eq!(arr.decode(), phi);
            assert_eq!(arr.area(), phi.area());
            assert_eq!(arr.dinv(), phi.dinv());
            let rebuilt =
                ArrayEncoding::new(phi.r(), arr.top().to_vec(), arr.bottom().to_vec()).unwrap();
            assert_eq!(rebuilt, arr);
        }
        // Violations of the column condition are rejected.
        assert!(ArrayEncoding::new(2, vec![1, 2], vec![0, 2]).is_err());
        assert!(ArrayEncoding::new(2, vec![2, 1], vec![0, 3]).is_err());
        assert!(ArrayEncoding::new(2, vec![2, 1], vec![1, 0]).is_err());
        assert!(ArrayEncoding::new(2, vec![2, 2], vec![0, 0]).is_err());
    }

    #[test]
    fn dinv_standard_example() {
        let phi = ParkingFunction::new(1, vec![3, 5, 6, 6, 1, 0, 1, 0]).unwrap();
        assert_eq!(phi.dinv(), 8);
        assert_eq!(pf(1, "0").dinv(), 0);
    }

    #[test]
    fn dinv_equal_entries_take_the_minimum() {
        // Two cells on distinct columns, same diagonal, equal entries: the
        // two orientations give r and r-1; the minimum wins.
        let cells = [
            Cell { column: 0, diagonal: 4, entry: 1 },
            Cell { column: 2, diagonal: 4, entry: 1 },
        ];
        assert_eq!(dinv_from_cells(2, &cells), 1);
        let distinct = [
            Cell { column: 0, diagonal: 4, entry: 2 },
            Cell { column: 2, diagonal: 4, entry: 1 },
        ];
        assert_eq!(dinv_from_cells(2, &distinct), 2);
    }

    #[test]
    fn q_pair_counts() {
        assert_eq!(count_q_formula(1, 1), BigUint::from(1u32));
        assert_eq!(count_q_formula(1, 3), BigUint::from(32u32));
        assert_eq!(count_q_formula(2, 3), BigUint::from(189u32));
        for r in 1..=2u32 {
            for n in 1..=4usize {
                let pairs = enumerate_q_pairs(r, n, 100_000).unwrap();
                assert_eq!(
                    BigUint::from(pairs.len()),
                    count_q_formula(r as u64, n as u64),
                    "r={r} n={n}"
                );
                for (alpha, phi) in &pairs {
                    let lattice = crate::tamari::TamariLattice::new(r, n, 100_000).unwrap();
                    let a = lattice.index_of(alpha).unwrap();
                    let b = lattice.index_of(&phi.shape()).unwrap();
                    assert!(lattice.le(a, b));
                }
            }
        }
    }
}
