//! Fixed-capacity bit sets over `u64` blocks.
//!
//! Order ideals and filters of the lattices in this crate are computed as bit
//! sets indexed by a node's position in the canonical (lexicographic)
//! enumeration; unions over cover relations then reduce to word-wide ORs.

/// A set of indices `0..len` packed into 64-bit blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    blocks: Vec<u64>,
    len: usize,
}

impl BitSet {
    /// The empty set over the universe `0..len`.
    pub fn new(len: usize) -> Self {
        BitSet {
            blocks: vec![0; len.div_ceil(64)],
            len,
        }
    }

    /// Capacity of the universe (not the number of set bits).
    pub fn universe_len(&self) -> usize {
        self.len
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.blocks[i / 64] |= 1u64 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    /// In-place union; both sets must share a universe.
    pub fn union_with(&mut self, other: &BitSet) {
        assert!(self.len == other.len, "bit sets have different universes");
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        assert!(self.len == other.len, "bit sets have different universes");
        BitSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
            len: self.len,
        }
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Iterate set indices in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(bi * 64 + tz)
                }
            })
        })
    }
}
