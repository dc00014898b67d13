//! Range-minimum queries over a `u32` array.
//!
//! # Algorithm
//!
//! The array is cut into blocks of [`BLOCK`] entries. A sparse table over
//! the block minima answers the block-aligned middle of a query in O(1);
//! the two partial blocks at the ends are scanned directly (at most
//! `2·BLOCK` entries).
//!
//! # Design Notes
//!
//! A full sparse table over every entry would need `n log n` words; at
//! the text sizes targeted here the blocked layout keeps memory linear with
//! a small constant-time scan.

/// Entries per block.
pub const BLOCK: usize = 32;

/// Blocked sparse-table range-minimum structure.
#[derive(Clone, Debug)]
pub struct BlockRmq {
    values: Vec<u32>,
    /// `table[j][b]` = minimum of blocks `b .. b + 2^j`.
    table: Vec<Vec<u32>>,
}

impl BlockRmq {
    /// Builds the structure over `values`.
    pub fn new(values: Vec<u32>) -> Self {
        let nb = values.len().div_ceil(BLOCK);
        let mut level0 = Vec::with_capacity(nb);
        for chunk in values.chunks(BLOCK) {
            level0.push(*chunk.iter().min().expect("non-empty chunk"));
        }
        let mut table = vec![level0];
        let mut span = 1;
        while 2 * span <= nb {
            let prev = table.last().expect("level exists");
            let next: Vec<u32> = (0..=nb - 2 * span).map(|b| prev[b].min(prev[b + span])).collect();
            table.push(next);
            span *= 2;
        }
        BlockRmq { values, table }
    }

    /// Minimum of `values[l..=r]`; requires `l <= r < len`.
    pub fn min(&self, l: usize, r: usize) -> u32 {
        debug_assert!(l <= r && r < self.values.len());
        let (bl, br) = (l / BLOCK, r / BLOCK);
        if br <= bl + 1 {
            return *self.values[l..=r].iter().min().expect("non-empty range");
        }
        let left = *self.values[l..(bl + 1) * BLOCK].iter().min().expect("non-empty");
        let right = *self.values[br * BLOCK..=r].iter().min().expect("non-empty");
        let (a, b) = (bl + 1, br - 1);
        let j = usize::BITS as usize - 1 - (b - a + 1).leading_zeros() as usize;
        let mid = self.table[j][a].min(self.table[j][b + 1 - (1 << j)]);
        left.min(right).min(mid)
    }
}
