//! Partition types of the ground set.

use crate::mask::check_ground_size;
use crate::{Error, Result, SetMask};
use alloc::vec;
use alloc::vec::Vec;

/// The type `(alpha_1, .., alpha_l)` of a set partition: `alpha[i-1]` blocks
/// of cardinality `i`, with `sum i * alpha_i = n` and no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionType {
    alpha: Vec<u32>,
}

impl PartitionType {
    pub fn new(alpha: Vec<u32>) -> Result<PartitionType> {
        if alpha.is_empty() {
            return Err(Error::InvalidPartitionType {
                reason: "empty type vector",
            });
        }
        if *alpha.last().unwrap() == 0 {
            return Err(Error::InvalidPartitionType {
                reason: "trailing zero count",
            });
        }
        let ty = PartitionType { alpha };
        check_ground_size(ty.ground_size())?;
        Ok(ty)
    }

    /// Block counts, indexed by block cardinality minus one.
    pub fn counts(&self) -> &[u32] {
        &self.alpha
    }

    /// `n = sum i * alpha_i`.
    pub fn ground_size(&self) -> u32 {
        self.alpha
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u32 + 1) * a)
            .sum()
    }

    /// Total number of blocks.
    pub fn block_count(&self) -> u32 {
        self.alpha.iter().sum()
    }

    /// Largest block cardinality.
    pub fn max_part(&self) -> u32 {
        self.alpha.len() as u32
    }

    /// The canonical blocks realizing this type: blocks of increasing
    /// cardinality over consecutive elements.
    pub fn canonical_blocks(&self) -> Vec<SetMask> {
        let mut blocks = Vec::with_capacity(self.block_count() as usize);
        let mut next = 0u32;
        for (i, &count) in self.alpha.iter().enumerate() {
            let size = i as u32 + 1;
            for _ in 0..count {
                let mask = ((1u32 << size) - 1) << next;
                blocks.push(SetMask::from_bits(mask));
                next += size;
            }
        }
        blocks
    }

    /// The type of a given block family (blocks are not checked for
    /// disjointness here).
    pub fn of_blocks(blocks: &[SetMask]) -> Result<PartitionType> {
        let max = blocks.iter().map(|b| b.card()).max().unwrap_or(0) as usize;
        if max == 0 {
            return Err(Error::InvalidPartitionType {
                reason: "no nonempty blocks",
            });
        }
        let mut alpha = vec![0u32; max];
        for b in blocks {
            alpha[b.card() as usize - 1] += 1;
        }
        PartitionType::new(alpha)
    }
}

/// All partition types of `n`, in deterministic order.
pub fn partition_types_of(n: u32) -> Vec<PartitionType> {
    fn rec(remaining: u32, max_part: u32, parts: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(parts.clone());
            return;
        }
        let top = max_part.min(remaining);
        for p in (1..=top).rev() {
            parts.push(p);
            rec(remaining - p, p, parts, out);
            parts.pop();
        }
    }

    let mut raw = Vec::new();
    rec(n, n, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|parts| {
            let max = *parts.iter().max().unwrap() as usize;
            let mut alpha = vec![0u32; max];
            for p in parts {
                alpha[p as usize - 1] += 1;
            }
            PartitionType::new(alpha).expect("partition of n within cap")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_invariants() {
        let ty = PartitionType::new(vec![1, 2]).unwrap();
        assert_eq!(ty.ground_size(), 5);
        assert_eq!(ty.block_count(), 3);
        assert!(PartitionType::new(vec![1, 0]).is_err());
        assert!(PartitionType::new(vec![]).is_err());
    }

    #[test]
    fn canonical_blocks_partition_the_ground_set() {
        let ty = PartitionType::new(vec![1, 2]).unwrap();
        let blocks = ty.canonical_blocks();
        assert_eq!(blocks.len(), 3);
        let mut union = SetMask::EMPTY;
        let mut total = 0;
        for b in &blocks {
            assert!(union.inter(*b).is_empty());
            union = union.union(*b);
            total += b.card();
        }
        assert_eq!(total, 5);
        assert_eq!(union, SetMask::full(5));
    }

    #[test]
    fn partition_counts_match_the_classical_table() {
        let expected = [1usize, 2, 3, 5, 7, 11, 15, 22, 30];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(partition_types_of(i as u32 + 1).len(), count);
        }
    }
}
