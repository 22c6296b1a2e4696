use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::{PageRequestSequence, PagingError};

/// Greedy partition of a sequence into maximal segments with at most
/// `cache_size` distinct pages each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub cache_size: usize,
    pub blocks: Vec<Range<usize>>,
}

impl BlockDecomposition {
    /// Number of blocks, `b`.
    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

pub fn decompose_blocks(z: &PageRequestSequence, k: usize) -> Result<BlockDecomposition, PagingError> {
    if k == 0 {
        return Err(PagingError::ZeroCacheSize);
    }
    // seen[p] == block number + 1 when p already appeared in the open block
    let mut seen = vec![0usize; z.universe() as usize];
    let mut blocks = Vec::new();
    let mut start = 0;
    let mut distinct = 0;
    for (i, &p) in z.requests().iter().enumerate() {
        let tag = blocks.len() + 1;
        if seen[p as usize] == tag {
            continue;
        }
        if distinct == k {
            blocks.push(start..i);
            start = i;
            distinct = 0;
        }
        seen[p as usize] = blocks.len() + 1;
        distinct += 1;
    }
    if start < z.len() {
        blocks.push(start..z.len());
    }
    Ok(BlockDecomposition { cache_size: k, blocks })
}
