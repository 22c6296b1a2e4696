use alloc::vec;

use super::{PageRequestSequence, PagingError};

/// Size limits for the exhaustive offline oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleGuard {
    pub max_universe: usize,
    pub max_len: usize,
}

impl OracleGuard {
    /// Cache states are bitmasks over the universe.
    pub const UNIVERSE_CEILING: usize = 24;
}

impl Default for OracleGuard {
    fn default() -> Self {
        OracleGuard { max_universe: 8, max_len: 20 }
    }
}

/// Minimum number of faults over every demand-paging eviction strategy,
/// by dynamic programming over cache states (cold start).
pub fn offline_opt_bruteforce(z: &PageRequestSequence, k: usize, guard: &OracleGuard) -> Result<u64, PagingError> {
    if k == 0 {
        return Err(PagingError::ZeroCacheSize);
    }
    let universe = z.universe() as usize;
    let limit = guard.max_universe.min(OracleGuard::UNIVERSE_CEILING);
    if universe > limit {
        return Err(PagingError::OracleGuard { what: "universe", actual: universe, limit });
    }
    if z.len() > guard.max_len {
        return Err(PagingError::OracleGuard { what: "sequence length", actual: z.len(), limit: guard.max_len });
    }

    const UNREACHED: u32 = u32::MAX;
    let states = 1usize << universe;
    let mut best = vec![UNREACHED; states];
    let mut next = vec![UNREACHED; states];
    best[0] = 0;
    for &page in z.requests() {
        let bit = 1usize << page;
        next.fill(UNREACHED);
        for (mask, &cost) in best.iter().enumerate() {
            if cost == UNREACHED {
                continue;
            }
            if mask & bit != 0 {
                relax(&mut next[mask], cost);
            } else if (mask.count_ones() as usize) < k {
                relax(&mut next[mask | bit], cost + 1);
            } else {
                let mut rest = mask;
                while rest != 0 {
                    let victim = rest & rest.wrapping_neg();
                    relax(&mut next[(mask & !victim) | bit], cost + 1);
                    rest &= rest - 1;
                }
            }
        }
        core::mem::swap(&mut best, &mut next);
    }
    Ok(u64::from(best.iter().copied().min().unwrap_or(0)))
}

fn relax(slot: &mut u32, cost: u32) {
    if cost < *slot {
        *slot = cost;
    }
}
