use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::{PageId, PageRequestSequence, PagingError, PagingSimResult, Policy};

/// Incremental cache for the online policies. Each resident page carries
/// a stamp; the smallest stamp is evicted. LRU refreshes the stamp on every
/// hit, FIFO only sets it on insertion.
#[derive(Debug, Clone)]
pub struct OnlineCache {
    policy: Policy,
    capacity: usize,
    stamp: Vec<Option<u64>>,
    queue: BTreeMap<u64, PageId>,
    clock: u64,
}

impl OnlineCache {
    pub fn new(policy: Policy, capacity: usize, universe: u32) -> Result<Self, PagingError> {
        if !policy.is_online() {
            return Err(PagingError::NotOnline(policy));
        }
        if capacity == 0 {
            return Err(PagingError::ZeroCacheSize);
        }
        Ok(OnlineCache { policy, capacity, stamp: vec![None; universe as usize], queue: BTreeMap::new(), clock: 0 })
    }

    pub fn contains(&self, page: PageId) -> bool {
        self.stamp.get(page as usize).is_some_and(Option::is_some)
    }

    pub fn len(&self) -> usize {
        self.queue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }

    /// Serves one request; returns `true` on a fault.
    pub fn access(&mut self, page: PageId) -> bool {
        let slot = page as usize;
        if slot >= self.stamp.len() {
            self.stamp.resize(slot + 1, None);
        }
        self.clock += 1;
        if let Some(old) = self.stamp[slot] {
            if self.policy == Policy::Lru {
                self.queue.remove(&old);
                self.queue.insert(self.clock, page);
                self.stamp[slot] = Some(self.clock);
            }
            return false;
        }
        if self.queue.len() == self.capacity {
            let (_, victim) = self.queue.pop_first().expect("full cache is nonempty");
            self.stamp[victim as usize] = None;
        }
        self.queue.insert(self.clock, page);
        self.stamp[slot] = Some(self.clock);
        true
    }

    /// Resident pages, ascending.
    pub fn pages(&self) -> Vec<PageId> {
        let mut pages: Vec<PageId> = self.queue.values().copied().collect();
        pages.sort_unstable();
        pages
    }
}

pub fn simulate(policy: Policy, k: usize, z: &PageRequestSequence) -> Result<PagingSimResult, PagingError> {
    if k == 0 {
        return Err(PagingError::ZeroCacheSize);
    }
    match policy {
        Policy::Lru | Policy::Fifo => {
            let mut cache = OnlineCache::new(policy, k, z.universe())?;
            let fault_flags: Vec<bool> = z.requests().iter().map(|&p| cache.access(p)).collect();
            Ok(finish(policy, k, fault_flags, cache.pages()))
        }
        Policy::Fif => Ok(simulate_fif(k, z)),
    }
}

fn finish(policy: Policy, k: usize, fault_flags: Vec<bool>, final_cache: Vec<PageId>) -> PagingSimResult {
    let fault_count = fault_flags.iter().filter(|&&f| f).count() as u64;
    PagingSimResult { policy, cache_size: k, fault_count, fault_flags, final_cache }
}

const NEVER: usize = usize::MAX;

fn simulate_fif(k: usize, z: &PageRequestSequence) -> PagingSimResult {
    let requests = z.requests();
    let mut next_use = vec![NEVER; requests.len()];
    let mut upcoming = vec![NEVER; z.universe() as usize];
    for (i, &p) in requests.iter().enumerate().rev() {
        next_use[i] = upcoming[p as usize];
        upcoming[p as usize] = i;
    }

    // Keyed by (next request index, Reverse(page)): the last entry is the
    // page requested furthest ahead, and among pages never requested again
    // the lowest id.
    let mut resident: BTreeSet<(usize, Reverse<PageId>)> = BTreeSet::new();
    let mut key: Vec<Option<usize>> = vec![None; z.universe() as usize];
    let mut fault_flags = Vec::with_capacity(requests.len());
    for (i, &p) in requests.iter().enumerate() {
        let slot = p as usize;
        let fault = match key[slot] {
            Some(old) => {
                resident.remove(&(old, Reverse(p)));
                false
            }
            None => {
                if resident.len() == k {
                    let (_, Reverse(victim)) = resident.pop_last().expect("full cache is nonempty");
                    key[victim as usize] = None;
                }
                true
            }
        };
        resident.insert((next_use[i], Reverse(p)));
        key[slot] = Some(next_use[i]);
        fault_flags.push(fault);
    }
    let mut final_cache: Vec<PageId> = resident.iter().map(|&(_, Reverse(p))| p).collect();
    final_cache.sort_unstable();
    finish(Policy::Fif, k, fault_flags, final_cache)
}

/// Fault counts for cache sizes `1..=max_k` in one pass.
///
/// LRU and FIF are stack algorithms, so LRU is computed from reuse
/// distances in an LRU stack; FIFO and FIF fall back to one simulation per
/// size.
pub fn fault_curve(policy: Policy, z: &PageRequestSequence, max_k: usize) -> Result<Vec<u64>, PagingError> {
    if max_k == 0 {
        return Err(PagingError::ZeroCacheSize);
    }
    if policy != Policy::Lru {
        return (1..=max_k).map(|k| simulate(policy, k, z).map(|r| r.fault_count)).collect();
    }
    let mut stack: Vec<PageId> = Vec::new();
    let mut cold = 0u64;
    // distance_hist[d] counts re-references found at stack depth d
    let mut distance_hist = vec![0u64; max_k];
    for &p in z.requests() {
        match stack.iter().position(|&q| q == p) {
            Some(depth) => {
                if depth < max_k {
                    distance_hist[depth] += 1;
                }
                stack.remove(depth);
            }
            None => cold += 1,
        }
        stack.insert(0, p);
    }
    let reuses: u64 = distance_hist.iter().sum();
    let far = z.len() as u64 - cold - reuses;
    let mut curve = Vec::with_capacity(max_k);
    let mut hits = 0u64;
    for k in 1..=max_k {
        hits += distance_hist[k - 1];
        curve.push(cold + far + (reuses - hits));
    }
    Ok(curve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paging::gen_cyclic_adversary;

    fn seq(requests: &[PageId]) -> PageRequestSequence {
        PageRequestSequence::from_requests(requests.to_vec())
    }

    #[test]
    fn lru_faults_on_every_request_of_a_three_page_cycle() {
        let z = seq(&[1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3]);
        let r = simulate(Policy::Lru, 2, &z).unwrap();
        assert_eq!(r.fault_count, 12);
        assert!(r.fault_flags.iter().all(|&f| f));
        assert_eq!(r.final_cache, vec![2, 3]);
    }

    #[test]
    fn single_page_costs_one_cold_miss() {
        let z = seq(&[1, 1, 1, 1]);
        for policy in Policy::ALL {
            assert_eq!(simulate(policy, 1, &z).unwrap().fault_count, 1, "{policy}");
        }
    }

    #[test]
    fn fif_beats_lru_on_small_mixed_sequence() {
        let z = seq(&[1, 2, 3, 2, 1, 4, 2]);
        assert_eq!(simulate(Policy::Fif, 2, &z).unwrap().fault_count, 5);
        assert_eq!(simulate(Policy::Lru, 2, &z).unwrap().fault_count, 6);
    }

    #[test]
    fn fif_evicts_lowest_page_among_never_requested_again() {
        // cache {0, 1} after two requests; neither is requested again
        let z = seq(&[0, 1, 2]);
        let r = simulate(Policy::Fif, 2, &z).unwrap();
        assert_eq!(r.final_cache, vec![1, 2]);
    }

    #[test]
    fn fifo_ignores_hits_when_choosing_a_victim() {
        let z = seq(&[0, 1, 0, 2, 0]);
        // FIFO evicts 0 (oldest insertion) then refaults on it
        assert_eq!(simulate(Policy::Fifo, 2, &z).unwrap().fault_count, 4);
        assert_eq!(simulate(Policy::Lru, 2, &z).unwrap().fault_count, 3);
    }

    #[test]
    fn cyclic_adversary_lru_versus_fif() {
        let z = gen_cyclic_adversary(2, 600).unwrap();
        assert_eq!(simulate(Policy::Lru, 2, &z).unwrap().fault_count, 600);
        assert!(simulate(Policy::Fif, 2, &z).unwrap().fault_count <= 1 + 600 / 2);
    }

    #[test]
    fn zero_cache_is_rejected() {
        assert_eq!(simulate(Policy::Lru, 0, &seq(&[1])).unwrap_err(), PagingError::ZeroCacheSize);
    }

    #[test]
    fn lru_stack_curve_matches_per_size_simulation() {
        let z = seq(&[0, 1, 2, 0, 3, 1, 4, 0, 2, 2, 5, 1, 0, 3]);
        let curve = fault_curve(Policy::Lru, &z, 7).unwrap();
        for (i, &faults) in curve.iter().enumerate() {
            assert_eq!(faults, simulate(Policy::Lru, i + 1, &z).unwrap().fault_count);
        }
    }
}
