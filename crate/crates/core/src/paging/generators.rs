use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{OnlineCache, PageId, PageRequestSequence, PagingError, Policy};

/// `0, 1, ..., k, 0, 1, ...` over `k + 1` pages.
pub fn gen_cyclic_adversary(k: usize, length: usize) -> Result<PageRequestSequence, PagingError> {
    if k == 0 {
        return Err(PagingError::ZeroCacheSize);
    }
    if length == 0 {
        return Err(PagingError::InvalidParameter { name: "length", reason: "must be at least 1" });
    }
    let pool = k + 1;
    let requests = (0..length).map(|i| (i % pool) as PageId).collect();
    PageRequestSequence::new(requests, pool as u32)
}

/// Runs an online policy against a pool of `k + 1` pages and always
/// requests the lowest page it does not hold, so every request faults.
pub fn gen_adaptive_adversary(policy: Policy, k: usize, length: usize) -> Result<PageRequestSequence, PagingError> {
    if length == 0 {
        return Err(PagingError::InvalidParameter { name: "length", reason: "must be at least 1" });
    }
    let pool = (k + 1) as u32;
    let mut cache = OnlineCache::new(policy, k, pool)?;
    let mut requests = Vec::with_capacity(length);
    for _ in 0..length {
        let page = (0..pool).find(|&p| !cache.contains(p)).expect("k slots cannot hold k + 1 pages");
        cache.access(page);
        requests.push(page);
    }
    PageRequestSequence::new(requests, pool)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalityParams {
    pub universe: u32,
    pub length: usize,
    /// Probability of re-requesting a recently used page.
    pub locality: f64,
    /// Number of most recent distinct pages eligible for re-requests.
    pub window: usize,
}

impl LocalityParams {
    pub const DEFAULT_WINDOW: usize = 8;

    pub fn new(universe: u32, length: usize, locality: f64) -> Self {
        LocalityParams { universe, length, locality, window: Self::DEFAULT_WINDOW }
    }
}

/// Seeded workload with tunable locality of reference: with probability
/// `locality` the next request is drawn uniformly from the `window` most
/// recently requested distinct pages, otherwise uniformly from the universe.
pub fn gen_locality_workload(params: &LocalityParams, seed: u64) -> Result<PageRequestSequence, PagingError> {
    if params.universe == 0 {
        return Err(PagingError::EmptyUniverse);
    }
    if !(0.0..=1.0).contains(&params.locality) {
        return Err(PagingError::InvalidParameter { name: "locality", reason: "must lie in [0, 1]" });
    }
    if params.window == 0 {
        return Err(PagingError::InvalidParameter { name: "window", reason: "must be at least 1" });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut recent: Vec<PageId> = Vec::with_capacity(params.window + 1);
    let mut requests = Vec::with_capacity(params.length);
    for _ in 0..params.length {
        let local = rng.gen_bool(params.locality);
        let page = if local && !recent.is_empty() { recent[rng.gen_range(0..recent.len())] } else { rng.gen_range(0..params.universe) };
        if let Some(pos) = recent.iter().position(|&q| q == page) {
            recent.remove(pos);
        }
        recent.insert(0, page);
        recent.truncate(params.window);
        requests.push(page);
    }
    PageRequestSequence::new(requests, params.universe)
}
