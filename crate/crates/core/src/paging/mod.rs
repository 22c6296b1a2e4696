//! Demand paging.
//!
//! The cache starts empty, so compulsory misses count as faults. A request
//! for a resident page never changes the cache contents; a request for an
//! absent page is a fault and, when the cache is full, evicts exactly one
//! page chosen by the policy.

mod blocks;
mod generators;
mod oracle;
mod sim;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use blocks::{decompose_blocks, BlockDecomposition};
pub use generators::{gen_adaptive_adversary, gen_cyclic_adversary, gen_locality_workload, LocalityParams};
pub use oracle::{offline_opt_bruteforce, OracleGuard};
pub use sim::{fault_curve, simulate, OnlineCache};

/// Dense page identifier in `[0, universe)`.
pub type PageId = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PagingError {
    #[error("cache size must be at least 1")]
    ZeroCacheSize,
    #[error("page universe must contain at least one page")]
    EmptyUniverse,
    #[error("request {index} names page {page}, outside the universe [0, {universe})")]
    PageOutOfRange { index: usize, page: PageId, universe: u32 },
    #[error("{0} is not an online policy")]
    NotOnline(Policy),
    #[error("oracle guard exceeded: {what} is {actual}, limit {limit}")]
    OracleGuard { what: &'static str, actual: usize, limit: usize },
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: &'static str },
}

/// A request stream over a universe of `N` pages.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PageRequestSequence {
    requests: Vec<PageId>,
    universe: u32,
}

impl PageRequestSequence {
    pub fn new(requests: Vec<PageId>, universe: u32) -> Result<Self, PagingError> {
        if universe == 0 {
            return Err(PagingError::EmptyUniverse);
        }
        if let Some((index, &page)) = requests.iter().enumerate().find(|(_, &p)| p >= universe) {
            return Err(PagingError::PageOutOfRange { index, page, universe });
        }
        Ok(PageRequestSequence { requests, universe })
    }

    /// Builds a sequence whose universe is one past the largest page.
    pub fn from_requests(requests: Vec<PageId>) -> Self {
        let universe = requests.iter().max().map_or(1, |&p| p + 1);
        PageRequestSequence { requests, universe }
    }

    /// Maps arbitrary tokens to dense ids in order of first appearance.
    /// Returns the sequence and the token for each id.
    pub fn from_tokens<I, S>(tokens: I) -> (Self, Vec<String>)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut ids: BTreeMap<String, PageId> = BTreeMap::new();
        let mut names = Vec::new();
        let mut requests = Vec::new();
        for token in tokens {
            let token = token.as_ref();
            let id = match ids.get(token) {
                Some(&id) => id,
                None => {
                    let id = names.len() as PageId;
                    ids.insert(String::from(token), id);
                    names.push(String::from(token));
                    id
                }
            };
            requests.push(id);
        }
        let universe = (names.len() as u32).max(1);
        (PageRequestSequence { requests, universe }, names)
    }

    pub fn requests(&self) -> &[PageId] {
        &self.requests
    }

    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.requests.len()
    }

    pub fn is_empty(&self) -> bool {
        self.requests.is_empty()
    }

    pub fn distinct_pages(&self) -> usize {
        let mut seen = alloc::vec![false; self.universe as usize];
        self.requests.iter().filter(|&&p| !core::mem::replace(&mut seen[p as usize], true)).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Policy {
    /// Least recently used.
    Lru,
    /// First in, first out.
    Fifo,
    /// Furthest in the future (offline, needs the whole sequence).
    Fif,
}

impl Policy {
    pub const ALL: [Policy; 3] = [Policy::Lru, Policy::Fifo, Policy::Fif];

    pub fn name(self) -> &'static str {
        match self {
            Policy::Lru => "lru",
            Policy::Fifo => "fifo",
            Policy::Fif => "fif",
        }
    }

    pub fn is_online(self) -> bool {
        !matches!(self, Policy::Fif)
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Policy {
    type Err = PagingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lru" => Ok(Policy::Lru),
            "fifo" => Ok(Policy::Fifo),
            "fif" | "opt" | "belady" => Ok(Policy::Fif),
            _ => Err(PagingError::InvalidParameter { name: "policy", reason: "expected lru, fifo or fif" }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PagingSimResult {
    pub policy: Policy,
    pub cache_size: usize,
    pub fault_count: u64,
    /// One flag per request.
    pub fault_flags: Vec<bool>,
    /// Resident pages after the last request, ascending.
    pub final_cache: Vec<PageId>,
}

impl PagingSimResult {
    pub fn len(&self) -> usize {
        self.fault_flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fault_flags.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_out_of_range_requests() {
        let err = PageRequestSequence::new(vec![0, 3, 1], 3).unwrap_err();
        assert_eq!(err, PagingError::PageOutOfRange { index: 1, page: 3, universe: 3 });
        assert_eq!(PageRequestSequence::new(vec![], 0).unwrap_err(), PagingError::EmptyUniverse);
        assert!(PageRequestSequence::new(vec![], 1).unwrap().is_empty());
    }

    #[test]
    fn token_shim_assigns_ids_in_first_seen_order() {
        let (z, names) = PageRequestSequence::from_tokens(["b", "a", "b", "c"]);
        assert_eq!(z.requests(), &[0, 1, 0, 2]);
        assert_eq!(z.universe(), 3);
        assert_eq!(names, vec!["b", "a", "c"]);
        assert_eq!(z.distinct_pages(), 3);
    }

    #[test]
    fn policy_parses_case_insensitively() {
        assert_eq!("LRU".parse::<Policy>().unwrap(), Policy::Lru);
        assert_eq!("belady".parse::<Policy>().unwrap(), Policy::Fif);
        assert!("random".parse::<Policy>().is_err());
    }
}
