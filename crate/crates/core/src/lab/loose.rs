//! Classification of cache sizes by whether LRU is competitive, has a low
//! fault rate, or neither.
//!
//! With `b = ceil(δn / log2(1/ε))`, size `k` is good when
//! `LRU(k + b) >= LRU(k) / 2`. Good sizes are competitive with ratio
//! `2(k + b)/(b + 1)` and additive slack `2(k + b)`, twice the slack of the
//! resource augmentation check at cache `k + b`. A bad size preceded by at
//! least `δn` bad sizes is expected to have at most `ε|z|` faults. The
//! remaining bad sizes, at most `ceil(δn)` of them, are exempt.

use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use super::LabError;
use crate::paging::{fault_curve, PageRequestSequence, Policy};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Category {
    Competitive,
    LowFaultRate,
    Exempt,
}

impl Category {
    pub fn name(self) -> &'static str {
        match self {
            Category::Competitive => "competitive",
            Category::LowFaultRate => "low_fault_rate",
            Category::Exempt => "exempt",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LooseEntry {
    pub k: usize,
    pub category: Category,
    pub lru: u64,
    pub lru_plus_b: u64,
    pub fif: u64,
    /// Right-hand side of the category's inequality; `None` when exempt.
    pub bound: Option<Rational>,
    pub slack: Rational,
    /// `lru <= bound + slack`; true when exempt.
    pub holds: bool,
    /// The additive slack is at least a tenth of the benchmark's faults.
    pub slack_material: bool,
}

impl LooseEntry {
    /// Recomputes `holds` from the stored fields.
    pub fn recheck(&self) -> bool {
        match &self.bound {
            Some(bound) => rational::from_usize(self.lru as usize) <= bound + &self.slack,
            None => self.category == Category::Exempt,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LooseClassification {
    pub eps: Rational,
    pub delta: Rational,
    pub n: usize,
    pub b: usize,
    pub len: usize,
    /// `ceil(δn)`.
    pub exempt_limit: usize,
    /// Cache sizes `1..=n` in order.
    pub entries: Vec<LooseEntry>,
}

impl LooseClassification {
    pub fn exempt_count(&self) -> usize {
        self.entries.iter().filter(|e| e.category == Category::Exempt).count()
    }

    /// Cache sizes whose category inequality fails.
    pub fn violations(&self) -> Vec<usize> {
        self.entries.iter().filter(|e| !e.holds).map(|e| e.k).collect()
    }

    /// Exempt sizes within the limit and every stored inequality true.
    pub fn invariants_hold(&self) -> bool {
        self.exempt_count() <= self.exempt_limit && self.entries.iter().all(|e| e.holds && e.recheck() == e.holds)
    }
}

fn unit_interval(q: &Rational) -> bool {
    *q > rational::zero() && *q < rational::one()
}

pub fn loose_classify(z: &PageRequestSequence, n: usize, eps: &Rational, delta: &Rational) -> Result<LooseClassification, LabError> {
    if !unit_interval(eps) {
        return Err(LabError::InvalidParameter { name: "eps", reason: "must lie in (0, 1)" });
    }
    if !unit_interval(delta) {
        return Err(LabError::InvalidParameter { name: "delta", reason: "must lie in (0, 1)" });
    }
    if n == 0 {
        return Err(LabError::InvalidParameter { name: "n", reason: "must be positive" });
    }
    let delta_n = delta * rational::from_usize(n);
    let log_inverse = libm::log2(1.0 / rational::to_f64(eps));
    let b = libm::ceil(rational::to_f64(&delta_n) / log_inverse).to_usize().unwrap_or(0);
    if b == 0 {
        return Err(LabError::InvalidParameter { name: "b", reason: "ceil(delta n / log2(1/eps)) must be positive" });
    }
    let exempt_limit = rational::ceil_to_usize(&delta_n).expect("delta n is positive");
    let lru = fault_curve(Policy::Lru, z, n + b)?;
    let fif = fault_curve(Policy::Fif, z, n)?;
    let ratio_factor = |k: usize| Rational::new((2 * (k + b)).into(), (b + 1).into());
    let fault_budget = eps * rational::from_usize(z.len());

    let mut entries = Vec::with_capacity(n);
    let mut bad_before = 0usize;
    for k in 1..=n {
        let (at_k, at_kb, opt) = (lru[k - 1], lru[k + b - 1], fif[k - 1]);
        let good = 2 * at_kb >= at_k;
        let category = if good {
            Category::Competitive
        } else if rational::from_usize(bad_before) >= delta_n {
            Category::LowFaultRate
        } else {
            Category::Exempt
        };
        if !good {
            bad_before += 1;
        }
        let (bound, slack) = match category {
            Category::Competitive => (Some(ratio_factor(k) * rational::from_usize(opt as usize)), rational::from_usize(2 * (k + b))),
            Category::LowFaultRate => (Some(fault_budget.clone()), rational::zero()),
            Category::Exempt => (None, rational::zero()),
        };
        let mut entry = LooseEntry {
            k,
            category,
            lru: at_k,
            lru_plus_b: at_kb,
            fif: opt,
            bound,
            slack,
            holds: true,
            slack_material: category == Category::Competitive && opt < 10 * k as u64,
        };
        entry.holds = entry.recheck();
        entries.push(entry);
    }
    Ok(LooseClassification { eps: eps.clone(), delta: delta.clone(), n, b, len: z.len(), exempt_limit, entries })
}
