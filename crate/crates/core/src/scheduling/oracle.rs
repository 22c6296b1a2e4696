//! Exhaustive unit-speed schedules on a time grid.
//!
//! When releases and processing times are multiples of `grid`, it suffices
//! to decide which active job runs in each grid slot: preemption at grid
//! points and no voluntary idling lose nothing for either objective.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::{JobSet, SchedulingError};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceGuard {
    pub max_jobs: usize,
    /// Bound on `(last release + total work) / grid`.
    pub max_slots: usize,
}

impl Default for BruteForceGuard {
    fn default() -> Self {
        BruteForceGuard { max_jobs: 4, max_slots: 24 }
    }
}

struct Grid {
    release: Vec<u32>,
    work: Vec<u32>,
    grid: Rational,
}

fn to_grid(jobs: &JobSet, grid: &Rational, guard: &BruteForceGuard) -> Result<Grid, SchedulingError> {
    if *grid <= rational::zero() {
        return Err(SchedulingError::InvalidParameter { name: "grid", reason: "must be positive" });
    }
    if jobs.len() > guard.max_jobs {
        return Err(SchedulingError::OracleGuard { what: "job count", actual: jobs.len(), limit: guard.max_jobs });
    }
    let units = |q: &Rational| -> Result<u32, SchedulingError> {
        let u = q / grid;
        if !u.is_integer() {
            return Err(SchedulingError::InvalidParameter { name: "grid", reason: "releases and processing times must be multiples" });
        }
        u.to_integer().to_u32().ok_or(SchedulingError::OracleGuard { what: "grid units", actual: usize::MAX, limit: guard.max_slots })
    };
    let release = jobs.jobs().iter().map(|j| units(&j.release)).collect::<Result<Vec<_>, _>>()?;
    let work = jobs.jobs().iter().map(|j| units(&j.processing)).collect::<Result<Vec<_>, _>>()?;
    let slots = release.iter().max().copied().unwrap_or(0) as usize + work.iter().map(|&w| w as usize).sum::<usize>();
    if slots > guard.max_slots {
        return Err(SchedulingError::OracleGuard { what: "grid slots", actual: slots, limit: guard.max_slots });
    }
    Ok(Grid { release, work, grid: grid.clone() })
}

/// Minimizes over every schedule. `slot_cost(slot, remaining, ran, rest)`
/// folds the cost of `slot`, given the remaining work before it and the
/// job run in it, into the optimal cost `rest` of the later slots.
struct Search<'a, F> {
    grid: &'a Grid,
    slot_cost: F,
    memo: BTreeMap<(u32, Vec<u32>), u64>,
}

impl<F: Fn(u32, &[u32], Option<usize>, u64) -> u64> Search<'_, F> {
    fn best(&mut self, slot: u32, remaining: Vec<u32>) -> u64 {
        if remaining.iter().all(|&w| w == 0) {
            return 0;
        }
        if let Some(&v) = self.memo.get(&(slot, remaining.clone())) {
            return v;
        }
        let active: Vec<usize> = (0..remaining.len()).filter(|&i| self.grid.release[i] <= slot && remaining[i] > 0).collect();
        let value = if active.is_empty() {
            let rest = self.best(slot + 1, remaining.clone());
            (self.slot_cost)(slot, &remaining, None, rest)
        } else {
            let mut best = u64::MAX;
            for &i in &active {
                let mut next = remaining.clone();
                next[i] -= 1;
                let rest = self.best(slot + 1, next);
                best = best.min((self.slot_cost)(slot, &remaining, Some(i), rest));
            }
            best
        };
        self.memo.insert((slot, remaining), value);
        value
    }
}

fn search(grid: &Grid, slot_cost: impl Fn(u32, &[u32], Option<usize>, u64) -> u64) -> u64 {
    let mut s = Search { grid, slot_cost, memo: BTreeMap::new() };
    s.best(0, grid.work.clone())
}

/// Least total flow time at unit speed.
pub fn bruteforce_min_flow(jobs: &JobSet, grid: &Rational, guard: &BruteForceGuard) -> Result<Rational, SchedulingError> {
    let g = to_grid(jobs, grid, guard)?;
    let release = g.release.clone();
    let units = search(&g, |slot, remaining, _, rest| {
        let active = (0..remaining.len()).filter(|&i| release[i] <= slot && remaining[i] > 0).count() as u64;
        active + rest
    });
    Ok(Rational::from_integer(units.into()) * &g.grid)
}

/// Least maximum idle time `C_j - r_j - p_j` at unit speed.
pub fn bruteforce_min_max_idle(jobs: &JobSet, grid: &Rational, guard: &BruteForceGuard) -> Result<Rational, SchedulingError> {
    let g = to_grid(jobs, grid, guard)?;
    let (release, work) = (g.release.clone(), g.work.clone());
    let units = search(&g, |slot, remaining, ran, rest| match ran {
        Some(i) if remaining[i] == 1 => u64::from(slot + 1 - release[i] - work[i]).max(rest),
        _ => rest,
    });
    Ok(Rational::from_integer(units.into()) * &g.grid)
}
