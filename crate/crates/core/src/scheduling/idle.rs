//! Minimum achievable maximum idle time `max_j (C_j - r_j - p_j / s)`.
//!
//! A budget `T` is achievable iff every job meets the deadline
//! `d_j = r_j + p_j / s + T`, and preemptive earliest-deadline-first meets
//! all deadlines whenever any schedule does. Feasibility is monotone in
//! `T`, and the least feasible budget makes some window `[a, d_k]` exactly
//! full, so it is one of `W(a, k) / s - (r_k + p_k / s - a)` where `a` is a
//! release time and `W(a, k) > 0` the work released at or after `a` with
//! deadline at most `d_k`. Binary search over these candidates is exact.

use alloc::vec::Vec;

use super::{check_speed, JobSet, SchedulingError};
use crate::rational::{self, Rational};

/// Whether preemptive EDF (ties to the lowest id) completes every job by
/// its deadline. `deadlines` is aligned with `jobs.jobs()`.
pub fn edf_feasible(jobs: &JobSet, speed: &Rational, deadlines: &[Rational]) -> Result<bool, SchedulingError> {
    check_speed(speed)?;
    if deadlines.len() != jobs.len() {
        return Err(SchedulingError::InvalidParameter { name: "deadlines", reason: "one deadline per job required" });
    }
    let list = jobs.jobs();
    let mut remaining: Vec<Rational> = list.iter().map(|j| j.processing.clone()).collect();
    let mut released = 0;
    let mut t = list.first().map_or_else(rational::zero, |j| j.release.clone());
    let zero = rational::zero();
    loop {
        while released < list.len() && list[released].release <= t {
            released += 1;
        }
        let pick = (0..released)
            .filter(|&i| remaining[i] > zero)
            .min_by(|&a, &b| deadlines[a].cmp(&deadlines[b]).then(list[a].id.cmp(&list[b].id)));
        let next_release = list.get(released).map(|j| &j.release);
        let Some(i) = pick else {
            match next_release {
                Some(r) => {
                    t = r.clone();
                    continue;
                }
                None => return Ok(true),
            }
        };
        let finish = &t + &remaining[i] / speed;
        match next_release {
            Some(r) if *r < finish => {
                remaining[i] -= (r - &t) * speed;
                t = r.clone();
            }
            _ => {
                if finish > deadlines[i] {
                    return Ok(false);
                }
                remaining[i] = zero.clone();
                t = finish;
            }
        }
    }
}

fn feasible_with_budget(jobs: &JobSet, speed: &Rational, budget: &Rational) -> Result<bool, SchedulingError> {
    let deadlines: Vec<Rational> = jobs.jobs().iter().map(|j| &j.release + &j.processing / speed + budget).collect();
    edf_feasible(jobs, speed, &deadlines)
}

/// Least maximum idle time over all schedules at `speed`.
pub fn opt_max_idle(jobs: &JobSet, speed: &Rational) -> Result<Rational, SchedulingError> {
    check_speed(speed)?;
    let list = jobs.jobs();
    let ends: Vec<Rational> = list.iter().map(|j| &j.release + &j.processing / speed).collect();
    let zero = rational::zero();
    let mut candidates = alloc::vec![zero.clone()];
    for a in list.iter().map(|j| &j.release) {
        for e_k in &ends {
            let work: Rational =
                list.iter().zip(&ends).filter(|(j, e)| j.release >= *a && *e <= e_k).map(|(j, _)| j.processing.clone()).sum();
            if work == zero {
                continue;
            }
            let t = work / speed - (e_k - a);
            if t > zero {
                candidates.push(t);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    // invariant: candidates[hi] is feasible
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    if feasible_with_budget(jobs, speed, &candidates[0])? {
        return Ok(candidates.swap_remove(0));
    }
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if feasible_with_budget(jobs, speed, &candidates[mid])? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(candidates.swap_remove(hi))
}
