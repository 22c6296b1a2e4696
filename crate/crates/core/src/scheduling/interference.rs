//! Interference sets of an SETF timeline.
//!
//! Job `l` interferes with job `j` if, at some time before `t`, `j` is
//! active and `l` is processed. `I_j` is the closure of `{j}` under this
//! relation. For jobs active at a finite `t` three structural facts are
//! checked: the lifetimes `[r_l, min(C_l, t)]` of `I_j` cover exactly
//! `[s_j, t]` with `s_j` the earliest release in `I_j` (1); every job
//! processed inside `[s_j, t]` belongs to `I_j` (2); and no member has
//! received more work than `j` by time `t` (3).

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::{JobId, SchedulingError, Timeline};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum TimePoint {
    Finite(Rational),
    Infinity,
}

impl TimePoint {
    fn after(&self, s: &Rational) -> bool {
        match self {
            TimePoint::Finite(t) => s < t,
            TimePoint::Infinity => true,
        }
    }
}

impl fmt::Display for TimePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimePoint::Finite(t) => f.write_str(&rational::format(t)),
            TimePoint::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterferenceSet {
    pub job: JobId,
    pub members: BTreeSet<JobId>,
    /// Earliest release among the members.
    pub start: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterferenceViolation {
    /// 1, 2 or 3, as in the module documentation.
    pub property: u8,
    pub job: JobId,
    pub detail: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterferenceReport {
    pub t: TimePoint,
    /// One set per job active at `t`, or per job when `t` is infinite.
    pub sets: Vec<InterferenceSet>,
    pub violations: Vec<InterferenceViolation>,
}

impl InterferenceReport {
    pub fn set_of(&self, job: JobId) -> Option<&InterferenceSet> {
        self.sets.iter().find(|s| s.job == job)
    }
}

pub fn interference_sets(tl: &Timeline, t: &TimePoint) -> Result<InterferenceReport, SchedulingError> {
    if let TimePoint::Finite(t) = t {
        if *t < rational::zero() {
            return Err(SchedulingError::InvalidParameter { name: "t", reason: "must be nonnegative" });
        }
        let horizon = tl.horizon();
        if *t > horizon {
            return Err(SchedulingError::BeyondHorizon { t: Box::new(t.clone()), horizon: Box::new(horizon) });
        }
    }
    let jobs = tl.jobs().jobs();
    let completions = tl.completions();
    // per interval before t: positions of the jobs active during it and of
    // the jobs processed in it
    let windows: Vec<(Vec<usize>, Vec<usize>)> = tl
        .intervals()
        .iter()
        .take_while(|i| t.after(&i.start))
        .map(|i| {
            let active = (0..jobs.len()).filter(|&x| jobs[x].release <= i.start && i.start < completions[x]).collect();
            let processed = i.rates.iter().map(|(id, _)| tl.jobs().index_of(*id).expect("validated job id")).collect();
            (active, processed)
        })
        .collect();

    let roots: Vec<usize> = match t {
        TimePoint::Finite(t) => (0..jobs.len()).filter(|&x| jobs[x].release <= *t && *t < completions[x]).collect(),
        TimePoint::Infinity => (0..jobs.len()).collect(),
    };
    let work = match t {
        TimePoint::Finite(t) => tl.work_by(t),
        TimePoint::Infinity => jobs.iter().map(|j| j.processing.clone()).collect(),
    };

    let mut sets = Vec::with_capacity(roots.len());
    let mut violations = Vec::new();
    for &root in &roots {
        let mut member = alloc::vec![false; jobs.len()];
        member[root] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for (active, processed) in &windows {
                if active.iter().any(|&x| member[x]) {
                    for &l in processed {
                        if !member[l] {
                            member[l] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        let positions: Vec<usize> = (0..jobs.len()).filter(|&x| member[x]).collect();
        let start = positions.iter().map(|&x| jobs[x].release.clone()).min().expect("root is a member");
        let id = jobs[root].id;

        if let TimePoint::Finite(t) = t {
            let mut lifetimes: Vec<(Rational, Rational)> =
                positions.iter().map(|&x| (jobs[x].release.clone(), completions[x].clone().min(t.clone()))).collect();
            lifetimes.sort();
            let mut reach = start.clone();
            let mut gap = false;
            for (a, b) in lifetimes {
                if a > reach {
                    gap = true;
                }
                reach = reach.max(b);
            }
            if gap || reach != *t {
                violations.push(InterferenceViolation { property: 1, job: id, detail: "member lifetimes do not cover [s_j, t]" });
            }
            let outsider = tl
                .intervals()
                .iter()
                .filter(|i| i.start >= start && i.start < *t)
                .flat_map(|i| i.rates.iter())
                .any(|(l, _)| !member[tl.jobs().index_of(*l).expect("validated job id")]);
            if outsider {
                violations.push(InterferenceViolation { property: 2, job: id, detail: "a job processed in [s_j, t] is not a member" });
            }
            if positions.iter().any(|&x| work[x] > work[root]) {
                violations.push(InterferenceViolation { property: 3, job: id, detail: "a member has more elapsed work than j" });
            }
        }
        let members = positions.iter().map(|&x| jobs[x].id).collect();
        sets.push(InterferenceSet { job: id, members, start });
    }
    Ok(InterferenceReport { t: t.clone(), sets, violations })
}
