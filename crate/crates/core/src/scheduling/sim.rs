use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{check_speed, Interval, JobId, JobSet, SchedulingError, Timeline};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheduler {
    /// Shortest remaining processing time, ties to the lowest id.
    Srpt,
    /// Shortest elapsed time first, ties share the machine equally.
    Setf,
}

impl Scheduler {
    pub const ALL: [Scheduler; 2] = [Scheduler::Srpt, Scheduler::Setf];

    pub fn name(self) -> &'static str {
        match self {
            Scheduler::Srpt => "srpt",
            Scheduler::Setf => "setf",
        }
    }
}

impl fmt::Display for Scheduler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheduler {
    type Err = SchedulingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "srpt" => Ok(Scheduler::Srpt),
            "setf" | "las" | "fb" => Ok(Scheduler::Setf),
            _ => Err(SchedulingError::InvalidParameter { name: "scheduler", reason: "expected srpt or setf" }),
        }
    }
}

pub fn simulate(scheduler: Scheduler, jobs: &JobSet, speed: &Rational) -> Result<Timeline, SchedulingError> {
    match scheduler {
        Scheduler::Srpt => simulate_srpt(jobs, speed),
        Scheduler::Setf => simulate_setf(jobs, speed),
    }
}

/// Event loop shared by both schedulers. `pick` receives the active job
/// positions (release order) and returns the rates to apply together with
/// the length of time until the next internal event (a completion or a
/// catch-up); releases are handled here.
struct State<'a> {
    jobs: &'a JobSet,
    speed: Rational,
    remaining: Vec<Rational>,
    elapsed: Vec<Rational>,
    completions: Vec<Option<Rational>>,
    released: usize,
    t: Rational,
    intervals: Vec<Interval>,
}

impl<'a> State<'a> {
    fn new(jobs: &'a JobSet, speed: &Rational) -> Self {
        State {
            jobs,
            speed: speed.clone(),
            remaining: jobs.jobs().iter().map(|j| j.processing.clone()).collect(),
            elapsed: vec![rational::zero(); jobs.len()],
            completions: vec![None; jobs.len()],
            released: 0,
            t: jobs.jobs().first().map_or_else(rational::zero, |j| j.release.clone()),
            intervals: Vec::new(),
        }
    }

    fn next_release(&self) -> Option<&Rational> {
        self.jobs.jobs().get(self.released).map(|j| &j.release)
    }

    fn admit(&mut self) {
        while self.next_release().is_some_and(|r| *r <= self.t) {
            self.released += 1;
        }
    }

    fn active(&self) -> Vec<usize> {
        (0..self.released).filter(|&i| self.completions[i].is_none()).collect()
    }

    /// Runs `shares` (position, rate) for `until_internal` time or until the
    /// next release, whichever comes first.
    fn advance(&mut self, shares: &[(usize, Rational)], until_internal: Rational) {
        let mut dt = until_internal;
        if let Some(r) = self.next_release() {
            let gap = r - &self.t;
            if gap < dt {
                dt = gap;
            }
        }
        let end = &self.t + &dt;
        let mut rates: Vec<(JobId, Rational)> = Vec::with_capacity(shares.len());
        for (i, rate) in shares {
            let delivered = rate * &dt;
            self.remaining[*i] -= &delivered;
            self.elapsed[*i] += delivered;
            if self.remaining[*i] == rational::zero() {
                self.completions[*i] = Some(end.clone());
            }
            rates.push((self.jobs.jobs()[*i].id, rate.clone()));
        }
        rates.sort_by_key(|(id, _)| *id);
        self.intervals.push(Interval { start: self.t.clone(), end: end.clone(), rates });
        self.t = end;
    }

    fn run(mut self, mut step: impl FnMut(&Self, &[usize]) -> (Vec<(usize, Rational)>, Rational)) -> Result<Timeline, SchedulingError> {
        loop {
            self.admit();
            let active = self.active();
            if active.is_empty() {
                let Some(r) = self.next_release().cloned() else { break };
                self.intervals.push(Interval { start: self.t.clone(), end: r.clone(), rates: Vec::new() });
                self.t = r;
                continue;
            }
            let (shares, dt) = step(&self, &active);
            self.advance(&shares, dt);
        }
        let completions = self.completions.into_iter().map(|c| c.expect("every job completes")).collect();
        Timeline::new(self.jobs.clone(), self.speed, self.intervals, completions)
    }
}

/// Preemptive SRPT: the active job with the least remaining work runs at
/// full speed. Events are releases and completions.
pub fn simulate_srpt(jobs: &JobSet, speed: &Rational) -> Result<Timeline, SchedulingError> {
    check_speed(speed)?;
    State::new(jobs, speed).run(|state, active| {
        let &pick = active
            .iter()
            .min_by(|&&a, &&b| state.remaining[a].cmp(&state.remaining[b]).then(jobs.jobs()[a].id.cmp(&jobs.jobs()[b].id)))
            .expect("nonempty active set");
        (vec![(pick, state.speed.clone())], &state.remaining[pick] / &state.speed)
    })
}

/// SETF: the active jobs with the least elapsed work share the machine
/// equally. Besides releases and completions, an event occurs when the
/// sharing jobs catch up with the next elapsed level.
pub fn simulate_setf(jobs: &JobSet, speed: &Rational) -> Result<Timeline, SchedulingError> {
    check_speed(speed)?;
    State::new(jobs, speed).run(|state, active| {
        let least = active.iter().map(|&i| &state.elapsed[i]).min().expect("nonempty active set").clone();
        let sharing: Vec<usize> = active.iter().copied().filter(|&i| state.elapsed[i] == least).collect();
        let rate = &state.speed / rational::from_usize(sharing.len());
        let mut dt = sharing.iter().map(|&i| &state.remaining[i] / &rate).min().expect("nonempty sharing set");
        if let Some(next_level) = active.iter().map(|&i| &state.elapsed[i]).filter(|w| **w > least).min() {
            let catch_up = (next_level - &least) / &rate;
            if catch_up < dt {
                dt = catch_up;
            }
        }
        (sharing.into_iter().map(|i| (i, rate.clone())).collect(), dt)
    })
}
