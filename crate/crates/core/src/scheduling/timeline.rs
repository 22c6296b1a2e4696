use alloc::vec::Vec;

use super::{check_speed, Job, JobId, JobSet, SchedulingError};
use crate::rational::{self, Rational};

/// `[start, end)` with constant processing rates. Rates are positive and
/// listed by increasing job id; an empty list means the machine idles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub start: Rational,
    pub end: Rational,
    pub rates: Vec<(JobId, Rational)>,
}

impl Interval {
    pub fn len(&self) -> Rational {
        &self.end - &self.start
    }

    pub fn rate_of(&self, id: JobId) -> Option<&Rational> {
        self.rates.iter().find(|(j, _)| *j == id).map(|(_, r)| r)
    }

    pub fn is_idle(&self) -> bool {
        self.rates.is_empty()
    }
}

/// A validated schedule of a job set on a machine of fixed speed. The
/// intervals tile `[first release, last completion)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Timeline {
    jobs: JobSet,
    speed: Rational,
    intervals: Vec<Interval>,
    /// Aligned with `jobs.jobs()`.
    completions: Vec<Rational>,
}

impl Timeline {
    /// Validates every schedule invariant: contiguous intervals, rates
    /// summing to the speed whenever a job is active and never exceeding
    /// it, processing only inside `[r_j, C_j]`, exact delivery of `p_j`,
    /// and `C_j` equal to the end of the last interval processing `j`.
    pub fn new(jobs: JobSet, speed: Rational, intervals: Vec<Interval>, completions: Vec<Rational>) -> Result<Self, SchedulingError> {
        check_speed(&speed)?;
        let bad = |reason| Err(SchedulingError::InvalidTimeline { reason });
        if completions.len() != jobs.len() {
            return bad("one completion time per job required");
        }
        if jobs.is_empty() {
            return if intervals.is_empty() { Ok(Timeline { jobs, speed, intervals, completions }) } else { bad("intervals without jobs") };
        }
        match (intervals.first(), intervals.last()) {
            (Some(first), Some(last)) => {
                if first.start != jobs.jobs()[0].release {
                    return bad("timeline must start at the first release");
                }
                if Some(&last.end) != completions.iter().max() {
                    return bad("timeline must end at the last completion");
                }
            }
            _ => return bad("jobs without intervals"),
        }
        if intervals.windows(2).any(|w| w[0].end != w[1].start) {
            return bad("intervals must be contiguous");
        }
        let zero = rational::zero();
        let mut work = alloc::vec![zero.clone(); jobs.len()];
        let mut last_end: Vec<Option<Rational>> = alloc::vec![None; jobs.len()];
        for interval in &intervals {
            if interval.start >= interval.end {
                return bad("intervals must have positive length");
            }
            if interval.rates.windows(2).any(|w| w[0].0 >= w[1].0) {
                return bad("rates must be listed by increasing job id");
            }
            let mut total = zero.clone();
            for (id, rate) in &interval.rates {
                let Some(i) = jobs.index_of(*id) else { return bad("rate for unknown job") };
                if *rate <= zero {
                    return bad("rates must be positive");
                }
                if interval.start < jobs.jobs()[i].release || interval.end > completions[i] {
                    return bad("job processed outside its lifetime");
                }
                work[i] += rate * interval.len();
                last_end[i] = Some(interval.end.clone());
                total += rate;
            }
            let busy = jobs.jobs().iter().zip(&completions).any(|(j, c)| j.release <= interval.start && interval.start < *c);
            if total > speed || (busy && total != speed) {
                return bad("rates must sum to the speed while any job is active");
            }
        }
        for ((job, w), (end, c)) in jobs.jobs().iter().zip(&work).zip(last_end.iter().zip(&completions)) {
            if *w != job.processing {
                return bad("delivered work differs from processing time");
            }
            if end.as_ref() != Some(c) {
                return bad("completion must be the end of the job's last processing interval");
            }
        }
        Ok(Timeline { jobs, speed, intervals, completions })
    }

    pub fn jobs(&self) -> &JobSet {
        &self.jobs
    }

    pub fn speed(&self) -> &Rational {
        &self.speed
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Interval boundaries in increasing order.
    pub fn events(&self) -> Vec<Rational> {
        let mut events: Vec<Rational> = self.intervals.iter().map(|i| i.start.clone()).collect();
        events.extend(self.intervals.last().map(|i| i.end.clone()));
        events
    }

    /// Completion times aligned with `jobs().jobs()`.
    pub fn completions(&self) -> &[Rational] {
        &self.completions
    }

    pub fn completion(&self, id: JobId) -> Option<&Rational> {
        self.jobs.index_of(id).map(|i| &self.completions[i])
    }

    /// Last completion, or zero for an empty job set.
    pub fn horizon(&self) -> Rational {
        self.completions.iter().max().cloned().unwrap_or_else(rational::zero)
    }

    pub fn jobs_with_completions(&self) -> impl Iterator<Item = (&Job, &Rational)> {
        self.jobs.jobs().iter().zip(&self.completions)
    }

    /// Work received by each job during `[0, t)`, aligned with
    /// `jobs().jobs()`.
    pub fn work_by(&self, t: &Rational) -> Vec<Rational> {
        let mut work = alloc::vec![rational::zero(); self.jobs.len()];
        for interval in self.intervals.iter().take_while(|i| i.start < *t) {
            let end = if interval.end < *t { &interval.end } else { t };
            let span = end - &interval.start;
            for (id, rate) in &interval.rates {
                let i = self.jobs.index_of(*id).expect("validated job id");
                work[i] += rate * &span;
            }
        }
        work
    }

    /// `|{j : r_j <= t < C_j}|`.
    pub fn active_count(&self, t: &Rational) -> usize {
        self.jobs_with_completions().filter(|(j, c)| j.release <= *t && *t < **c).count()
    }
}
