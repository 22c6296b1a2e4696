//! Preemptive single-machine scheduling in exact rational time.
//!
//! A [`Timeline`] is a piecewise-constant schedule: between consecutive
//! event times every job receives work at a fixed rate. SRPT and SETF
//! produce timelines; the metric, verification and diagnostic functions
//! consume them.

mod generators;
mod idle;
mod interference;
mod metrics;
mod oracle;
mod sim;
mod timeline;
mod verify;

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::rational::{self, Rational};

pub use generators::{gen_example_setf, gen_grid_jobs, gen_random_jobs, RandomJobParams};
pub use idle::{edf_feasible, opt_max_idle};
pub use interference::{interference_sets, InterferenceReport, InterferenceSet, InterferenceViolation, TimePoint};
pub use metrics::{active_sets, flow_metrics, FlowMetrics};
pub use oracle::{bruteforce_min_flow, bruteforce_min_max_idle, BruteForceGuard};
pub use sim::{simulate, simulate_setf, simulate_srpt, Scheduler};
pub use timeline::{Interval, Timeline};
pub use verify::{verify_idle_bound, verify_kp00, verify_pointwise_bound};

pub type JobId = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchedulingError {
    #[error("job {id}: processing time must be positive")]
    NonPositiveProcessing { id: JobId },
    #[error("job {id}: release time must be nonnegative")]
    NegativeRelease { id: JobId },
    #[error("duplicate job id {id}")]
    DuplicateId { id: JobId },
    #[error("speed must be positive")]
    NonPositiveSpeed,
    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: &'static str },
    #[error("time {t} lies beyond the timeline horizon {horizon}")]
    BeyondHorizon { t: Box<Rational>, horizon: Box<Rational> },
    #[error("invalid timeline: {reason}")]
    InvalidTimeline { reason: &'static str },
    #[error("{what} {actual} exceeds the oracle limit {limit}")]
    OracleGuard { what: &'static str, actual: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Job {
    pub id: JobId,
    pub release: Rational,
    pub processing: Rational,
}

impl Job {
    pub fn new(id: JobId, release: Rational, processing: Rational) -> Self {
        Job { id, release, processing }
    }
}

impl fmt::Display for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "job {} (r = {}, p = {})", self.id, rational::format(&self.release), rational::format(&self.processing))
    }
}

/// Jobs sorted by release time, ties by id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct JobSet {
    jobs: Vec<Job>,
}

impl JobSet {
    pub fn new(mut jobs: Vec<Job>) -> Result<Self, SchedulingError> {
        for job in &jobs {
            if job.processing <= rational::zero() {
                return Err(SchedulingError::NonPositiveProcessing { id: job.id });
            }
            if job.release < rational::zero() {
                return Err(SchedulingError::NegativeRelease { id: job.id });
            }
        }
        let mut ids: Vec<JobId> = jobs.iter().map(|j| j.id).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(SchedulingError::DuplicateId { id: w[0] });
        }
        jobs.sort_by(|a, b| a.release.cmp(&b.release).then(a.id.cmp(&b.id)));
        Ok(JobSet { jobs })
    }

    /// Jobs `0, 1, ...` from `(release, processing)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self, SchedulingError> {
        Self::new(pairs.into_iter().enumerate().map(|(i, (r, p))| Job::new(i as JobId, r, p)).collect())
    }

    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    pub fn len(&self) -> usize {
        self.jobs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jobs.is_empty()
    }

    /// Position of job `id` in release order.
    pub fn index_of(&self, id: JobId) -> Option<usize> {
        self.jobs.iter().position(|j| j.id == id)
    }

    pub fn total_work(&self) -> Rational {
        self.jobs.iter().map(|j| j.processing.clone()).sum()
    }
}

pub(crate) fn check_speed(speed: &Rational) -> Result<(), SchedulingError> {
    if *speed <= rational::zero() {
        Err(SchedulingError::NonPositiveSpeed)
    } else {
        Ok(())
    }
}
