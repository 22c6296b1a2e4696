//! Job files and timeline exports. Every rational is a `num/den` string.

use auglab_core::rational::Rational;
use auglab_core::scheduling::{flow_metrics, Interval, Job, JobId, JobSet, Timeline};
use serde::{Deserialize, Serialize};

use crate::{from_json, to_json, InputError, RationalText};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobRecord {
    pub id: JobId,
    pub release: RationalText,
    pub processing: RationalText,
}

fn job_records(jobs: &JobSet) -> Vec<JobRecord> {
    jobs.jobs()
        .iter()
        .map(|j| JobRecord { id: j.id, release: RationalText(j.release.clone()), processing: RationalText(j.processing.clone()) })
        .collect()
}

fn job_set(records: &[JobRecord]) -> Result<JobSet, InputError> {
    Ok(JobSet::new(records.iter().map(|r| Job::new(r.id, r.release.0.clone(), r.processing.0.clone())).collect())?)
}

pub fn parse_jobs(text: &str) -> Result<JobSet, InputError> {
    job_set(&from_json::<Vec<JobRecord>>(text)?)
}

pub fn write_jobs(jobs: &JobSet) -> String {
    to_json(&job_records(jobs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RateRecord {
    pub job: JobId,
    pub rate: RationalText,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalRecord {
    pub start: RationalText,
    pub end: RationalText,
    /// Empty while the machine idles.
    pub rates: Vec<RateRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompletionRecord {
    pub job: JobId,
    pub time: RationalText,
}

/// `events`, `total_flow_time` and `max_idle_time` are derived; reading
/// recomputes them and rejects a file whose stored values disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimelineRecord {
    pub speed: RationalText,
    pub jobs: Vec<JobRecord>,
    pub events: Vec<RationalText>,
    pub intervals: Vec<IntervalRecord>,
    pub completions: Vec<CompletionRecord>,
    pub total_flow_time: RationalText,
    pub max_idle_time: RationalText,
}

impl From<&Timeline> for TimelineRecord {
    fn from(tl: &Timeline) -> Self {
        let metrics = flow_metrics(tl).expect("validated timelines have consistent metrics");
        let text = |q: &Rational| RationalText(q.clone());
        TimelineRecord {
            speed: text(tl.speed()),
            jobs: job_records(tl.jobs()),
            events: tl.events().iter().map(text).collect(),
            intervals: tl
                .intervals()
                .iter()
                .map(|i| IntervalRecord {
                    start: text(&i.start),
                    end: text(&i.end),
                    rates: i.rates.iter().map(|(job, r)| RateRecord { job: *job, rate: text(r) }).collect(),
                })
                .collect(),
            completions: tl.jobs_with_completions().map(|(j, c)| CompletionRecord { job: j.id, time: text(c) }).collect(),
            total_flow_time: text(&metrics.total_flow_time),
            max_idle_time: text(&metrics.max_idle_time),
        }
    }
}

impl TryFrom<&TimelineRecord> for Timeline {
    type Error = InputError;

    fn try_from(r: &TimelineRecord) -> Result<Self, InputError> {
        let jobs = job_set(&r.jobs)?;
        let mut completions = Vec::with_capacity(jobs.len());
        for job in jobs.jobs() {
            let mut matching = r.completions.iter().filter(|c| c.job == job.id);
            match (matching.next(), matching.next()) {
                (Some(c), None) => completions.push(c.time.0.clone()),
                _ => return Err(InputError::field("completions", format!("need exactly one completion for job {}", job.id))),
            }
        }
        if r.completions.len() != jobs.len() {
            return Err(InputError::field("completions", "completion for an unknown job"));
        }
        let intervals = r
            .intervals
            .iter()
            .map(|i| Interval {
                start: i.start.0.clone(),
                end: i.end.0.clone(),
                rates: i.rates.iter().map(|x| (x.job, x.rate.0.clone())).collect(),
            })
            .collect();
        let tl = Timeline::new(jobs, r.speed.0.clone(), intervals, completions)?;
        let derived = TimelineRecord::from(&tl);
        for (field, ok) in [
            ("events", derived.events == r.events),
            ("total_flow_time", derived.total_flow_time == r.total_flow_time),
            ("max_idle_time", derived.max_idle_time == r.max_idle_time),
        ] {
            if !ok {
                return Err(InputError::field(field, "disagrees with the intervals"));
            }
        }
        Ok(tl)
    }
}

pub fn parse_timeline(text: &str) -> Result<Timeline, InputError> {
    Timeline::try_from(&from_json::<TimelineRecord>(text)?)
}

pub fn write_timeline(tl: &Timeline) -> String {
    to_json(&TimelineRecord::from(tl))
}
