use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{JobId, SchedulingError, Timeline};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowMetrics {
    /// `sum_j (C_j - r_j)`, equal to the integral of the active count.
    pub total_flow_time: Rational,
    /// `(start, end, |X_t|)` for every interval of the timeline.
    pub active_count_profile: Vec<(Rational, Rational, usize)>,
    /// `C_j - r_j - p_j / s` per job, in release order.
    pub idle_times: Vec<Rational>,
    /// Largest idle time; zero for an empty job set.
    pub max_idle_time: Rational,
}

pub fn flow_metrics(tl: &Timeline) -> Result<FlowMetrics, SchedulingError> {
    let by_completion: Rational = tl.jobs_with_completions().map(|(j, c)| c - &j.release).sum();
    let active_count_profile: Vec<(Rational, Rational, usize)> =
        tl.intervals().iter().map(|i| (i.start.clone(), i.end.clone(), tl.active_count(&i.start))).collect();
    let by_integral: Rational = active_count_profile.iter().map(|(a, b, n)| (b - a) * rational::from_usize(*n)).sum();
    if by_completion != by_integral {
        return Err(SchedulingError::InvalidTimeline { reason: "flow time differs from the integral of the active count" });
    }
    let idle_times: Vec<Rational> = tl.jobs_with_completions().map(|(j, c)| c - &j.release - &j.processing / tl.speed()).collect();
    let max_idle_time = idle_times.iter().max().cloned().unwrap_or_else(rational::zero);
    Ok(FlowMetrics { total_flow_time: by_completion, active_count_profile, idle_times, max_idle_time })
}

/// `{j : r_j <= t < C_j}`.
pub fn active_sets(tl: &Timeline, t: &Rational) -> BTreeSet<JobId> {
    tl.jobs_with_completions().filter(|(j, c)| j.release <= *t && *t < **c).map(|(j, _)| j.id).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::scheduling::{simulate_setf, simulate_srpt, JobSet};

    fn pairs(p: &[(i64, i64)]) -> JobSet {
        JobSet::from_pairs(p.iter().map(|&(r, p)| (int(r), int(p)))).unwrap()
    }

    #[test]
    fn single_job_metrics() {
        let m = flow_metrics(&simulate_srpt(&pairs(&[(0, 3)]), &int(1)).unwrap()).unwrap();
        assert_eq!(m.total_flow_time, int(3));
        assert_eq!(m.max_idle_time, int(0));
    }

    #[test]
    fn shared_jobs_idle_one_unit_each() {
        let m = flow_metrics(&simulate_setf(&pairs(&[(0, 1), (0, 1)]), &int(1)).unwrap()).unwrap();
        assert_eq!(m.total_flow_time, int(4));
        assert_eq!(m.idle_times, alloc::vec![int(1), int(1)]);
    }

    #[test]
    fn idle_accounts_for_speed() {
        let m = flow_metrics(&simulate_srpt(&pairs(&[(0, 1), (0, 1)]), &int(2)).unwrap()).unwrap();
        assert_eq!(m.idle_times, alloc::vec![int(0), ratio(1, 2)]);
    }

    #[test]
    fn active_sets_are_right_open() {
        let tl = simulate_srpt(&pairs(&[(1, 2)]), &int(1)).unwrap();
        assert!(active_sets(&tl, &int(0)).is_empty());
        assert_eq!(active_sets(&tl, &int(1)).into_iter().collect::<Vec<_>>(), alloc::vec![0]);
        assert_eq!(active_sets(&tl, &ratio(29, 10)).len(), 1);
        assert!(active_sets(&tl, &int(3)).is_empty());
    }
}
