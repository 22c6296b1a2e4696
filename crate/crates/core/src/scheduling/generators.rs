use alloc::vec::Vec;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Job, JobId, JobSet, SchedulingError};
use crate::rational::{self, Rational};

/// `m = floor(1/ε) - 1` jobs with ids `1..=m`, releases `0, 1, ..., m-1`
/// and processing time `1 + ε + δ` each. SETF at speed `1 + ε` completes
/// none of them before time `m`, while SRPT at unit speed keeps at most
/// two jobs active.
pub fn gen_example_setf(eps: &Rational, delta: &Rational) -> Result<JobSet, SchedulingError> {
    let (zero, one) = (rational::zero(), rational::one());
    if !(zero < *delta && delta < eps && *eps < one) {
        return Err(SchedulingError::InvalidParameter { name: "eps/delta", reason: "requires 0 < delta < eps < 1" });
    }
    let floor =
        (eps.denom() / eps.numer()).to_usize().ok_or(SchedulingError::InvalidParameter { name: "eps", reason: "1/eps too large" })?;
    let m = floor.checked_sub(1).filter(|&m| m >= 1).ok_or(SchedulingError::InvalidParameter {
        name: "eps",
        reason: "floor(1/eps) - 1 must be at least 1, so eps may not exceed 1/2",
    })?;
    let p = one + eps + delta;
    JobSet::new((1..=m).map(|j| Job::new(j as JobId, rational::from_usize(j - 1), p.clone())).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomJobParams {
    pub max_jobs: usize,
    /// Releases lie in `[0, release_max]`.
    pub release_max: u32,
    /// Processing times lie in `(0, processing_max]`.
    pub processing_max: u32,
    /// Every value is `k / q` with `1 <= q <= max_denominator`.
    pub max_denominator: u32,
}

impl Default for RandomJobParams {
    fn default() -> Self {
        RandomJobParams { max_jobs: 12, release_max: 10, processing_max: 4, max_denominator: 4 }
    }
}

/// Between one and `max_jobs` jobs with random rational parameters.
pub fn gen_random_jobs(params: &RandomJobParams, seed: u64) -> Result<JobSet, SchedulingError> {
    if params.max_jobs == 0 || params.processing_max == 0 || params.max_denominator == 0 {
        return Err(SchedulingError::InvalidParameter {
            name: "params",
            reason: "job count, processing bound and denominator must be positive",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=params.max_jobs);
    let mut value = |lo: u32, max: u32| -> Rational {
        let q = rng.gen_range(1..=params.max_denominator);
        let k = rng.gen_range(lo..=max * q);
        rational::ratio(i64::from(k), i64::from(q))
    };
    let pairs: Vec<(Rational, Rational)> = (0..n).map(|_| (value(0, params.release_max), value(1, params.processing_max))).collect();
    JobSet::from_pairs(pairs)
}

/// `n` jobs with integer parameters and `last release + total work <=
/// horizon`.
pub fn gen_grid_jobs(n: usize, horizon: u32, seed: u64) -> Result<JobSet, SchedulingError> {
    if n == 0 || (horizon as usize) < n {
        return Err(SchedulingError::InvalidParameter {
            name: "horizon",
            reason: "must be at least the job count, which must be positive",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = (horizon / (2 * n as u32)).max(1);
    let work: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=cap)).collect();
    let slack = horizon - work.iter().sum::<u32>();
    let pairs: Vec<(Rational, Rational)> =
        work.iter().map(|&p| (rational::int(i64::from(rng.gen_range(0..=slack))), rational::int(i64::from(p)))).collect();
    JobSet::from_pairs(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn example_sizes() {
        let jobs = gen_example_setf(&ratio(1, 10), &ratio(1, 100)).unwrap();
        assert_eq!(jobs.len(), 9);
        assert!(jobs.jobs().iter().all(|j| j.processing == ratio(111, 100) && j.release.is_integer()));
        assert_eq!(gen_example_setf(&ratio(1, 4), &ratio(1, 40)).unwrap().len(), 3);
        assert_eq!(gen_example_setf(&ratio(1, 2), &ratio(1, 20)).unwrap().len(), 1);
        assert!(gen_example_setf(&ratio(3, 5), &ratio(1, 20)).is_err());
        assert!(gen_example_setf(&ratio(1, 10), &ratio(1, 10)).is_err());
    }

    #[test]
    fn random_jobs_are_seeded_and_bounded() {
        let params = RandomJobParams::default();
        for seed in 0..50 {
            let a = gen_random_jobs(&params, seed).unwrap();
            assert_eq!(a, gen_random_jobs(&params, seed).unwrap());
            assert!((1..=12).contains(&a.len()));
            assert!(a.jobs().iter().all(|j| j.release <= int(10) && j.processing <= int(4)));
        }
    }

    #[test]
    fn grid_jobs_fit_horizon() {
        for seed in 0..50 {
            let jobs = gen_grid_jobs(4, 24, seed).unwrap();
            let last = jobs.jobs().iter().map(|j| j.release.clone()).max().unwrap();
            assert!(last + jobs.total_work() <= int(24));
        }
    }
}
