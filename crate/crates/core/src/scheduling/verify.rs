use alloc::format;
use alloc::vec::Vec;

use super::{flow_metrics, opt_max_idle, simulate_setf, simulate_srpt, JobSet, SchedulingError};
use crate::rational::{self, Rational};
use crate::report::{Quantity, VerificationReport};

fn check_eps(eps: &Rational) -> Result<(), SchedulingError> {
    if *eps <= rational::zero() {
        Err(SchedulingError::InvalidParameter { name: "eps", reason: "must be positive" })
    } else {
        Ok(())
    }
}

/// `|X_t| <= (1 + 1/ε) |X*_t|` at every instant, with `X` the active set
/// of SETF at speed `1 + ε` and `X*` that of SRPT at unit speed. Both
/// counts are constant between consecutive merged events, so checking the
/// events and the midpoints between them is exhaustive. The report holds
/// the two sides at the instant of largest excess.
pub fn verify_pointwise_bound(jobs: &JobSet, eps: &Rational) -> Result<VerificationReport, SchedulingError> {
    check_eps(eps)?;
    let one = rational::one();
    let setf = simulate_setf(jobs, &(&one + eps))?;
    let srpt = simulate_srpt(jobs, &one)?;
    let factor = &one + one.clone() / eps;

    let mut events: Vec<Rational> = setf.events().into_iter().chain(srpt.events()).collect();
    events.sort();
    events.dedup();
    let two = rational::int(2);
    let mut samples: Vec<Rational> = events.windows(2).map(|w| (&w[0] + &w[1]) / &two).collect();
    samples.extend(events);
    samples.sort();

    let mut worst: Option<(Rational, Rational, Rational)> = None;
    let mut max_ratio: Option<Rational> = None;
    let mut violations = 0usize;
    let mut first_violation: Option<Rational> = None;
    for t in &samples {
        let x = rational::from_usize(setf.active_count(t));
        let x_star = rational::from_usize(srpt.active_count(t));
        let bound = &factor * &x_star;
        if x > bound {
            violations += 1;
            first_violation.get_or_insert_with(|| t.clone());
        }
        if x_star > rational::zero() {
            let r = &x / &x_star;
            if max_ratio.as_ref().is_none_or(|m| r > *m) {
                max_ratio = Some(r);
            }
        }
        let excess = &x - &bound;
        if worst.as_ref().is_none_or(|(e, _, _)| excess > *e) {
            worst = Some((excess, x, bound));
        }
    }
    let (_, left, right) = worst.unwrap_or_else(|| (rational::zero(), rational::zero(), rational::zero()));
    let mut report =
        VerificationReport::new("pointwise-active-bound", Quantity::Exact(left), Quantity::Exact(right), Quantity::Exact(rational::zero()))
            .with("eps", rational::format(eps))
            .with("jobs", format!("{}", jobs.len()))
            .with("samples", format!("{}", samples.len()))
            .with("violations", format!("{violations}"))
            .with("max_ratio", max_ratio.as_ref().map_or_else(|| "undefined".into(), rational::format));
    if let Some(t) = first_violation {
        report = report.with("first_violation", rational::format(&t));
    }
    Ok(report)
}

/// Total flow time of SETF at speed `1 + ε` against `1 + 1/ε` times that
/// of SRPT at unit speed, exactly.
pub fn verify_kp00(jobs: &JobSet, eps: &Rational) -> Result<VerificationReport, SchedulingError> {
    check_eps(eps)?;
    let one = rational::one();
    let setf = flow_metrics(&simulate_setf(jobs, &(&one + eps))?)?.total_flow_time;
    let srpt = flow_metrics(&simulate_srpt(jobs, &one)?)?.total_flow_time;
    let factor = &one + one.clone() / eps;
    let ratio = (srpt > rational::zero()).then(|| &setf / &srpt);
    Ok(VerificationReport::new(
        "flow-time-speed-bound",
        Quantity::Exact(setf.clone()),
        Quantity::Exact(&factor * &srpt),
        Quantity::Exact(rational::zero()),
    )
    .with("eps", rational::format(eps))
    .with("jobs", format!("{}", jobs.len()))
    .with("setf_flow", rational::format(&setf))
    .with("srpt_flow", rational::format(&srpt))
    .with("ratio", ratio.as_ref().map_or_else(|| "undefined".into(), rational::format))
    .with("bound", rational::format(&factor)))
}

/// Largest idle time of SETF at speed `1 + ε` against `1/ε` times the least
/// achievable largest idle time at unit speed.
pub fn verify_idle_bound(jobs: &JobSet, eps: &Rational) -> Result<VerificationReport, SchedulingError> {
    check_eps(eps)?;
    let one = rational::one();
    let setf = flow_metrics(&simulate_setf(jobs, &(&one + eps))?)?.max_idle_time;
    let opt = opt_max_idle(jobs, &one)?;
    Ok(VerificationReport::new(
        "idle-time-speed-bound",
        Quantity::Exact(setf.clone()),
        Quantity::Exact(&opt / eps),
        Quantity::Exact(rational::zero()),
    )
    .with("eps", rational::format(eps))
    .with("jobs", format!("{}", jobs.len()))
    .with("setf_max_idle", rational::format(&setf))
    .with("opt_max_idle", rational::format(&opt)))
}
