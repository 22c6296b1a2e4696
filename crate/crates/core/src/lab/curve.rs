use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::paging::{fault_curve, simulate, PageRequestSequence, PagingError, Policy};
use crate::rational;
use crate::report::Quantity;
use crate::routing::{solve, Objective, RoutingError, RoutingNetwork, SolverOptions};
use crate::scheduling::{self, flow_metrics, JobSet, Scheduler, SchedulingError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LabError {
    #[error(transparent)]
    Paging(#[from] PagingError),
    #[error(transparent)]
    Routing(#[from] RoutingError),
    #[error(transparent)]
    Scheduling(#[from] SchedulingError),
    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: &'static str },
    #[error("engine and instance kinds differ")]
    EngineMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Faults against cache size.
    Paging(Policy),
    /// Total cost against the factor applied to every commodity rate.
    Routing(Objective),
    /// Total flow time against machine speed.
    Scheduling(Scheduler),
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Engine::Paging(p) => write!(f, "paging-{p}"),
            Engine::Routing(Objective::Equilibrium) => f.write_str("routing-equilibrium"),
            Engine::Routing(Objective::Optimal) => f.write_str("routing-optimal"),
            Engine::Scheduling(s) => write!(f, "scheduling-{s}"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Instance<'a> {
    Paging(&'a PageRequestSequence),
    Routing(&'a RoutingNetwork, &'a SolverOptions),
    Scheduling(&'a JobSet),
}

/// Cost per resource level for one algorithm on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct PerformanceCurve {
    pub algorithm: String,
    pub instance: String,
    pub levels: Vec<Quantity>,
    pub values: Vec<Quantity>,
}

impl PerformanceCurve {
    /// Checks that levels strictly increase, values are nonnegative and
    /// both have the same length.
    pub fn new(
        algorithm: impl Into<String>,
        instance: impl Into<String>,
        levels: Vec<Quantity>,
        values: Vec<Quantity>,
    ) -> Result<Self, LabError> {
        if levels.len() != values.len() {
            return Err(LabError::InvalidParameter { name: "curve", reason: "one value per level required" });
        }
        if levels.windows(2).any(|w| w[0].compare(&w[1]) != Some(core::cmp::Ordering::Less)) {
            return Err(LabError::InvalidParameter { name: "levels", reason: "must be strictly increasing" });
        }
        if !values.iter().all(Quantity::is_nonnegative) {
            return Err(LabError::InvalidParameter { name: "values", reason: "must be nonnegative" });
        }
        Ok(PerformanceCurve { algorithm: algorithm.into(), instance: instance.into(), levels, values })
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// `resource,value` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("resource,value\n");
        for (l, v) in self.levels.iter().zip(&self.values) {
            out.push_str(&format!("{},{}\n", csv_field(l), csv_field(v)));
        }
        out
    }
}

fn csv_field(q: &Quantity) -> String {
    match q {
        Quantity::Exact(r) if r.is_integer() => format!("{}", r.numer()),
        Quantity::Exact(r) => rational::format(r),
        Quantity::Real(x) => format!("{x}"),
    }
}

/// Cost of `engine` on `instance` at one resource level.
pub fn curve_point(engine: Engine, instance: Instance<'_>, level: &Quantity) -> Result<Quantity, LabError> {
    match (engine, instance) {
        (Engine::Paging(policy), Instance::Paging(z)) => {
            let k = cache_size(level)?;
            Ok(Quantity::count(simulate(policy, k, z)?.fault_count))
        }
        (Engine::Routing(objective), Instance::Routing(net, options)) => {
            let factor = level.to_f64();
            let report = solve(&net.scale_rates(factor)?, objective, options)?;
            Ok(Quantity::Real(report.total_cost))
        }
        (Engine::Scheduling(scheduler), Instance::Scheduling(jobs)) => {
            let speed = level.as_exact().ok_or(LabError::InvalidParameter { name: "speed", reason: "must be an exact rational" })?;
            Ok(Quantity::Exact(flow_metrics(&scheduling::simulate(scheduler, jobs, speed)?)?.total_flow_time))
        }
        _ => Err(LabError::EngineMismatch),
    }
}

fn cache_size(level: &Quantity) -> Result<usize, LabError> {
    let bad = LabError::InvalidParameter { name: "cache size", reason: "must be a positive integer" };
    let q = level.as_exact().ok_or(bad.clone())?;
    if !q.is_integer() || *q < rational::one() {
        return Err(bad);
    }
    rational::ceil_to_usize(q).ok_or(bad)
}

/// Evaluates every level in order. LRU curves over `1..=K` use a single
/// reuse-distance pass.
pub fn curve(engine: Engine, instance: Instance<'_>, instance_name: &str, levels: &[Quantity]) -> Result<PerformanceCurve, LabError> {
    let values = match (engine, instance) {
        (Engine::Paging(Policy::Lru), Instance::Paging(z)) if !levels.is_empty() => {
            let sizes = levels.iter().map(cache_size).collect::<Result<Vec<_>, _>>()?;
            let max_k = sizes.iter().copied().max().unwrap_or(1);
            let all = fault_curve(Policy::Lru, z, max_k)?;
            sizes.iter().map(|&k| Quantity::count(all[k - 1])).collect()
        }
        _ => levels.iter().map(|l| curve_point(engine, instance, l)).collect::<Result<Vec<_>, _>>()?,
    };
    PerformanceCurve::new(format!("{engine}"), instance_name, levels.to_vec(), values)
}

/// Exact levels `1, 2, ..., n`.
pub fn integer_levels(n: usize) -> Vec<Quantity> {
    (1..=n).map(|k| Quantity::Exact(rational::from_usize(k))).collect()
}
