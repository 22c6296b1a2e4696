use alloc::format;
use alloc::vec::Vec;

use super::LabError;
use crate::report::{Quantity, VerificationReport};
use crate::routing::{equilibrium_flow, optimal_flow, price_of_anarchy, CostFunction, RoutingError, RoutingNetwork, SolverOptions};

/// Additive allowance for solver error in routing cost comparisons.
pub const ROUTING_SLACK: f64 = 1e-5;

/// Optimal cost, or infinity when M/M/1 capacities cannot carry the rates.
fn optimal_cost_or_infinite(net: &RoutingNetwork, options: &SolverOptions) -> Result<(f64, f64), LabError> {
    match optimal_flow(net, options) {
        Ok(r) => Ok((r.total_cost, r.relative_gap)),
        Err(RoutingError::Mm1Infeasible { .. }) => Ok((f64::INFINITY, 0.0)),
        Err(e) => Err(e.into()),
    }
}

/// Equilibrium cost at the given rates against `1/δ` times the optimal
/// cost at rates scaled by `1 + δ`.
pub fn verify_rate_augmentation(net: &RoutingNetwork, delta: f64, options: &SolverOptions) -> Result<VerificationReport, LabError> {
    if !(delta.is_finite() && delta > 0.0) {
        return Err(LabError::InvalidParameter { name: "delta", reason: "must be finite and positive" });
    }
    let eq = equilibrium_flow(net, options)?;
    let (opt, opt_gap) = optimal_cost_or_infinite(&net.scale_rates(1.0 + delta)?, options)?;
    Ok(VerificationReport::new(
        "rate-augmentation",
        Quantity::Real(eq.total_cost),
        Quantity::Real(opt / delta),
        Quantity::Real(ROUTING_SLACK),
    )
    .with("delta", format!("{delta}"))
    .with("equilibrium_cost", format!("{}", eq.total_cost))
    .with("augmented_optimal_cost", format!("{opt}"))
    .with("equilibrium_gap", format!("{}", eq.relative_gap))
    .with("optimal_gap", format!("{opt_gap}"))
    .with("approximate", format!("{}", eq.is_approximate() || opt_gap > 0.0)))
}

/// Equilibrium cost after replacing every `c_e(x)` by `c_e(x/2)/2` against
/// the optimal cost of the original network, at the same rates. Also
/// records whether every M/M/1 capacity exactly doubled.
pub fn verify_slower_network(net: &RoutingNetwork, options: &SolverOptions) -> Result<VerificationReport, LabError> {
    let slower = net.make_slower();
    let doubled = net.edges().iter().zip(slower.edges()).all(|(e, s)| match (&e.cost, &s.cost) {
        (CostFunction::Mm1 { u }, CostFunction::Mm1 { u: v }) => *v == 2.0 * u,
        (CostFunction::Mm1 { .. }, _) => false,
        _ => true,
    });
    let eq = equilibrium_flow(&slower, options)?;
    let (opt, opt_gap) = optimal_cost_or_infinite(net, options)?;
    Ok(VerificationReport::new("slower-network", Quantity::Real(eq.total_cost), Quantity::Real(opt), Quantity::Real(ROUTING_SLACK))
        .with("equilibrium_gap", format!("{}", eq.relative_gap))
        .with("optimal_gap", format!("{opt_gap}"))
        .with("mm1_capacity_doubled", format!("{doubled}")))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoutingLoosePoint {
    /// Multiplier applied to every commodity rate, in `[1/2, 1]`.
    pub factor: f64,
    pub total_rate: f64,
    /// `None` when the optimal cost is zero.
    pub price_of_anarchy: Option<f64>,
    pub within_threshold: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoutingLooseReport {
    pub beta: f64,
    /// Equilibrium cost at the full rates over that at half the rates;
    /// `None` when the latter is zero.
    pub pi: Option<f64>,
    /// `β ln π`.
    pub threshold: Option<f64>,
    pub points: Vec<RoutingLoosePoint>,
    /// Share of sampled rates whose price of anarchy is at most the
    /// threshold; `None` when `π` is undefined.
    pub fraction: Option<f64>,
}

/// Samples `samples` evenly spaced rate multipliers in `[1/2, 1]` and
/// reports how many have a price of anarchy of at most `β ln π`.
pub fn routing_loose_curve(
    net: &RoutingNetwork,
    samples: usize,
    beta: f64,
    options: &SolverOptions,
) -> Result<RoutingLooseReport, LabError> {
    if samples < 2 {
        return Err(LabError::InvalidParameter { name: "samples", reason: "at least 2 required" });
    }
    if !(beta.is_finite() && beta > 0.0) {
        return Err(LabError::InvalidParameter { name: "beta", reason: "must be finite and positive" });
    }
    let full = equilibrium_flow(net, options)?.total_cost;
    let half = equilibrium_flow(&net.scale_rates(0.5)?, options)?.total_cost;
    let pi = (half > 0.0).then(|| full / half);
    let threshold = pi.map(|p| beta * libm::log(p));
    let mut points = Vec::with_capacity(samples);
    for i in 0..samples {
        let factor = 0.5 + 0.5 * i as f64 / (samples - 1) as f64;
        let scaled = net.scale_rates(factor)?;
        let poa = price_of_anarchy(&scaled, options)?.ratio;
        let within_threshold = matches!((poa, threshold), (Some(p), Some(t)) if p <= t);
        points.push(RoutingLoosePoint { factor, total_rate: scaled.total_rate(), price_of_anarchy: poa, within_threshold });
    }
    let fraction = threshold.map(|_| points.iter().filter(|p| p.within_threshold).count() as f64 / samples as f64);
    Ok(RoutingLooseReport { beta, pi, threshold, points, fraction })
}
