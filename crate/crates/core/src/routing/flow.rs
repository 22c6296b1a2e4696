use alloc::vec::Vec;

use super::{RoutingError, RoutingNetwork};

/// Nonnegative flow on every edge, optionally split by commodity.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeFlow {
    pub edge_flows: Vec<f64>,
    /// `per_commodity[i][e]`: flow of commodity `i` on edge `e`.
    pub per_commodity: Option<Vec<Vec<f64>>>,
}

impl EdgeFlow {
    pub fn zero(net: &RoutingNetwork) -> Self {
        EdgeFlow { edge_flows: alloc::vec![0.0; net.edges().len()], per_commodity: None }
    }

    pub fn aggregate(edge_flows: Vec<f64>) -> Self {
        EdgeFlow { edge_flows, per_commodity: None }
    }
}

fn conservation_tolerance(net: &RoutingNetwork) -> f64 {
    1e-7 * net.total_rate().max(1.0)
}

fn check_conservation(net: &RoutingNetwork, flows: &[f64], source: usize, sink: usize, rate: f64) -> Result<(), RoutingError> {
    let mut net_out = alloc::vec![0.0; net.vertices()];
    for (e, &x) in net.edges().iter().zip(flows) {
        net_out[e.tail] += x;
        net_out[e.head] -= x;
    }
    let tol = conservation_tolerance(net);
    for (v, &out) in net_out.iter().enumerate() {
        let want = if v == source {
            rate
        } else if v == sink {
            -rate
        } else {
            0.0
        };
        if (out - want).abs() > tol {
            return Err(RoutingError::InfeasibleFlow { reason: "flow conservation violated" });
        }
    }
    Ok(())
}

/// Rejects flows of the wrong shape, negative or non-finite entries, and
/// flows that do not route every commodity.
pub fn check_flow(net: &RoutingNetwork, flow: &EdgeFlow) -> Result<(), RoutingError> {
    if flow.edge_flows.len() != net.edges().len() {
        return Err(RoutingError::InfeasibleFlow { reason: "one flow value per edge required" });
    }
    if flow.edge_flows.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
        return Err(RoutingError::InfeasibleFlow { reason: "edge flows must be finite and nonnegative" });
    }
    match &flow.per_commodity {
        Some(split) => {
            if split.len() != net.commodities().len() {
                return Err(RoutingError::InfeasibleFlow { reason: "one flow split per commodity required" });
            }
            let tol = conservation_tolerance(net);
            for (e, &total) in flow.edge_flows.iter().enumerate() {
                let sum: f64 = split.iter().map(|f| f.get(e).copied().unwrap_or(f64::NAN)).sum();
                if (sum - total).abs() > tol || sum.is_nan() {
                    return Err(RoutingError::InfeasibleFlow { reason: "commodity split does not sum to edge flow" });
                }
            }
            for (c, f) in net.commodities().iter().zip(split) {
                check_conservation(net, f, c.source, c.sink, c.rate)?;
            }
        }
        None => {
            if let [c] = net.commodities() {
                check_conservation(net, &flow.edge_flows, c.source, c.sink, c.rate)?;
            }
        }
    }
    Ok(())
}

/// `sum_e c_e(f_e) * f_e`; infinite when an M/M/1 edge is at or over
/// capacity.
pub fn total_cost(net: &RoutingNetwork, flow: &EdgeFlow) -> Result<f64, RoutingError> {
    check_flow(net, flow)?;
    Ok(net.edges().iter().zip(&flow.edge_flows).map(|(e, &x)| e.cost.total(x)).sum())
}

/// `sum_e ∫_0^{f_e} c_e(t) dt`; infinite when an M/M/1 edge is at or over
/// capacity.
pub fn potential(net: &RoutingNetwork, flow: &EdgeFlow) -> Result<f64, RoutingError> {
    check_flow(net, flow)?;
    Ok(net.edges().iter().zip(&flow.edge_flows).map(|(e, &x)| e.cost.primitive(x)).sum())
}

/// Replaces each edge cost by `max(c_e(x), c_e(f_e))`.
pub fn make_fictitious(net: &RoutingNetwork, flow: &EdgeFlow) -> Result<RoutingNetwork, RoutingError> {
    check_flow(net, flow)?;
    let costs = net.edges().iter().zip(&flow.edge_flows).map(|(e, &x)| e.cost.floored_at(x)).collect();
    net.with_costs(costs)
}
