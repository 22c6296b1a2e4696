//! Independent one-dimensional solver for networks of parallel links.
//!
//! On parallel links every edge is a path, so an equilibrium is a level
//! `L` with `c_e(f_e) = L` on used links, `c_e(0) >= L` on unused ones and
//! `sum f_e = r`. The same holds for optima with marginal costs in place of
//! `c_e`. Both are found by nested bisection.

use alloc::vec::Vec;

use super::{CostFunction, Objective, RoutingError, RoutingNetwork};

const STEPS: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub struct ParallelSolution {
    /// Common length of all used links.
    pub level: f64,
    pub flows: Vec<f64>,
}

fn length(cost: &CostFunction, objective: Objective, x: f64) -> f64 {
    match objective {
        Objective::Equilibrium => cost.eval(x),
        Objective::Optimal => cost.marginal(x),
    }
}

/// Returns `(inf {x : len(x) >= level}, sup {x : len(x) <= level})`,
/// both clipped to `[0, limit]`.
fn preimage(cost: &CostFunction, objective: Objective, level: f64, limit: f64) -> (f64, f64) {
    let upper = cost.capacity().map_or(limit, |u| u.min(limit));
    let search = |below: &dyn Fn(f64) -> bool| -> f64 {
        if !below(0.0) {
            return 0.0;
        }
        if below(upper) {
            return upper;
        }
        let (mut lo, mut hi) = (0.0, upper);
        for _ in 0..STEPS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if below(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };
    let lo = search(&|x| length(cost, objective, x) < level);
    let hi = search(&|x| length(cost, objective, x) <= level);
    (lo, hi.max(lo))
}

/// Solves the single-commodity parallel-link network `net` (every edge
/// from vertex 0 to vertex 1). Flow is split among links whose length is
/// flat at the common level in proportion to the width of the flat part.
pub fn parallel_link_oracle(net: &RoutingNetwork, objective: Objective) -> Result<ParallelSolution, RoutingError> {
    let rate = match net.commodities() {
        [c] if net.edges().iter().all(|e| e.tail == c.source && e.head == c.sink) => c.rate,
        _ => return Err(RoutingError::InvalidParameter { name: "network", reason: "expected one commodity over parallel links" }),
    };
    let costs: Vec<&CostFunction> = net.edges().iter().map(|e| &e.cost).collect();
    let capacity: f64 = costs.iter().map(|c| c.capacity().unwrap_or(f64::INFINITY)).sum();
    if capacity <= rate {
        return Err(RoutingError::Mm1Infeasible { commodity: 0, routable: capacity, rate });
    }
    let supply = |level: f64| -> f64 { costs.iter().map(|c| preimage(c, objective, level, rate).1).sum() };

    let mut lo = costs.iter().map(|c| length(c, objective, 0.0)).fold(f64::INFINITY, f64::min);
    let mut hi = lo.abs().max(1.0);
    while supply(hi) < rate {
        lo = hi;
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(RoutingError::InvalidParameter { name: "network", reason: "no finite equilibrium level" });
        }
    }
    if supply(lo) >= rate {
        hi = lo;
    }
    for _ in 0..STEPS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if supply(mid) >= rate {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let bounds: Vec<(f64, f64)> = costs.iter().map(|c| preimage(c, objective, hi, rate)).collect();
    let floor: f64 = bounds.iter().map(|b| b.0).sum();
    let width: f64 = bounds.iter().map(|b| b.1 - b.0).sum();
    let share = if width > 0.0 { ((rate - floor) / width).clamp(0.0, 1.0) } else { 0.0 };
    let flows = bounds.iter().map(|&(l, h)| l + share * (h - l)).collect();
    Ok(ParallelSolution { level: hi, flows })
}
