//! Equilibrium and optimal flows by iterative linearization.
//!
//! Both problems minimize a separable convex function of the edge flows:
//! the potential `sum ∫ c_e` for equilibria and the total cost
//! `sum x c_e(x)` for optima. Each sweep linearizes the objective at the
//! current flow, finds every commodity's shortest path under the
//! linearized edge lengths (`c_e` or the marginal cost), and moves flow
//! from each used path onto it with an exact line search. The duality gap
//! of the linearization certifies convergence.

use alloc::vec;
use alloc::vec::Vec;

use super::feasible::feasible_paths;
use super::shortest_path::{path_length, shortest_path};
use super::{EdgeFlow, RoutingError, RoutingNetwork};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Wardrop equilibrium: minimizes the potential.
    Equilibrium,
    /// System optimum: minimizes the total cost.
    Optimal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Target relative gap.
    pub tol: f64,
    pub max_iterations: usize,
    /// M/M/1 edges keep `f_e <= (1 - mm1_margin) u_e`.
    pub mm1_margin: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { tol: 1e-6, max_iterations: 100_000, mm1_margin: 1e-6 }
    }
}

impl SolverOptions {
    pub fn with_tol(tol: f64) -> Self {
        SolverOptions { tol, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathFlow {
    pub edges: Vec<usize>,
    pub flow: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub objective_kind: Objective,
    pub flow: EdgeFlow,
    /// Potential for equilibria, total cost for optima.
    pub objective: f64,
    /// `sum_e c_e(f_e) f_e` at the returned flow.
    pub total_cost: f64,
    pub relative_gap: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Per commodity, the shortest path length under the solver's edge
    /// lengths (`c_e` for equilibria, marginal cost for optima).
    pub shortest_path_lengths: Vec<f64>,
    pub paths: Vec<Vec<PathFlow>>,
}

impl SolveReport {
    /// The cost is only approximate unless the gap closed exactly.
    pub fn is_approximate(&self) -> bool {
        self.relative_gap > 0.0
    }

    /// Largest excess of a used path's length over its commodity's
    /// shortest path length. Paths carrying less than `1e-9` of the rate
    /// are ignored.
    pub fn max_path_excess(&self, net: &RoutingNetwork) -> f64 {
        let lengths = edge_lengths(net, self.objective_kind, &self.flow.edge_flows);
        let mut worst: f64 = 0.0;
        for ((paths, c), &shortest) in self.paths.iter().zip(net.commodities()).zip(&self.shortest_path_lengths) {
            for p in paths.iter().filter(|p| p.flow > 1e-9 * c.rate) {
                worst = worst.max(path_length(&lengths, &p.edges) - shortest);
            }
        }
        worst
    }
}

pub fn equilibrium_flow(net: &RoutingNetwork, options: &SolverOptions) -> Result<SolveReport, RoutingError> {
    solve(net, Objective::Equilibrium, options)
}

pub fn optimal_flow(net: &RoutingNetwork, options: &SolverOptions) -> Result<SolveReport, RoutingError> {
    solve(net, Objective::Optimal, options)
}

fn edge_length(net: &RoutingNetwork, objective: Objective, e: usize, x: f64) -> f64 {
    let cost = &net.edges()[e].cost;
    match objective {
        Objective::Equilibrium => cost.eval(x),
        Objective::Optimal => cost.marginal(x),
    }
}

fn edge_lengths(net: &RoutingNetwork, objective: Objective, flows: &[f64]) -> Vec<f64> {
    (0..net.edges().len()).map(|e| edge_length(net, objective, e, flows[e])).collect()
}

fn objective_value(net: &RoutingNetwork, objective: Objective, flows: &[f64]) -> f64 {
    net.edges()
        .iter()
        .zip(flows)
        .map(|(e, &x)| match objective {
            Objective::Equilibrium => e.cost.primitive(x),
            Objective::Optimal => e.cost.total(x),
        })
        .sum()
}

struct Solver<'a> {
    net: &'a RoutingNetwork,
    objective: Objective,
    caps: Vec<f64>,
    flows: Vec<f64>,
    paths: Vec<Vec<PathFlow>>,
}

pub fn solve(net: &RoutingNetwork, objective: Objective, options: &SolverOptions) -> Result<SolveReport, RoutingError> {
    if !(options.tol.is_finite() && options.tol > 0.0) {
        return Err(RoutingError::InvalidParameter { name: "tol", reason: "must be finite and positive" });
    }
    if !(0.0..1.0).contains(&options.mm1_margin) {
        return Err(RoutingError::InvalidParameter { name: "mm1_margin", reason: "must lie in [0, 1)" });
    }
    let caps: Vec<f64> = net.edges().iter().map(|e| e.cost.capacity().map_or(f64::INFINITY, |u| u * (1.0 - options.mm1_margin))).collect();
    let mut solver = Solver { net, objective, caps, flows: vec![0.0; net.edges().len()], paths: Vec::new() };
    solver.initialize()?;

    let mut best_lower = f64::NEG_INFINITY;
    let mut iterations = 0;
    loop {
        let lengths = edge_lengths(net, objective, &solver.flows);
        let value = objective_value(net, objective, &solver.flows);
        let mut gap = 0.0;
        let mut shortest = Vec::with_capacity(net.commodities().len());
        for (c, paths) in net.commodities().iter().zip(&solver.paths) {
            let sp = shortest_path(net, &lengths, c.source, c.sink).ok_or(RoutingError::Stalled)?;
            let used: f64 = paths.iter().map(|p| p.flow * path_length(&lengths, &p.edges)).sum();
            gap += (used - c.rate * sp.length).max(0.0);
            shortest.push(sp.length);
        }
        best_lower = best_lower.max(value - gap);
        let relative_gap = ((value - best_lower) / value.abs().max(1.0)).max(0.0);
        let converged = relative_gap <= options.tol;
        if converged || iterations >= options.max_iterations {
            let per_commodity = solver.per_commodity();
            let flow = EdgeFlow { edge_flows: solver.flows.clone(), per_commodity: Some(per_commodity) };
            let total_cost = net.edges().iter().zip(&solver.flows).map(|(e, &x)| e.cost.total(x)).sum();
            return Ok(SolveReport {
                objective_kind: objective,
                flow,
                objective: value,
                total_cost,
                relative_gap,
                iterations,
                converged,
                shortest_path_lengths: shortest,
                paths: solver.paths,
            });
        }
        for i in 0..net.commodities().len() {
            solver.equilibrate(i)?;
        }
        solver.rebuild_flows();
        iterations += 1;
    }
}

impl Solver<'_> {
    /// All-or-nothing on zero-flow shortest paths; when that overloads an
    /// M/M/1 edge, a capacity-respecting augmenting-path routing instead.
    fn initialize(&mut self) -> Result<(), RoutingError> {
        let zero = edge_lengths(self.net, self.objective, &self.flows);
        let mut paths = Vec::with_capacity(self.net.commodities().len());
        for c in self.net.commodities() {
            let sp = shortest_path(self.net, &zero, c.source, c.sink).ok_or(RoutingError::Stalled)?;
            paths.push(vec![PathFlow { edges: sp.edges, flow: c.rate }]);
        }
        self.paths = paths;
        self.rebuild_flows();
        if self.flows.iter().zip(&self.caps).any(|(f, cap)| f > cap) {
            self.paths = feasible_paths(self.net, &self.caps)?
                .into_iter()
                .map(|ps| ps.into_iter().map(|(edges, flow)| PathFlow { edges, flow }).collect())
                .collect();
            self.rebuild_flows();
        }
        Ok(())
    }

    fn rebuild_flows(&mut self) {
        self.flows.iter_mut().for_each(|f| *f = 0.0);
        for paths in &self.paths {
            for p in paths {
                for &e in &p.edges {
                    self.flows[e] += p.flow;
                }
            }
        }
    }

    fn per_commodity(&self) -> Vec<Vec<f64>> {
        self.paths
            .iter()
            .map(|paths| {
                let mut f = vec![0.0; self.net.edges().len()];
                for p in paths {
                    for &e in &p.edges {
                        f[e] += p.flow;
                    }
                }
                f
            })
            .collect()
    }

    /// Moves flow of commodity `i` from each of its used paths onto its
    /// current shortest path.
    fn equilibrate(&mut self, i: usize) -> Result<(), RoutingError> {
        let c = self.net.commodities()[i];
        let lengths = edge_lengths(self.net, self.objective, &self.flows);
        let sp = shortest_path(self.net, &lengths, c.source, c.sink).ok_or(RoutingError::Stalled)?;
        let target = match self.paths[i].iter().position(|p| p.edges == sp.edges) {
            Some(t) => t,
            None => {
                self.paths[i].push(PathFlow { edges: sp.edges, flow: 0.0 });
                self.paths[i].len() - 1
            }
        };
        for p in 0..self.paths[i].len() {
            if p == target || self.paths[i][p].flow <= 0.0 {
                continue;
            }
            let (gain, lose) = difference(&self.paths[i][target].edges, &self.paths[i][p].edges);
            let amount = self.line_search(&gain, &lose, self.paths[i][p].flow);
            if amount <= 0.0 {
                continue;
            }
            for &e in &gain {
                self.flows[e] += amount;
            }
            for &e in &lose {
                self.flows[e] = (self.flows[e] - amount).max(0.0);
            }
            let moved_all = amount >= self.paths[i][p].flow;
            self.paths[i][p].flow = if moved_all { 0.0 } else { self.paths[i][p].flow - amount };
            self.paths[i][target].flow += amount;
        }
        self.paths[i].retain(|p| p.flow > 0.0);
        Ok(())
    }

    /// Exact minimization of the objective along the direction that adds
    /// `θ` to `gain` edges and removes it from `lose` edges, `θ ∈ [0, limit]`.
    /// The directional derivative is nondecreasing, so bisection on its
    /// sign finds the minimizer.
    fn line_search(&self, gain: &[usize], lose: &[usize], limit: f64) -> f64 {
        let mut hi = limit;
        for &e in gain {
            hi = hi.min(self.caps[e] - self.flows[e]);
        }
        if hi.is_nan() || hi <= 0.0 {
            return 0.0;
        }
        let slope = |t: f64| -> f64 {
            let up: f64 = gain.iter().map(|&e| edge_length(self.net, self.objective, e, self.flows[e] + t)).sum();
            let down: f64 = lose.iter().map(|&e| edge_length(self.net, self.objective, e, (self.flows[e] - t).max(0.0))).sum();
            up - down
        };
        if slope(0.0) >= 0.0 {
            return 0.0;
        }
        if slope(hi) <= 0.0 {
            return hi;
        }
        let mut lo = 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if slope(mid) <= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PoaReport {
    pub equilibrium: SolveReport,
    pub optimal: SolveReport,
    /// `None` when the optimal cost is zero.
    pub ratio: Option<f64>,
}

impl PoaReport {
    pub fn is_approximate(&self) -> bool {
        self.equilibrium.is_approximate() || self.optimal.is_approximate()
    }
}

pub fn price_of_anarchy(net: &RoutingNetwork, options: &SolverOptions) -> Result<PoaReport, RoutingError> {
    let equilibrium = equilibrium_flow(net, options)?;
    let optimal = optimal_flow(net, options)?;
    let ratio = (optimal.total_cost > 0.0).then(|| equilibrium.total_cost / optimal.total_cost);
    Ok(PoaReport { equilibrium, optimal, ratio })
}

/// Edges only on `to`, edges only on `from`.
fn difference(to: &[usize], from: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let gain = to.iter().copied().filter(|e| !from.contains(e)).collect();
    let lose = from.iter().copied().filter(|e| !to.contains(e)).collect();
    (gain, lose)
}
