//! Selfish routing: networks with flow-dependent edge costs, equilibrium
//! and optimal flows, and the price of anarchy.

mod cost;
mod feasible;
mod flow;
mod generators;
mod network;
mod oracle;
mod shortest_path;
mod solver;

use alloc::boxed::Box;

pub use cost::CostFunction;
pub use flow::{check_flow, make_fictitious, potential, total_cost, EdgeFlow};
pub use generators::{gen_random_network, gen_random_parallel_links, gen_staircase};
pub use network::{Commodity, Edge, RoutingNetwork};
pub use oracle::{parallel_link_oracle, ParallelSolution};
pub use shortest_path::{path_length, shortest_path, ShortestPath};
pub use solver::{equilibrium_flow, optimal_flow, price_of_anarchy, solve, Objective, PathFlow, PoaReport, SolveReport, SolverOptions};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RoutingError {
    #[error("invalid cost function: {reason}")]
    InvalidCost { reason: &'static str },
    #[error("edge {edge}: {source}")]
    EdgeCost { edge: usize, source: Box<RoutingError> },
    #[error("{what} {index}: vertex {vertex} outside [0, {vertices})")]
    VertexOutOfRange { what: &'static str, index: usize, vertex: usize, vertices: usize },
    #[error("edge {edge} is a self-loop")]
    SelfLoop { edge: usize },
    #[error("commodity {commodity}: rate must be finite and nonnegative")]
    InvalidRate { commodity: usize },
    #[error("commodity {commodity}: sink unreachable from source")]
    Unreachable { commodity: usize },
    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: &'static str },
    #[error("infeasible flow: {reason}")]
    InfeasibleFlow { reason: &'static str },
    #[error("commodity {commodity}: M/M/1 capacities admit {routable} of rate {rate}")]
    Mm1Infeasible { commodity: usize, routable: f64, rate: f64 },
    #[error("no finite-cost path remains for some commodity")]
    Stalled,
}
