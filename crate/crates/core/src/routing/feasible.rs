//! Feasible starting flows under M/M/1 capacities.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{RoutingError, RoutingNetwork};

/// Edge indices from source to sink, and the flow they carry.
pub(crate) type WeightedPath = (Vec<usize>, f64);

/// Routes `rate` units from `source` to `sink` within `caps` (infinite for
/// uncapacitated edges) by shortest augmenting paths. Returns the path
/// decomposition, or the largest routable amount when `rate` does not fit.
pub(crate) fn route_within_caps(
    net: &RoutingNetwork,
    caps: &[f64],
    source: usize,
    sink: usize,
    rate: f64,
) -> Result<Vec<WeightedPath>, f64> {
    let m = net.edges().len();
    // residual arc 2e is edge e forward, 2e + 1 is its reverse
    let mut flow = vec![0.0f64; m];
    let mut routed = 0.0;
    let mut adjacency = vec![Vec::new(); net.vertices()];
    for (i, e) in net.edges().iter().enumerate() {
        adjacency[e.tail].push(2 * i);
        adjacency[e.head].push(2 * i + 1);
    }
    let residual = |arc: usize, flow: &[f64]| -> f64 {
        let e = arc / 2;
        if arc.is_multiple_of(2) {
            caps[e] - flow[e]
        } else {
            flow[e]
        }
    };
    let eps = 1e-12 * rate.max(1.0);
    while rate - routed > eps {
        let mut via: Vec<Option<usize>> = vec![None; net.vertices()];
        let mut seen = vec![false; net.vertices()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            if v == sink {
                break;
            }
            for &arc in &adjacency[v] {
                let e = &net.edges()[arc / 2];
                let w = if arc.is_multiple_of(2) { e.head } else { e.tail };
                if !seen[w] && residual(arc, &flow) > eps {
                    seen[w] = true;
                    via[w] = Some(arc);
                    queue.push_back(w);
                }
            }
        }
        if !seen[sink] {
            return Err(routed);
        }
        let mut bottleneck = rate - routed;
        let mut v = sink;
        while let Some(arc) = via[v] {
            bottleneck = bottleneck.min(residual(arc, &flow));
            let e = &net.edges()[arc / 2];
            v = if arc.is_multiple_of(2) { e.tail } else { e.head };
        }
        let mut v = sink;
        while let Some(arc) = via[v] {
            let e = &net.edges()[arc / 2];
            if arc.is_multiple_of(2) {
                flow[arc / 2] += bottleneck;
                v = e.tail;
            } else {
                flow[arc / 2] -= bottleneck;
                v = e.head;
            }
        }
        routed += bottleneck;
    }
    Ok(decompose(net, flow, source, sink))
}

/// Splits an s-t flow into paths; leftover circulation is dropped.
fn decompose(net: &RoutingNetwork, mut flow: Vec<f64>, source: usize, sink: usize) -> Vec<WeightedPath> {
    let mut paths = Vec::new();
    let tiny = 1e-15;
    loop {
        let mut via: Vec<Option<usize>> = vec![None; net.vertices()];
        let mut seen = vec![false; net.vertices()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &e in net.out_edges(v) {
                let w = net.edges()[e].head;
                if !seen[w] && flow[e] > tiny {
                    seen[w] = true;
                    via[w] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        if !seen[sink] {
            return paths;
        }
        let mut edges = Vec::new();
        let mut v = sink;
        while let Some(e) = via[v] {
            edges.push(e);
            v = net.edges()[e].tail;
        }
        edges.reverse();
        let amount = edges.iter().map(|&e| flow[e]).fold(f64::INFINITY, f64::min);
        for &e in &edges {
            flow[e] -= amount;
        }
        paths.push((edges, amount));
    }
}

/// Routes every commodity in order on the capacity left by the previous
/// ones.
pub(crate) fn feasible_paths(net: &RoutingNetwork, caps: &[f64]) -> Result<Vec<Vec<WeightedPath>>, RoutingError> {
    let mut remaining = caps.to_vec();
    let mut all = Vec::with_capacity(net.commodities().len());
    for (index, c) in net.commodities().iter().enumerate() {
        let paths = route_within_caps(net, &remaining, c.source, c.sink, c.rate).map_err(|routed| RoutingError::Mm1Infeasible {
            commodity: index,
            routable: routed,
            rate: c.rate,
        })?;
        for (edges, amount) in &paths {
            for &e in edges {
                remaining[e] -= amount;
            }
        }
        all.push(paths);
    }
    Ok(all)
}
