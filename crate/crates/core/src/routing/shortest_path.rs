//! Label-setting shortest paths for nonnegative edge lengths.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::RoutingNetwork;

#[derive(Debug, Clone, PartialEq)]
pub struct ShortestPath {
    pub length: f64,
    /// Edge indices from source to sink.
    pub edges: Vec<usize>,
}

#[derive(PartialEq)]
struct Label {
    dist: f64,
    vertex: usize,
}

impl Eq for Label {}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        // min-heap on distance, then on vertex index
        other.dist.total_cmp(&self.dist).then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dijkstra from `source` to `sink`. Edges with infinite length are
/// unusable. `lengths` must be nonnegative.
pub fn shortest_path(net: &RoutingNetwork, lengths: &[f64], source: usize, sink: usize) -> Option<ShortestPath> {
    debug_assert_eq!(lengths.len(), net.edges().len());
    let n = net.vertices();
    let mut dist = vec![f64::INFINITY; n];
    let mut via: Vec<Option<usize>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Label { dist: 0.0, vertex: source });
    while let Some(Label { dist: d, vertex: v }) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        if v == sink {
            break;
        }
        for &e in net.out_edges(v) {
            let len = lengths[e];
            if !len.is_finite() {
                continue;
            }
            let w = net.edges()[e].head;
            let candidate = d + len;
            if candidate < dist[w] {
                dist[w] = candidate;
                via[w] = Some(e);
                heap.push(Label { dist: candidate, vertex: w });
            }
        }
    }
    if !dist[sink].is_finite() {
        return None;
    }
    let mut edges = Vec::new();
    let mut v = sink;
    while let Some(e) = via[v] {
        edges.push(e);
        v = net.edges()[e].tail;
    }
    edges.reverse();
    Some(ShortestPath { length: dist[sink], edges })
}

pub fn path_length(lengths: &[f64], path: &[usize]) -> f64 {
    path.iter().map(|&e| lengths[e]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::routing::{Commodity, CostFunction, Edge};

    fn diamond() -> RoutingNetwork {
        let e = |tail, head| Edge { tail, head, cost: CostFunction::Constant { c: 1.0 } };
        RoutingNetwork::new(4, vec![e(0, 1), e(0, 2), e(1, 3), e(2, 3), e(1, 2)], vec![Commodity { source: 0, sink: 3, rate: 1.0 }])
            .unwrap()
    }

    #[test]
    fn picks_the_cheaper_branch() {
        let net = diamond();
        let sp = shortest_path(&net, &[1.0, 2.0, 5.0, 1.0, 0.5], 0, 3).unwrap();
        assert_eq!(sp.edges, vec![0, 4, 3]);
        assert_eq!(sp.length, 2.5);
        assert_eq!(path_length(&[1.0, 2.0, 5.0, 1.0, 0.5], &sp.edges), 2.5);
    }

    #[test]
    fn infinite_edges_are_skipped() {
        let net = diamond();
        let inf = f64::INFINITY;
        assert!(shortest_path(&net, &[inf, inf, 1.0, 1.0, 1.0], 0, 3).is_none());
        let sp = shortest_path(&net, &[inf, 1.0, 1.0, 1.0, 1.0], 0, 3).unwrap();
        assert_eq!(sp.edges, vec![1, 3]);
    }
}
