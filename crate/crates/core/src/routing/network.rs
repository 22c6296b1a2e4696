use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{CostFunction, RoutingError};

#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub cost: CostFunction,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Commodity {
    pub source: usize,
    pub sink: usize,
    pub rate: f64,
}

/// Directed network with per-edge cost functions and a list of
/// source-sink commodities. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct RoutingNetwork {
    vertices: usize,
    edges: Vec<Edge>,
    commodities: Vec<Commodity>,
    out_edges: Vec<Vec<usize>>,
}

impl RoutingNetwork {
    /// Validates the network. Zero-rate commodities are dropped.
    pub fn new(vertices: usize, edges: Vec<Edge>, commodities: Vec<Commodity>) -> Result<Self, RoutingError> {
        for (index, e) in edges.iter().enumerate() {
            for (what, v) in [("edge tail", e.tail), ("edge head", e.head)] {
                if v >= vertices {
                    return Err(RoutingError::VertexOutOfRange { what, index, vertex: v, vertices });
                }
            }
            if e.tail == e.head {
                return Err(RoutingError::SelfLoop { edge: index });
            }
            e.cost.validate().map_err(|err| RoutingError::EdgeCost { edge: index, source: alloc::boxed::Box::new(err) })?;
        }
        let mut kept = Vec::with_capacity(commodities.len());
        for (index, c) in commodities.into_iter().enumerate() {
            for (what, v) in [("commodity source", c.source), ("commodity sink", c.sink)] {
                if v >= vertices {
                    return Err(RoutingError::VertexOutOfRange { what, index, vertex: v, vertices });
                }
            }
            if !(c.rate.is_finite() && c.rate >= 0.0) {
                return Err(RoutingError::InvalidRate { commodity: index });
            }
            if c.rate == 0.0 {
                continue;
            }
            if c.source == c.sink {
                return Err(RoutingError::InvalidParameter { name: "commodity", reason: "source and sink coincide" });
            }
            kept.push((index, c));
        }
        let mut out_edges = vec![Vec::new(); vertices];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.tail].push(i);
        }
        let net = RoutingNetwork { vertices, edges, commodities: Vec::new(), out_edges };
        for &(index, c) in &kept {
            if !net.reachable(c.source, c.sink) {
                return Err(RoutingError::Unreachable { commodity: index });
            }
        }
        Ok(RoutingNetwork { commodities: kept.into_iter().map(|(_, c)| c).collect(), ..net })
    }

    /// Two vertices joined by one edge per cost function, one commodity.
    pub fn parallel_links(costs: Vec<CostFunction>, rate: f64) -> Result<Self, RoutingError> {
        let edges = costs.into_iter().map(|cost| Edge { tail: 0, head: 1, cost }).collect();
        RoutingNetwork::new(2, edges, vec![Commodity { source: 0, sink: 1, rate }])
    }

    /// Top edge with constant cost 1, bottom edge with cost `x`, rate 1.
    pub fn pigou() -> Self {
        Self::nonlinear_pigou(1.0)
    }

    /// Top edge with constant cost 1, bottom edge with cost `x^d`, rate 1.
    pub fn nonlinear_pigou(d: f64) -> Self {
        RoutingNetwork::parallel_links(vec![CostFunction::Constant { c: 1.0 }, CostFunction::Monomial { a: 1.0, d }], 1.0)
            .expect("pigou network is valid")
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn commodities(&self) -> &[Commodity] {
        &self.commodities
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn total_rate(&self) -> f64 {
        self.commodities.iter().map(|c| c.rate).sum()
    }

    /// Same topology with new cost functions, one per edge.
    pub fn with_costs(&self, costs: Vec<CostFunction>) -> Result<Self, RoutingError> {
        if costs.len() != self.edges.len() {
            return Err(RoutingError::InvalidParameter { name: "costs", reason: "one cost function per edge" });
        }
        let edges = self.edges.iter().zip(costs).map(|(e, cost)| Edge { cost, ..e.clone() }).collect();
        RoutingNetwork::new(self.vertices, edges, self.commodities.clone())
    }

    /// Multiplies every commodity rate by `factor`.
    pub fn scale_rates(&self, factor: f64) -> Result<Self, RoutingError> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(RoutingError::InvalidParameter { name: "factor", reason: "must be finite and positive" });
        }
        let mut net = self.clone();
        for c in &mut net.commodities {
            c.rate *= factor;
        }
        Ok(net)
    }

    /// Replaces every cost by `c(x / 2) / 2`.
    pub fn make_slower(&self) -> Self {
        let mut net = self.clone();
        for e in &mut net.edges {
            e.cost = e.cost.slowed();
        }
        net
    }

    fn reachable(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.vertices];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(v) = queue.pop_front() {
            if v == to {
                return true;
            }
            for &e in &self.out_edges[v] {
                let w = self.edges[e].head;
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> CostFunction {
        CostFunction::Affine { a: 1.0, b: 0.0 }
    }

    #[test]
    fn rejects_self_loops_and_unreachable_sinks() {
        let e = |tail, head| Edge { tail, head, cost: unit() };
        let c = Commodity { source: 0, sink: 2, rate: 1.0 };
        assert_eq!(RoutingNetwork::new(3, vec![e(1, 1)], vec![c]).unwrap_err(), RoutingError::SelfLoop { edge: 0 });
        assert_eq!(RoutingNetwork::new(3, vec![e(0, 1), e(2, 1)], vec![c]).unwrap_err(), RoutingError::Unreachable { commodity: 0 });
        assert!(matches!(RoutingNetwork::new(2, vec![e(0, 5)], vec![c]), Err(RoutingError::VertexOutOfRange { what: "edge head", .. })));
    }

    #[test]
    fn zero_rate_commodities_are_dropped() {
        let edges = vec![Edge { tail: 0, head: 1, cost: unit() }];
        let net =
            RoutingNetwork::new(3, edges, vec![Commodity { source: 0, sink: 1, rate: 2.0 }, Commodity { source: 0, sink: 2, rate: 0.0 }])
                .unwrap();
        assert_eq!(net.commodities().len(), 1);
    }

    #[test]
    fn scaling_rates() {
        let pigou = RoutingNetwork::pigou();
        assert_eq!(pigou.scale_rates(1.0).unwrap(), pigou);
        assert_eq!(pigou.scale_rates(2.0).unwrap().commodities()[0].rate, 2.0);
        assert!(pigou.scale_rates(0.0).is_err());
    }

    #[test]
    fn slower_mm1_doubles_capacity() {
        let net = RoutingNetwork::parallel_links(vec![CostFunction::Mm1 { u: 2.0 }], 1.0).unwrap();
        assert_eq!(net.make_slower().edges()[0].cost, CostFunction::Mm1 { u: 4.0 });
    }
}
