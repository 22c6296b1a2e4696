//! Network files and flow exports. Every decimal is a string.

use auglab_core::routing::{Commodity, CostFunction, Edge, Objective, PoaReport, RoutingNetwork, SolveReport};
use serde::{Deserialize, Serialize};

use crate::{from_json, to_json, Dec, InputError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkFile {
    pub vertices: usize,
    pub edges: Vec<EdgeFile>,
    pub commodities: Vec<CommodityFile>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeFile {
    pub tail: usize,
    pub head: usize,
    pub cost: CostFile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CostFile {
    Constant { c: Dec },
    Affine { a: Dec, b: Dec },
    Monomial { a: Dec, d: Dec },
    Polynomial { coefficients: Vec<Dec> },
    Mm1 { u: Dec },
    Floored { base: Box<CostFile>, threshold: Dec, level: Dec },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommodityFile {
    pub source: usize,
    pub sink: usize,
    pub rate: Dec,
}

impl From<&CostFunction> for CostFile {
    fn from(c: &CostFunction) -> Self {
        match c {
            CostFunction::Constant { c } => CostFile::Constant { c: Dec(*c) },
            CostFunction::Affine { a, b } => CostFile::Affine { a: Dec(*a), b: Dec(*b) },
            CostFunction::Monomial { a, d } => CostFile::Monomial { a: Dec(*a), d: Dec(*d) },
            CostFunction::Polynomial { coefficients } => {
                CostFile::Polynomial { coefficients: coefficients.iter().copied().map(Dec).collect() }
            }
            CostFunction::Mm1 { u } => CostFile::Mm1 { u: Dec(*u) },
            CostFunction::Floored { base, threshold, level } => {
                CostFile::Floored { base: Box::new(base.as_ref().into()), threshold: Dec(*threshold), level: Dec(*level) }
            }
        }
    }
}

impl From<&CostFile> for CostFunction {
    fn from(c: &CostFile) -> Self {
        match c {
            CostFile::Constant { c } => CostFunction::Constant { c: c.0 },
            CostFile::Affine { a, b } => CostFunction::Affine { a: a.0, b: b.0 },
            CostFile::Monomial { a, d } => CostFunction::Monomial { a: a.0, d: d.0 },
            CostFile::Polynomial { coefficients } => CostFunction::Polynomial { coefficients: coefficients.iter().map(|d| d.0).collect() },
            CostFile::Mm1 { u } => CostFunction::Mm1 { u: u.0 },
            CostFile::Floored { base, threshold, level } => {
                CostFunction::Floored { base: Box::new(base.as_ref().into()), threshold: threshold.0, level: level.0 }
            }
        }
    }
}

impl From<&RoutingNetwork> for NetworkFile {
    fn from(net: &RoutingNetwork) -> Self {
        NetworkFile {
            vertices: net.vertices(),
            edges: net.edges().iter().map(|e| EdgeFile { tail: e.tail, head: e.head, cost: (&e.cost).into() }).collect(),
            commodities: net.commodities().iter().map(|c| CommodityFile { source: c.source, sink: c.sink, rate: Dec(c.rate) }).collect(),
        }
    }
}

impl TryFrom<&NetworkFile> for RoutingNetwork {
    type Error = InputError;

    fn try_from(file: &NetworkFile) -> Result<Self, InputError> {
        let edges = file.edges.iter().map(|e| Edge { tail: e.tail, head: e.head, cost: (&e.cost).into() }).collect();
        let commodities = file.commodities.iter().map(|c| Commodity { source: c.source, sink: c.sink, rate: c.rate.0 }).collect();
        Ok(RoutingNetwork::new(file.vertices, edges, commodities)?)
    }
}

pub fn parse_network(text: &str) -> Result<RoutingNetwork, InputError> {
    RoutingNetwork::try_from(&from_json::<NetworkFile>(text)?)
}

pub fn write_network(net: &RoutingNetwork) -> String {
    to_json(&NetworkFile::from(net))
}

/// A solved flow: `objective` is the minimized function's value (the
/// potential for equilibria, the total cost for optima) and `gap` the
/// relative gap certifying it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlowRecord {
    pub kind: String,
    pub edge_flows: Vec<Dec>,
    pub objective: Dec,
    pub gap: Dec,
    pub total_cost: Dec,
    pub iterations: u64,
    pub converged: bool,
}

pub fn objective_name(objective: Objective) -> &'static str {
    match objective {
        Objective::Equilibrium => "equilibrium",
        Objective::Optimal => "optimal",
    }
}

impl From<&SolveReport> for FlowRecord {
    fn from(r: &SolveReport) -> Self {
        FlowRecord {
            kind: objective_name(r.objective_kind).into(),
            edge_flows: r.flow.edge_flows.iter().copied().map(Dec).collect(),
            objective: Dec(r.objective),
            gap: Dec(r.relative_gap),
            total_cost: Dec(r.total_cost),
            iterations: r.iterations as u64,
            converged: r.converged,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoaRecord {
    /// Absent when the optimal cost is zero.
    pub ratio: Option<Dec>,
    pub equilibrium: FlowRecord,
    pub optimal: FlowRecord,
}

impl From<&PoaReport> for PoaRecord {
    fn from(r: &PoaReport) -> Self {
        PoaRecord { ratio: r.ratio.map(Dec), equilibrium: (&r.equilibrium).into(), optimal: (&r.optimal).into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use auglab_core::routing::{equilibrium_flow, gen_random_network, SolverOptions};

    #[test]
    fn networks_round_trip() {
        let floored = CostFunction::Affine { a: 0.3, b: 0.1 }.floored_at(0.7);
        let mut nets =
            vec![RoutingNetwork::pigou(), RoutingNetwork::parallel_links(vec![CostFunction::Mm1 { u: 2.0 }, floored], 1.0 / 3.0).unwrap()];
        nets.extend((0..5).map(|s| gen_random_network(10, s % 2 == 0, s).unwrap()));
        for net in nets {
            let text = write_network(&net);
            let back = parse_network(&text).unwrap();
            assert_eq!(back, net);
            assert_eq!(write_network(&back), text);
        }
    }

    #[test]
    fn reads_hand_written_files() {
        let text = r#"{"vertices": 2,
            "edges": [{"tail": 0, "head": 1, "cost": {"kind": "constant", "c": "1"}},
                      {"tail": 0, "head": 1, "cost": {"kind": "affine", "a": 1, "b": "0"}}],
            "commodities": [{"source": 0, "sink": 1, "rate": "1.0"}]}"#;
        assert_eq!(
            parse_network(text).unwrap(),
            RoutingNetwork::pigou().with_costs(vec![CostFunction::Constant { c: 1.0 }, CostFunction::Affine { a: 1.0, b: 0.0 },]).unwrap()
        );
    }

    #[test]
    fn errors_name_the_field() {
        let missing = r#"{"vertices": 2, "edges": [{"tail": 0, "head": 1, "cost": {"kind": "mm1"}}], "commodities": []}"#;
        assert!(parse_network(missing).unwrap_err().to_string().contains("edges[0].cost"));
        let bad_rate = r#"{"vertices": 2, "edges": [{"tail": 0, "head": 1, "cost": {"kind": "mm1", "u": "1"}}],
            "commodities": [{"source": 0, "sink": 1, "rate": "fast"}]}"#;
        assert_eq!(parse_network(bad_rate).unwrap_err().field_name(), "commodities[0].rate");
        let out_of_range = r#"{"vertices": 2, "edges": [{"tail": 0, "head": 7, "cost": {"kind": "constant", "c": "1"}}],
            "commodities": []}"#;
        assert_eq!(parse_network(out_of_range).unwrap_err().field_name(), "edges[0].head");
        let negative = r#"{"vertices": 2, "edges": [{"tail": 0, "head": 1, "cost": {"kind": "constant", "c": "-1"}}],
            "commodities": []}"#;
        assert_eq!(parse_network(negative).unwrap_err().field_name(), "edges[0].cost");
    }

    #[test]
    fn flow_records_round_trip() {
        let eq = equilibrium_flow(&RoutingNetwork::pigou(), &SolverOptions::default()).unwrap();
        let record = FlowRecord::from(&eq);
        let text = to_json(&record);
        assert_eq!(from_json::<FlowRecord>(&text).unwrap(), record);
        assert_eq!(record.edge_flows.len(), 2);
    }
}
