//! JSON records for simulation results, curves, classifications and
//! verification reports.

use auglab_core::lab::{Category, LooseClassification, LooseEntry, PerformanceCurve, RoutingLoosePoint, RoutingLooseReport};
use auglab_core::paging::PagingSimResult;
use auglab_core::VerificationReport;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::{Dec, InputError, QuantityText, RationalText};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PagingRecord {
    pub policy: String,
    pub k: usize,
    pub faults: u64,
    pub len: usize,
}

impl From<&PagingSimResult> for PagingRecord {
    fn from(r: &PagingSimResult) -> Self {
        PagingRecord { policy: r.policy.name().into(), k: r.cache_size, faults: r.fault_count, len: r.len() }
    }
}

/// A [`VerificationReport`]; `context` keeps its insertion order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub claim: String,
    pub left: QuantityText,
    pub right: QuantityText,
    pub slack: QuantityText,
    pub pass: bool,
    pub context: Map<String, Value>,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        ReportRecord {
            claim: r.claim.clone(),
            left: QuantityText(r.left.clone()),
            right: QuantityText(r.right.clone()),
            slack: QuantityText(r.slack.clone()),
            pass: r.pass,
            context: r.context.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect(),
        }
    }
}

impl TryFrom<&ReportRecord> for VerificationReport {
    type Error = InputError;

    fn try_from(r: &ReportRecord) -> Result<Self, InputError> {
        let context = r
            .context
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => Ok((k.clone(), s.clone())),
                _ => Err(InputError::field(format!("context.{k}"), "must be a string")),
            })
            .collect::<Result<_, _>>()?;
        Ok(VerificationReport {
            claim: r.claim.clone(),
            left: r.left.0.clone(),
            right: r.right.0.clone(),
            slack: r.slack.0.clone(),
            pass: r.pass,
            context,
        })
    }
}

/// Every report of one command; `pass` is the conjunction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportBundle {
    pub command: String,
    pub pass: bool,
    pub failures: usize,
    pub reports: Vec<ReportRecord>,
}

impl ReportBundle {
    pub fn new(command: impl Into<String>, reports: &[VerificationReport]) -> Self {
        let failures = reports.iter().filter(|r| !r.pass).count();
        ReportBundle { command: command.into(), pass: failures == 0, failures, reports: reports.iter().map(Into::into).collect() }
    }

    pub fn to_reports(&self) -> Result<Vec<VerificationReport>, InputError> {
        self.reports.iter().map(TryInto::try_into).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveRecord {
    pub algorithm: String,
    pub instance: String,
    pub levels: Vec<QuantityText>,
    pub values: Vec<QuantityText>,
}

impl From<&PerformanceCurve> for CurveRecord {
    fn from(c: &PerformanceCurve) -> Self {
        CurveRecord {
            algorithm: c.algorithm.clone(),
            instance: c.instance.clone(),
            levels: c.levels.iter().cloned().map(QuantityText).collect(),
            values: c.values.iter().cloned().map(QuantityText).collect(),
        }
    }
}

impl TryFrom<&CurveRecord> for PerformanceCurve {
    type Error = InputError;

    fn try_from(r: &CurveRecord) -> Result<Self, InputError> {
        let unwrap = |v: &[QuantityText]| v.iter().map(|q| q.0.clone()).collect();
        Ok(PerformanceCurve::new(r.algorithm.clone(), r.instance.clone(), unwrap(&r.levels), unwrap(&r.values))?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LooseEntryRecord {
    pub k: usize,
    pub category: String,
    pub lru: u64,
    pub lru_plus_b: u64,
    pub fif: u64,
    /// Absent for exempt sizes.
    pub bound: Option<RationalText>,
    pub slack: RationalText,
    pub holds: bool,
    pub slack_material: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationRecord {
    pub eps: RationalText,
    pub delta: RationalText,
    pub n: usize,
    pub b: usize,
    pub len: usize,
    pub exempt_limit: usize,
    pub exempt_count: usize,
    pub pass: bool,
    pub entries: Vec<LooseEntryRecord>,
}

fn category(name: &str) -> Result<Category, InputError> {
    [Category::Competitive, Category::LowFaultRate, Category::Exempt]
        .into_iter()
        .find(|c| c.name() == name)
        .ok_or_else(|| InputError::field("category", format!("unknown category `{name}`")))
}

impl From<&LooseClassification> for ClassificationRecord {
    fn from(c: &LooseClassification) -> Self {
        ClassificationRecord {
            eps: RationalText(c.eps.clone()),
            delta: RationalText(c.delta.clone()),
            n: c.n,
            b: c.b,
            len: c.len,
            exempt_limit: c.exempt_limit,
            exempt_count: c.exempt_count(),
            pass: c.invariants_hold(),
            entries: c
                .entries
                .iter()
                .map(|e| LooseEntryRecord {
                    k: e.k,
                    category: e.category.name().into(),
                    lru: e.lru,
                    lru_plus_b: e.lru_plus_b,
                    fif: e.fif,
                    bound: e.bound.clone().map(RationalText),
                    slack: RationalText(e.slack.clone()),
                    holds: e.holds,
                    slack_material: e.slack_material,
                })
                .collect(),
        }
    }
}

impl TryFrom<&ClassificationRecord> for LooseClassification {
    type Error = InputError;

    fn try_from(r: &ClassificationRecord) -> Result<Self, InputError> {
        let entries = r
            .entries
            .iter()
            .map(|e| {
                Ok(LooseEntry {
                    k: e.k,
                    category: category(&e.category)?,
                    lru: e.lru,
                    lru_plus_b: e.lru_plus_b,
                    fif: e.fif,
                    bound: e.bound.clone().map(|b| b.0),
                    slack: e.slack.0.clone(),
                    holds: e.holds,
                    slack_material: e.slack_material,
                })
            })
            .collect::<Result<_, InputError>>()?;
        Ok(LooseClassification {
            eps: r.eps.0.clone(),
            delta: r.delta.0.clone(),
            n: r.n,
            b: r.b,
            len: r.len,
            exempt_limit: r.exempt_limit,
            entries,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoutingLoosePointRecord {
    pub factor: Dec,
    pub total_rate: Dec,
    pub price_of_anarchy: Option<Dec>,
    pub within_threshold: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoutingLooseRecord {
    pub beta: Dec,
    pub pi: Option<Dec>,
    pub threshold: Option<Dec>,
    pub fraction: Option<Dec>,
    pub points: Vec<RoutingLoosePointRecord>,
}

impl From<&RoutingLooseReport> for RoutingLooseRecord {
    fn from(r: &RoutingLooseReport) -> Self {
        RoutingLooseRecord {
            beta: Dec(r.beta),
            pi: r.pi.map(Dec),
            threshold: r.threshold.map(Dec),
            fraction: r.fraction.map(Dec),
            points: r
                .points
                .iter()
                .map(|p| RoutingLoosePointRecord {
                    factor: Dec(p.factor),
                    total_rate: Dec(p.total_rate),
                    price_of_anarchy: p.price_of_anarchy.map(Dec),
                    within_threshold: p.within_threshold,
                })
                .collect(),
        }
    }
}

impl From<&RoutingLooseRecord> for RoutingLooseReport {
    fn from(r: &RoutingLooseRecord) -> Self {
        RoutingLooseReport {
            beta: r.beta.0,
            pi: r.pi.map(|d| d.0),
            threshold: r.threshold.map(|d| d.0),
            fraction: r.fraction.map(|d| d.0),
            points: r
                .points
                .iter()
                .map(|p| RoutingLoosePoint {
                    factor: p.factor.0,
                    total_rate: p.total_rate.0,
                    price_of_anarchy: p.price_of_anarchy.map(|d| d.0),
                    within_threshold: p.within_threshold,
                })
                .collect(),
        }
    }
}
