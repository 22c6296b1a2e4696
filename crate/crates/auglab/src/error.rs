use std::path::Path;

use auglab_core::lab::LabError;
use auglab_core::paging::PagingError;
use auglab_core::routing::RoutingError;
use auglab_core::scheduling::SchedulingError;

/// A rejected input. The message always names the offending field.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("invalid {field}: {reason}")]
    Field { field: String, reason: String },
}

impl InputError {
    pub fn field(field: impl Into<String>, reason: impl Into<String>) -> Self {
        InputError::Field { field: field.into(), reason: reason.into() }
    }

    pub fn read(path: &Path, source: std::io::Error) -> Self {
        InputError::Read { path: path.display().to_string(), source }
    }

    pub fn write(path: &Path, source: std::io::Error) -> Self {
        InputError::Write { path: path.display().to_string(), source }
    }

    /// Field name used in the message, or the path for IO failures.
    pub fn field_name(&self) -> &str {
        match self {
            InputError::Read { path, .. } | InputError::Write { path, .. } => path,
            InputError::Field { field, .. } => field,
        }
    }
}

impl From<PagingError> for InputError {
    fn from(err: PagingError) -> Self {
        let field = match &err {
            PagingError::ZeroCacheSize => String::from("k"),
            PagingError::EmptyUniverse => String::from("N"),
            PagingError::PageOutOfRange { index, .. } => format!("request {index}"),
            PagingError::NotOnline(_) => String::from("policy"),
            PagingError::OracleGuard { what, .. } => String::from(*what),
            PagingError::InvalidParameter { name, .. } => String::from(*name),
        };
        InputError::field(field, err.to_string())
    }
}

impl From<RoutingError> for InputError {
    fn from(err: RoutingError) -> Self {
        let field = match &err {
            RoutingError::VertexOutOfRange { what, index, .. } => {
                let (list, end) = what.split_once(' ').unwrap_or((what, ""));
                let list = if list == "edge" { "edges" } else { "commodities" };
                format!("{list}[{index}].{end}")
            }
            RoutingError::EdgeCost { edge, .. } => format!("edges[{edge}].cost"),
            RoutingError::SelfLoop { edge } => format!("edges[{edge}]"),
            RoutingError::InvalidRate { commodity } | RoutingError::Mm1Infeasible { commodity, .. } => {
                format!("commodities[{commodity}].rate")
            }
            RoutingError::Unreachable { commodity } => format!("commodities[{commodity}]"),
            RoutingError::InvalidParameter { name, .. } => String::from(*name),
            RoutingError::InvalidCost { .. } => String::from("cost"),
            RoutingError::InfeasibleFlow { .. } => String::from("edge_flows"),
            RoutingError::Stalled => String::from("net"),
        };
        InputError::field(field, err.to_string())
    }
}

impl From<SchedulingError> for InputError {
    fn from(err: SchedulingError) -> Self {
        let field = match &err {
            SchedulingError::NonPositiveProcessing { id } => format!("job {id} processing"),
            SchedulingError::NegativeRelease { id } => format!("job {id} release"),
            SchedulingError::DuplicateId { id } => format!("job {id} id"),
            SchedulingError::NonPositiveSpeed => String::from("speed"),
            SchedulingError::InvalidParameter { name, .. } => String::from(*name),
            SchedulingError::BeyondHorizon { .. } => String::from("t"),
            SchedulingError::InvalidTimeline { .. } => String::from("intervals"),
            SchedulingError::OracleGuard { what, .. } => String::from(*what),
        };
        InputError::field(field, err.to_string())
    }
}

impl From<LabError> for InputError {
    fn from(err: LabError) -> Self {
        match err {
            LabError::Paging(e) => e.into(),
            LabError::Routing(e) => e.into(),
            LabError::Scheduling(e) => e.into(),
            LabError::InvalidParameter { name, .. } => InputError::field(name, err.to_string()),
            LabError::EngineMismatch => InputError::field("engine", err.to_string()),
        }
    }
}
