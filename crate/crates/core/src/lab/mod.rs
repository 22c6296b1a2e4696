//! Cross-engine checks: performance curves over resource levels and the
//! comparisons of a protagonist with a resource-handicapped benchmark.

mod curve;
mod loose;
mod paging;
mod routing;

pub use curve::{curve, curve_point, integer_levels, Engine, Instance, LabError, PerformanceCurve};
pub use loose::{loose_classify, Category, LooseClassification, LooseEntry};
pub use paging::{verify_lru_ra, verify_ra, verify_ra_sweep};
pub use routing::{
    routing_loose_curve, verify_rate_augmentation, verify_slower_network, RoutingLoosePoint, RoutingLooseReport, ROUTING_SLACK,
};
