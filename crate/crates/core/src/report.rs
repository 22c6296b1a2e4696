//! Verification records shared by every engine.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::rational::{self, Rational};

/// A measured value: exact when it came from integer or rational
/// arithmetic, real when it came from a floating-point solver.
#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Exact(Rational),
    Real(f64),
}

impl Quantity {
    pub fn exact(q: Rational) -> Self {
        Quantity::Exact(q)
    }

    pub fn count(n: u64) -> Self {
        Quantity::Exact(Rational::from_integer(n.into()))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Quantity::Exact(q) => rational::to_f64(q),
            Quantity::Real(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Quantity::Exact(q) => Some(q),
            Quantity::Real(_) => None,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        match self {
            Quantity::Exact(q) => *q >= rational::zero(),
            Quantity::Real(x) => *x >= 0.0,
        }
    }

    /// Exact comparison when both sides are exact; IEEE comparison
    /// otherwise.
    pub fn compare(&self, other: &Quantity) -> Option<Ordering> {
        match (self, other) {
            (Quantity::Exact(a), Quantity::Exact(b)) => Some(a.cmp(b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }

    fn plus(&self, other: &Quantity) -> Quantity {
        match (self, other) {
            (Quantity::Exact(a), Quantity::Exact(b)) => Quantity::Exact(a + b),
            _ => Quantity::Real(self.to_f64() + other.to_f64()),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Exact(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Quantity::Exact(q) => write!(f, "{}/{} (~{:.6})", q.numer(), q.denom(), rational::to_f64(q)),
            Quantity::Real(x) => write!(f, "{x}"),
        }
    }
}

/// One bound check: `left <= right + slack`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub claim: String,
    pub left: Quantity,
    pub right: Quantity,
    pub slack: Quantity,
    pub pass: bool,
    pub context: Vec<(String, String)>,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>, left: Quantity, right: Quantity, slack: Quantity) -> Self {
        let pass = holds(&left, &right, &slack);
        VerificationReport { claim: claim.into(), left, right, slack, pass, context: Vec::new() }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.context.push((key.into(), value.into()));
        self
    }

    /// Recomputes the pass flag from the stored sides.
    pub fn recompute_pass(&self) -> bool {
        holds(&self.left, &self.right, &self.slack)
    }

    /// `right + slack - left`; negative on failure.
    pub fn margin(&self) -> f64 {
        self.right.to_f64() + self.slack.to_f64() - self.left.to_f64()
    }
}

fn holds(left: &Quantity, right: &Quantity, slack: &Quantity) -> bool {
    matches!(left.compare(&right.plus(slack)), Some(Ordering::Less | Ordering::Equal))
}
