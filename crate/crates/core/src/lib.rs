//! Resource augmentation case studies.
//!
//! Three engines share one verification vocabulary:
//!
//! * [`paging`]: demand-paging simulation (LRU, FIFO, furthest-in-future),
//!   an exhaustive offline oracle, block decompositions and adversarial
//!   request generators.
//! * [`routing`]: selfish routing over directed networks with
//!   flow-dependent edge costs; equilibrium and optimal flows, price of
//!   anarchy and the cost-function transforms used by the augmentation
//!   bounds.
//! * [`scheduling`]: exact event-driven single-machine simulation of SRPT
//!   and SETF at arbitrary rational speed, flow-time and idle-time metrics,
//!   and the interference-set diagnostics for SETF.
//!
//! [`lab`] ties them together: performance curves over resource levels and
//! the checks that compare a protagonist with a resource-handicapped
//! benchmark. Every check produces a [`report::VerificationReport`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod lab;
pub mod paging;
pub mod rational;
pub mod report;
pub mod routing;
pub mod scheduling;

pub use rational::Rational;
pub use report::{Quantity, VerificationReport};

/// Seed used by generators when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_2019;
