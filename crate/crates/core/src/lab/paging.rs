use alloc::format;
use alloc::vec::Vec;

use super::LabError;
use crate::paging::{decompose_blocks, fault_curve, simulate, PageRequestSequence, Policy};
use crate::rational::{self, Rational};
use crate::report::{Quantity, VerificationReport};

fn claim(policy: Policy) -> &'static str {
    match policy {
        Policy::Lru => "lru-resource-augmentation",
        Policy::Fifo => "fifo-resource-augmentation",
        Policy::Fif => "fif-resource-augmentation",
    }
}

fn report(policy: Policy, k: usize, h: usize, faults: u64, fif_h: u64, blocks: usize) -> VerificationReport {
    let ratio = Rational::new(k.into(), (k - h + 1).into());
    let right = &ratio * rational::from_usize(fif_h as usize);
    let b = blocks as u64;
    let upper = faults <= b * k as u64;
    let lower = fif_h >= b.saturating_sub(1) * (k - h + 1) as u64;
    VerificationReport::new(claim(policy), Quantity::count(faults), Quantity::Exact(right), Quantity::count(k as u64))
        .with("policy", policy.name())
        .with("k", format!("{k}"))
        .with("h", format!("{h}"))
        .with("fif_faults", format!("{fif_h}"))
        .with("blocks", format!("{blocks}"))
        .with("ratio", rational::format(&ratio))
        .with("block_upper_bound_holds", format!("{upper}"))
        .with("block_lower_bound_holds", format!("{lower}"))
}

fn check(k: usize, h: usize) -> Result<(), LabError> {
    if h == 0 || h > k {
        return Err(LabError::InvalidParameter { name: "h", reason: "requires 1 <= h <= k" });
    }
    Ok(())
}

/// Faults of `policy` with cache `k` against `k / (k - h + 1)` times the
/// optimal faults with cache `h`, with additive slack `k` for the last
/// block of the greedy decomposition. The block bounds
/// `faults <= b k` and `FIF(h) >= (b - 1)(k - h + 1)` are recorded too.
pub fn verify_ra(policy: Policy, z: &PageRequestSequence, k: usize, h: usize) -> Result<VerificationReport, LabError> {
    check(k, h)?;
    let faults = simulate(policy, k, z)?.fault_count;
    let fif = simulate(Policy::Fif, h, z)?.fault_count;
    let blocks = decompose_blocks(z, k)?.count();
    Ok(report(policy, k, h, faults, fif, blocks))
}

pub fn verify_lru_ra(z: &PageRequestSequence, k: usize, h: usize) -> Result<VerificationReport, LabError> {
    verify_ra(Policy::Lru, z, k, h)
}

/// Every pair `1 <= h <= k <= max_k`, in order of `k` then `h`, sharing one
/// simulation per cache size.
pub fn verify_ra_sweep(policy: Policy, z: &PageRequestSequence, max_k: usize) -> Result<Vec<VerificationReport>, LabError> {
    let faults = fault_curve(policy, z, max_k)?;
    let fif = fault_curve(Policy::Fif, z, max_k)?;
    let mut reports = Vec::with_capacity(max_k * (max_k + 1) / 2);
    for k in 1..=max_k {
        let blocks = decompose_blocks(z, k)?.count();
        for h in 1..=k {
            reports.push(report(policy, k, h, faults[k - 1], fif[h - 1], blocks));
        }
    }
    Ok(reports)
}
