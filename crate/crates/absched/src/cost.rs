//! Closed-form single-machine batch cost functions (quadratic model) and
//! the direct formula for the linear model.
//!
//! All functions assume a validated instance (see
//! [`crate::instance::Instance::validate`]); within those bounds every
//! intermediate value fits in `u64`.

use crate::instance::{CostMode, MachineParams};

/// A completion time that may be unattainable.
///
/// `Infeasible` compares greater than every finite cost and is absorbing
/// under addition, so minimum/monotonicity code needs no special cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cost {
    Finite(u64),
    Infeasible,
}

impl Cost {
    pub fn is_finite(self) -> bool {
        matches!(self, Cost::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Cost::Finite(v) => Some(v),
            Cost::Infeasible => None,
        }
    }
}

impl From<u64> for Cost {
    fn from(v: u64) -> Self {
        Cost::Finite(v)
    }
}

impl std::ops::Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        match (self, rhs) {
            (Cost::Finite(a), Cost::Finite(b)) => Cost::Finite(a + b),
            _ => Cost::Infeasible,
        }
    }
}

impl std::fmt::Display for Cost {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cost::Finite(v) => write!(f, "{v}"),
            Cost::Infeasible => write!(f, "infeasible"),
        }
    }
}

/// Cheapest way to spread `jobs` over exactly `batches` possibly-empty
/// batches: `batches` setups of `t` plus `k` times the sum of squared batch
/// sizes, which is minimized by the balanced split.
fn split_cost(k: u64, t: u64, jobs: u64, batches: u64) -> Cost {
    if batches == 0 {
        return if jobs == 0 {
            Cost::Finite(0)
        } else {
            Cost::Infeasible
        };
    }
    let q = jobs / batches;
    let r = jobs % batches;
    // r batches of size q+1, the remaining batches of size q
    Cost::Finite(batches * t + k * (r * (q + 1) * (q + 1) + (batches - r) * q * q))
}

/// Minimum time to process `jobs` A-jobs in exactly `batches` A-batches,
/// empty batches allowed.
pub fn cost_a(machine: &MachineParams, jobs: u64, batches: u64) -> Cost {
    split_cost(machine.k_a, machine.t_a, jobs, batches)
}

/// Minimum time to process `jobs` B-jobs in exactly `batches` B-batches,
/// empty batches allowed.
pub fn cost_b(machine: &MachineParams, jobs: u64, batches: u64) -> Cost {
    split_cost(machine.k_b, machine.t_b, jobs, batches)
}

/// Best A-cost over the A-batch counts compatible with `b_batches` B-batches
/// under alternation: one less, equal, or one more (never negative).
pub fn cost_a_adjacent(machine: &MachineParams, jobs: u64, b_batches: u64) -> Cost {
    (b_batches.saturating_sub(1)..=b_batches + 1)
        .map(|s| cost_a(machine, jobs, s))
        .min()
        .expect("window is never empty")
}

/// Time for the task-combination `(a_jobs, b_jobs)` when exactly `b_batches`
/// B-batches are used: all B-work plus the best compatible A-split.
pub fn combined_cost(machine: &MachineParams, a_jobs: u64, b_jobs: u64, b_batches: u64) -> Cost {
    cost_b(machine, b_jobs, b_batches) + cost_a_adjacent(machine, a_jobs, b_batches)
}

/// Minimum time for one machine to finish `a_jobs` A-jobs and `b_jobs`
/// B-jobs with non-empty alternating batches (quadratic model).
///
/// The B-batch count ranges over `[0, min(b_jobs, a_jobs+1)]`: more batches
/// than B-jobs would leave one empty, and alternation caps the count at one
/// more than the number of A-batches.
pub fn min_finish_time(machine: &MachineParams, a_jobs: u64, b_jobs: u64) -> Cost {
    (0..=b_jobs.min(a_jobs + 1))
        .map(|s| combined_cost(machine, a_jobs, b_jobs, s))
        .min()
        .expect("range always contains 0")
}

/// Minimum finish time in the linear model, where one A-batch followed by
/// one B-batch is optimal.
pub fn linear_finish_time(machine: &MachineParams, a_jobs: u64, b_jobs: u64) -> u64 {
    let mut total = machine.k_a * a_jobs + machine.k_b * b_jobs;
    if a_jobs > 0 {
        total += machine.t_a;
    }
    if b_jobs > 0 {
        total += machine.t_b;
    }
    total
}

/// Minimum single-machine finish time under either cost model.
pub fn finish_time(machine: &MachineParams, a_jobs: u64, b_jobs: u64, mode: CostMode) -> Cost {
    match mode {
        CostMode::Quadratic => min_finish_time(machine, a_jobs, b_jobs),
        CostMode::Linear => Cost::Finite(linear_finish_time(machine, a_jobs, b_jobs)),
    }
}

/// Largest `b` in `[b_batches, b_cap]` whose combined cost with exactly
/// `b_batches` B-batches stays within `budget`, or `None` if even
/// `b = b_batches` does not fit.
///
/// Uses that the B-cost is non-decreasing in the job count for a fixed
/// batch count, so a binary search suffices.
pub fn max_feasible_b(
    machine: &MachineParams,
    a_jobs: u64,
    b_batches: u64,
    budget: u64,
    b_cap: u64,
) -> Option<u64> {
    if b_batches > b_cap {
        return None;
    }
    let a_part = match cost_a_adjacent(machine, a_jobs, b_batches) {
        Cost::Finite(c) => c,
        Cost::Infeasible => return None,
    };
    if a_part > budget {
        return None;
    }
    let b_budget = budget - a_part;
    let fits = |b: u64| match cost_b(machine, b, b_batches) {
        Cost::Finite(c) => c <= b_budget,
        Cost::Infeasible => false,
    };
    if !fits(b_batches) {
        return None;
    }
    let mut lo = b_batches;
    let mut hi = b_cap;
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Some(lo)
}
