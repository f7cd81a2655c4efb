//! Per-machine feasibility: which B-counts fit next to a given A-count
//! within a time bound. For every A-count the feasible B-counts form one
//! contiguous interval, which is what makes the machine-combining DP work.

use thiserror::Error;

use crate::cost::{combined_cost, linear_finish_time, max_feasible_b, Cost};
use crate::instance::{CostMode, MachineParams};

/// A closed, non-empty range of job counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
}

impl Interval {
    pub fn new(lo: u64, hi: u64) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn contains(&self, value: u64) -> bool {
        self.lo <= value && value <= self.hi
    }
}

/// The interval of feasible B-counts, or `None` when no count fits.
pub type FeasibleInterval = Option<Interval>;

/// All `b ∈ [0, b_cap]` this machine can finish together with `a_jobs`
/// A-jobs within `bound` time units.
pub fn feasible_interval(
    machine: &MachineParams,
    a_jobs: u64,
    bound: u64,
    b_cap: u64,
    mode: CostMode,
) -> FeasibleInterval {
    match mode {
        CostMode::Quadratic => quadratic_interval(machine, a_jobs, bound, b_cap),
        CostMode::Linear => linear_interval(machine, a_jobs, bound, b_cap),
    }
}

fn quadratic_interval(
    machine: &MachineParams,
    a_jobs: u64,
    bound: u64,
    b_cap: u64,
) -> FeasibleInterval {
    let mut found: FeasibleInterval = None;
    for b_batches in 0..=a_jobs + 1 {
        match max_feasible_b(machine, a_jobs, b_batches, bound, b_cap) {
            Some(reach) => {
                // the smallest b usable with this batch count is the count itself
                found = Some(match found {
                    None => Interval::new(b_batches, reach),
                    Some(iv) => Interval::new(iv.lo, iv.hi.max(reach)),
                });
            }
            None => {
                // workable batch counts form one contiguous run (the
                // diagonal cost is convex in the count), so once inside
                // and out again there is nothing further to find
                if found.is_some() {
                    break;
                }
            }
        }
    }
    found
}

fn linear_interval(
    machine: &MachineParams,
    a_jobs: u64,
    bound: u64,
    b_cap: u64,
) -> FeasibleInterval {
    let fits = |b: u64| linear_finish_time(machine, a_jobs, b) <= bound;
    if !fits(0) {
        return None;
    }
    let mut lo = 0u64;
    let mut hi = b_cap;
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Some(Interval::new(0, lo))
}

/// One feasible interval per A-count `a ∈ [0, a_max]`.
///
/// Non-empty rows always form a prefix: once a row is empty every later
/// row is empty too.
pub fn feasibility_rows(
    machine: &MachineParams,
    bound: u64,
    a_max: u64,
    b_cap: u64,
    mode: CostMode,
) -> Vec<FeasibleInterval> {
    (0..=a_max)
        .map(|a| feasible_interval(machine, a, bound, b_cap, mode))
        .collect()
}

/// How two consecutive non-empty feasibility rows connect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionWitness {
    /// This B-count lies in both rows.
    Overlap(u64),
    /// Row `a` reaches B-count `a+1` and row `a+1` reaches `a+2`.
    Diagonal,
}

/// Consecutive non-empty rows exhibit neither witness. The interval
/// structure guarantees this cannot happen for rows produced by
/// [`feasibility_rows`]; it exists so tests can detect a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no transition witness between row {row} and its successor")]
pub struct NoWitness {
    pub row: usize,
}

/// Classifies how `rows[a]` connects to `rows[a+1]`. Both rows must be
/// non-empty.
pub fn check_row_transition(
    rows: &[FeasibleInterval],
    a: usize,
) -> Result<TransitionWitness, NoWitness> {
    let lhs = rows[a].expect("row a must be non-empty");
    let rhs = rows[a + 1].expect("row a+1 must be non-empty");
    let lo = lhs.lo.max(rhs.lo);
    let hi = lhs.hi.min(rhs.hi);
    if lo <= hi {
        return Ok(TransitionWitness::Overlap(lo));
    }
    let diag = a as u64 + 1;
    if lhs.contains(diag) && rhs.contains(diag + 1) {
        return Ok(TransitionWitness::Diagonal);
    }
    Err(NoWitness { row: a })
}

/// The per-`(b, b_batches)` fit table for a fixed A-count: entry `[b][s]`
/// is whether the combined cost with exactly `s` B-batches fits within
/// `bound`, and `None` where `s > b` (more batches than jobs never occurs
/// in a real schedule). Rows run over `b ∈ [0, b_cap]`, columns over
/// `s ∈ [0, a_jobs+1]`.
pub fn combined_cost_table(
    machine: &MachineParams,
    a_jobs: u64,
    bound: u64,
    b_cap: u64,
) -> Vec<Vec<Option<bool>>> {
    (0..=b_cap)
        .map(|b| {
            (0..=a_jobs + 1)
                .map(|s| {
                    (s <= b)
                        .then(|| combined_cost(machine, a_jobs, b, s) <= Cost::Finite(bound))
                })
                .collect()
        })
        .collect()
}
