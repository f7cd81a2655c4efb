//! From decision tables to an explicit schedule: split the jobs across
//! machines by walking the DP backwards, then lay out concrete batches per
//! machine.

use thiserror::Error;

use crate::cost::{combined_cost, cost_a};
use crate::dp::DecisionTables;
use crate::instance::{
    machine_time, Batch, CostMode, Instance, InvalidBatchSequence, JobType, MachineParams,
    Schedule,
};

/// The decision tables and the claimed feasibility disagree. The interval
/// structure guarantees this cannot happen, so hitting it means a bug.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("failed to split the remaining jobs at machine {machine}")]
pub struct ReconstructionFailure {
    pub machine: usize,
}

/// Distributes all jobs over the machines, returning per-machine `(a, b)`
/// counts in input order. Requires tables built at a feasible bound.
///
/// Machines are peeled off from the last to the second: each takes the
/// smallest A-count whose own interval, summed with what the remaining
/// prefix can still do, covers the outstanding B-jobs (and within that the
/// smallest workable B-count). The first machine receives the residue.
pub fn backtrack_splits(
    inst: &Instance,
    tables: &DecisionTables,
) -> Result<Vec<(u64, u64)>, ReconstructionFailure> {
    let p = inst.machine_count();
    let mut splits = vec![(0u64, 0u64); p];
    let mut a_rem = inst.n_a;
    let mut b_rem = inst.n_b;
    for v in (1..p).rev() {
        let own_rows = &tables.machine_rows[v];
        let prev_rows = &tables.prefix_rows[v - 1];
        let mut chosen = None;
        for a_here in 0..=a_rem {
            let (Some(own), Some(rest)) = (
                own_rows[a_here as usize],
                prev_rows[(a_rem - a_here) as usize],
            ) else {
                continue;
            };
            if own.lo + rest.lo <= b_rem && b_rem <= own.hi + rest.hi {
                let b_here = own.lo.max(b_rem.saturating_sub(rest.hi));
                chosen = Some((a_here, b_here));
                break;
            }
        }
        let Some((a_here, b_here)) = chosen else {
            return Err(ReconstructionFailure { machine: v });
        };
        splits[v] = (a_here, b_here);
        a_rem -= a_here;
        b_rem -= b_here;
    }
    match tables.machine_rows[0][a_rem as usize] {
        Some(iv) if iv.contains(b_rem) => {
            splits[0] = (a_rem, b_rem);
            Ok(splits)
        }
        _ => Err(ReconstructionFailure { machine: 0 }),
    }
}

/// `count` batch sizes covering `jobs`, as balanced as possible, larger
/// sizes first.
fn balanced_sizes(jobs: u64, count: u64) -> Vec<u64> {
    if count == 0 {
        debug_assert_eq!(jobs, 0);
        return Vec::new();
    }
    let q = jobs / count;
    let r = jobs % count;
    (0..count).map(|i| if i < r { q + 1 } else { q }).collect()
}

/// Lays out concrete batches for one machine processing `a_jobs` A-jobs and
/// `b_jobs` B-jobs, achieving the single-machine minimum time exactly.
///
/// Ties between equally good batch counts break towards fewer batches, and
/// equal A/B batch counts start with an A-batch, so the output is
/// deterministic.
pub fn realize_machine(
    machine: &MachineParams,
    a_jobs: u64,
    b_jobs: u64,
    mode: CostMode,
) -> Vec<Batch> {
    if a_jobs == 0 && b_jobs == 0 {
        return Vec::new();
    }
    if mode == CostMode::Linear {
        // one batch per present type is optimal in the linear model
        let mut batches = Vec::new();
        if a_jobs > 0 {
            batches.push(Batch::new(JobType::A, a_jobs));
        }
        if b_jobs > 0 {
            batches.push(Batch::new(JobType::B, b_jobs));
        }
        return batches;
    }

    let b_count = (0..=b_jobs.min(a_jobs + 1))
        .min_by_key(|&s| combined_cost(machine, a_jobs, b_jobs, s))
        .expect("range always contains 0");
    // the compatible A-counts, additionally capped by the jobs available
    let a_count = (b_count.saturating_sub(1)..=(b_count + 1).min(a_jobs))
        .min_by_key(|&s| cost_a(machine, a_jobs, s))
        .expect("window is never empty");

    let a_sizes = balanced_sizes(a_jobs, a_count);
    let b_sizes = balanced_sizes(b_jobs, b_count);
    let mut batches = Vec::with_capacity((a_count + b_count) as usize);
    let mut next_is_a = a_count >= b_count;
    let (mut ai, mut bi) = (0, 0);
    while ai < a_sizes.len() || bi < b_sizes.len() {
        if next_is_a {
            batches.push(Batch::new(JobType::A, a_sizes[ai]));
            ai += 1;
        } else {
            batches.push(Batch::new(JobType::B, b_sizes[bi]));
            bi += 1;
        }
        next_is_a = !next_is_a;
    }
    batches
}

/// Why a schedule fails validation against its instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScheduleError {
    #[error("CountMismatch: {what}: expected {expected}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: u64,
        found: u64,
    },
    #[error("AlternationViolation: machine {machine}: {source}")]
    AlternationViolation {
        machine: usize,
        source: InvalidBatchSequence,
    },
    #[error("MakespanMismatch: claimed {claimed}, actual {actual}")]
    MakespanMismatch { claimed: u64, actual: u64 },
}

impl ScheduleError {
    /// Stable machine-readable code, the first token of the display form.
    pub fn code(&self) -> &'static str {
        match self {
            ScheduleError::CountMismatch { .. } => "CountMismatch",
            ScheduleError::AlternationViolation { .. } => "AlternationViolation",
            ScheduleError::MakespanMismatch { .. } => "MakespanMismatch",
        }
    }
}

/// Checks a schedule against its instance and a claimed makespan: one batch
/// list per machine, valid alternation everywhere, all jobs placed, and a
/// maximum machine time equal to the claim.
pub fn validate_schedule(
    inst: &Instance,
    schedule: &Schedule,
    claimed: u64,
) -> Result<(), ScheduleError> {
    if schedule.per_machine.len() != inst.machine_count() {
        return Err(ScheduleError::CountMismatch {
            what: "machine lists",
            expected: inst.machine_count() as u64,
            found: schedule.per_machine.len() as u64,
        });
    }
    let mut actual = 0u64;
    for (idx, (machine, batches)) in inst
        .machines
        .iter()
        .zip(&schedule.per_machine)
        .enumerate()
    {
        let time = machine_time(machine, batches, inst.mode)
            .map_err(|source| ScheduleError::AlternationViolation {
                machine: idx,
                source,
            })?;
        actual = actual.max(time);
    }
    let (total_a, total_b) = schedule.job_counts();
    if total_a != inst.n_a {
        return Err(ScheduleError::CountMismatch {
            what: "A-jobs",
            expected: inst.n_a,
            found: total_a,
        });
    }
    if total_b != inst.n_b {
        return Err(ScheduleError::CountMismatch {
            what: "B-jobs",
            expected: inst.n_b,
            found: total_b,
        });
    }
    if actual != claimed || schedule.makespan != claimed {
        return Err(ScheduleError::MakespanMismatch {
            claimed,
            actual,
        });
    }
    Ok(())
}
