//! Brute-force reference implementations.
//!
//! Everything here recomputes results from first principles by exhaustive
//! enumeration and never calls into the closed-form, interval, or DP code
//! paths. The test suites compare the fast implementations against these.
//! Input sizes are hard-capped; calling beyond a cap is a programming
//! error, not a silent slow path.

use crate::cost::Cost;
use crate::instance::{CostMode, Instance, MachineParams};

const MAX_SPLIT_JOBS: u64 = 12;
const MAX_SPLIT_BATCHES: u64 = 6;
const MAX_COMBO_JOBS: u64 = 6;
const MAX_MACHINES: usize = 3;

/// Minimum cost of spreading `jobs` over exactly `batches` possibly-empty
/// batches, by enumerating every composition. Caps: jobs ≤ 12, batches ≤ 6.
pub fn oracle_split_cost(k: u64, t: u64, jobs: u64, batches: u64) -> Cost {
    assert!(
        jobs <= MAX_SPLIT_JOBS && batches <= MAX_SPLIT_BATCHES,
        "oracle_split_cost called beyond its enumeration caps"
    );
    fn best_square_sum(jobs: u64, batches: u64) -> Option<u64> {
        if batches == 0 {
            return (jobs == 0).then_some(0);
        }
        (0..=jobs)
            .filter_map(|x| best_square_sum(jobs - x, batches - 1).map(|rest| x * x + rest))
            .min()
    }
    match best_square_sum(jobs, batches) {
        Some(squares) => Cost::Finite(batches * t + k * squares),
        None => Cost::Infeasible,
    }
}

/// [`oracle_split_cost`] with the machine's A-side parameters.
pub fn oracle_cost_a(machine: &MachineParams, jobs: u64, batches: u64) -> Cost {
    oracle_split_cost(machine.k_a, machine.t_a, jobs, batches)
}

/// [`oracle_split_cost`] with the machine's B-side parameters.
pub fn oracle_cost_b(machine: &MachineParams, jobs: u64, batches: u64) -> Cost {
    oracle_split_cost(machine.k_b, machine.t_b, jobs, batches)
}

/// Valid batch counts for a group of `jobs` same-type jobs: none when there
/// are no jobs, otherwise anything from one batch up to one job per batch.
fn batch_count_options(jobs: u64) -> std::ops::RangeInclusive<u64> {
    if jobs == 0 {
        0..=0
    } else {
        1..=jobs
    }
}

/// Minimum total work term for `jobs` jobs in exactly `batches` non-empty
/// batches, enumerating non-increasing positive partitions (batch order
/// within a group does not change the total).
fn min_group_work(jobs: u64, batches: u64, mode: CostMode) -> Option<u64> {
    match mode {
        CostMode::Linear => {
            let realizable = (jobs == 0 && batches == 0) || (batches >= 1 && batches <= jobs);
            realizable.then_some(jobs)
        }
        CostMode::Quadratic => {
            fn go(jobs: u64, batches: u64, max_part: u64) -> Option<u64> {
                if batches == 0 {
                    return (jobs == 0).then_some(0);
                }
                if jobs < batches {
                    return None;
                }
                // leave at least one job for each remaining batch
                (1..=max_part.min(jobs - (batches - 1)))
                    .filter_map(|x| go(jobs - x, batches - 1, x).map(|rest| x * x + rest))
                    .min()
            }
            go(jobs, batches, jobs)
        }
    }
}

/// Minimum time for one machine to finish the task-combination
/// `(a_jobs, b_jobs)`, enumerating every alternating arrangement of
/// non-empty batches. Caps: a_jobs, b_jobs ≤ 6.
pub fn oracle_f(machine: &MachineParams, a_jobs: u64, b_jobs: u64, mode: CostMode) -> Cost {
    assert!(
        a_jobs <= MAX_COMBO_JOBS && b_jobs <= MAX_COMBO_JOBS,
        "oracle_f called beyond its enumeration caps"
    );
    let mut best = Cost::Infeasible;
    for a_count in batch_count_options(a_jobs) {
        for b_count in batch_count_options(b_jobs) {
            // alternation permits batch counts that differ by at most one
            if a_count.abs_diff(b_count) > 1 {
                continue;
            }
            let Some(a_work) = min_group_work(a_jobs, a_count, mode) else {
                continue;
            };
            let Some(b_work) = min_group_work(b_jobs, b_count, mode) else {
                continue;
            };
            let total = a_count * machine.t_a
                + machine.k_a * a_work
                + b_count * machine.t_b
                + machine.k_b * b_work;
            best = best.min(Cost::Finite(total));
        }
    }
    best
}

/// Exact minimum makespan by enumerating every split of the jobs across the
/// machines. Caps: ≤ 3 machines, job counts ≤ 6.
pub fn oracle_makespan(inst: &Instance) -> Cost {
    assert!(
        inst.machines.len() <= MAX_MACHINES && inst.n_a <= MAX_COMBO_JOBS && inst.n_b <= MAX_COMBO_JOBS,
        "oracle_makespan called beyond its enumeration caps"
    );
    fn go(machines: &[MachineParams], a: u64, b: u64, mode: CostMode) -> Cost {
        let (first, rest) = machines.split_first().expect("at least one machine");
        if rest.is_empty() {
            return oracle_f(first, a, b, mode);
        }
        let mut best = Cost::Infeasible;
        for x in 0..=a {
            for y in 0..=b {
                let here = oracle_f(first, x, y, mode);
                let there = go(rest, a - x, b - y, mode);
                best = best.min(here.max(there));
            }
        }
        best
    }
    go(&inst.machines, inst.n_a, inst.n_b, inst.mode)
}
