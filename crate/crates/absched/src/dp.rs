//! Combining machines: interval DP over machine prefixes and the binary
//! search for the minimum makespan.

use crate::feasibility::{feasibility_rows, FeasibleInterval, Interval};
use crate::instance::{machine_time, Instance, Schedule};
use crate::reconstruct::{backtrack_splits, realize_machine};

/// Decision tables for one bound: what each machine can do on its own and
/// what the machine prefixes can do together.
#[derive(Debug, Clone)]
pub struct DecisionTables {
    /// `machine_rows[v][a]`: B-counts machine `v` can take alongside `a` A-jobs.
    pub machine_rows: Vec<Vec<FeasibleInterval>>,
    /// `prefix_rows[v][a]`: total B-counts machines `0..=v` can take when
    /// `a` A-jobs are split among them.
    pub prefix_rows: Vec<Vec<FeasibleInterval>>,
}

/// Sumset-combines accumulated prefix intervals with one machine's rows.
///
/// Entry `a` of the result spans, over all ways to give the new machine
/// `a'` of the `a` A-jobs, the interval sums `prev[a-a'] + own[a']`; the
/// union of those sums is itself contiguous, so tracking endpoints is
/// enough.
fn combine_rows(prev: &[FeasibleInterval], own: &[FeasibleInterval]) -> Vec<FeasibleInterval> {
    (0..prev.len())
        .map(|a| {
            let mut acc: FeasibleInterval = None;
            for a_here in 0..=a {
                if let (Some(rest), Some(mine)) = (prev[a - a_here], own[a_here]) {
                    let lo = rest.lo + mine.lo;
                    let hi = rest.hi + mine.hi;
                    acc = Some(match acc {
                        None => Interval::new(lo, hi),
                        Some(iv) => Interval::new(iv.lo.min(lo), iv.hi.max(hi)),
                    });
                }
            }
            acc
        })
        .collect()
}

/// Builds the full decision tables for bound `l`.
pub fn dp_forward(inst: &Instance, l: u64) -> DecisionTables {
    let machine_rows: Vec<_> = inst
        .machines
        .iter()
        .map(|m| feasibility_rows(m, l, inst.n_a, inst.n_b, inst.mode))
        .collect();
    let mut prefix_rows: Vec<Vec<FeasibleInterval>> = Vec::with_capacity(machine_rows.len());
    prefix_rows.push(machine_rows[0].clone());
    for own in &machine_rows[1..] {
        let next = combine_rows(prefix_rows.last().expect("seeded above"), own);
        prefix_rows.push(next);
    }
    DecisionTables {
        machine_rows,
        prefix_rows,
    }
}

/// True iff all jobs can finish within `l` time units.
///
/// Unlike [`dp_forward`] this keeps only one accumulated row alive.
pub fn feasible_at(inst: &Instance, l: u64) -> bool {
    let mut acc: Option<Vec<FeasibleInterval>> = None;
    for machine in &inst.machines {
        let rows = feasibility_rows(machine, l, inst.n_a, inst.n_b, inst.mode);
        acc = Some(match acc {
            None => rows,
            Some(prev) => combine_rows(&prev, &rows),
        });
    }
    let last = acc.expect("instance has at least one machine");
    last[inst.n_a as usize].is_some_and(|iv| iv.contains(inst.n_b))
}

/// A makespan that is always achievable: all jobs on the best single
/// machine, one batch per type.
pub fn upper_bound(inst: &Instance) -> u64 {
    use crate::instance::CostMode;
    inst.machines
        .iter()
        .map(|m| {
            let mut total = match inst.mode {
                CostMode::Quadratic => m.k_a * inst.n_a * inst.n_a + m.k_b * inst.n_b * inst.n_b,
                CostMode::Linear => m.k_a * inst.n_a + m.k_b * inst.n_b,
            };
            if inst.n_a > 0 {
                total += m.t_a;
            }
            if inst.n_b > 0 {
                total += m.t_b;
            }
            total
        })
        .min()
        .expect("instance has at least one machine")
}

/// An optimal makespan together with an explicit schedule achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub makespan: u64,
    pub schedule: Schedule,
    /// `(a, b)` job counts assigned to each machine, in input order.
    pub splits: Vec<(u64, u64)>,
}

/// Finds the minimum makespan and a schedule achieving it.
///
/// Costs are integers, so the optimum is found by binary search on the
/// bound, maintaining "infeasible at `lo`, feasible at `hi`". The instance
/// must be valid (see [`Instance::validate`]).
pub fn solve(inst: &Instance) -> SolveResult {
    debug_assert!(inst.validate().is_ok());
    let optimum = if feasible_at(inst, 0) {
        0
    } else {
        let mut lo = 0u64;
        let mut hi = upper_bound(inst);
        debug_assert!(feasible_at(inst, hi));
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if feasible_at(inst, mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };
    let tables = dp_forward(inst, optimum);
    let splits =
        backtrack_splits(inst, &tables).expect("tables at the optimum always admit a split");
    let per_machine: Vec<_> = inst
        .machines
        .iter()
        .zip(&splits)
        .map(|(m, &(a, b))| realize_machine(m, a, b, inst.mode))
        .collect();
    let makespan = per_machine
        .iter()
        .zip(&inst.machines)
        .map(|(batches, m)| machine_time(m, batches, inst.mode).expect("realized batches alternate"))
        .max()
        .expect("instance has at least one machine");
    assert_eq!(
        makespan, optimum,
        "reconstructed schedule must achieve the optimum exactly"
    );
    SolveResult {
        makespan,
        schedule: Schedule {
            per_machine,
            makespan,
        },
        splits,
    }
}
