//! Exact scheduling of two job types (A and B) on unrelated machines.
//!
//! Jobs of the same type processed consecutively on a machine form a *batch*.
//! On machine `v`, a batch of `x` A-jobs takes `kA·x²` time units plus a fixed
//! setup overhead `tA` (symmetrically `kB`/`tB` for B-jobs); in the linear
//! cost model the batch work is `kA·x` instead. Neighbouring batches on a
//! machine must alternate between the two types and no batch may be empty.
//! The objective is the makespan: the largest total time over all machines.
//!
//! The solver is exact and works in three layers:
//!
//! 1. For a candidate bound `L`, the B-counts a single machine can finish
//!    together with `a` A-jobs form a contiguous interval ([`feasibility`]).
//! 2. Those per-machine intervals combine across machines by interval
//!    sumsets ([`dp`]), deciding whether all jobs fit within `L`.
//! 3. A binary search over `L` finds the minimum makespan, and the decision
//!    tables are walked backwards into a concrete, validated schedule
//!    ([`reconstruct`]).
//!
//! [`oracle`] holds deliberately naive brute-force references that the test
//! suite compares every layer against.

pub mod cost;
pub mod dp;
pub mod feasibility;
pub mod format;
pub mod generate;
pub mod instance;
pub mod oracle;
pub mod reconstruct;

pub use dp::{solve, SolveResult};
pub use instance::{Batch, CostMode, Instance, JobType, MachineParams, Schedule};
