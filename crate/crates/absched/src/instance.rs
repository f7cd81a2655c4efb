//! Problem instances and explicit schedules.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest allowed value for any per-machine parameter (`kA`, `kB`, `tA`, `tB`).
///
/// Together with [`MAX_JOBS`] this keeps every cost below 2^62, so all cost
/// arithmetic stays in `u64` without overflow.
pub const MAX_PARAM: u64 = 1_000_000;

/// Largest allowed job count per type.
pub const MAX_JOBS: u64 = 10_000;

/// Per-machine speeds and setup overheads.
///
/// A batch of `x` A-jobs costs `t_a + k_a·x²` time units in the quadratic
/// model and `t_a + k_a·x` in the linear one; `k_b`/`t_b` play the same role
/// for B-jobs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineParams {
    #[serde(rename = "kA")]
    pub k_a: u64,
    #[serde(rename = "kB")]
    pub k_b: u64,
    #[serde(rename = "tA")]
    pub t_a: u64,
    #[serde(rename = "tB")]
    pub t_b: u64,
}

impl MachineParams {
    pub fn new(k_a: u64, k_b: u64, t_a: u64, t_b: u64) -> Self {
        Self { k_a, k_b, t_a, t_b }
    }
}

/// Batch cost model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CostMode {
    Quadratic,
    Linear,
}

impl std::fmt::Display for CostMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CostMode::Quadratic => write!(f, "quadratic"),
            CostMode::Linear => write!(f, "linear"),
        }
    }
}

/// A problem instance: the machines plus the number of jobs of each type.
///
/// This struct doubles as the on-disk instance document; see the field
/// renames for the exact JSON key names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub mode: CostMode,
    #[serde(rename = "nA")]
    pub n_a: u64,
    #[serde(rename = "nB")]
    pub n_b: u64,
    pub machines: Vec<MachineParams>,
}

/// Why an instance is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("instance has no machines")]
    EmptyMachineList,
    #[error("{field} = {value} exceeds the supported bound {max}")]
    BoundExceeded { field: String, value: u64, max: u64 },
}

impl Instance {
    /// Checks the documented input bounds. Every other part of the crate
    /// assumes a validated instance, which is what keeps `u64` cost
    /// arithmetic overflow-free.
    pub fn validate(&self) -> Result<(), InstanceError> {
        if self.machines.is_empty() {
            return Err(InstanceError::EmptyMachineList);
        }
        let job_bound = |field: &str, value: u64| {
            if value > MAX_JOBS {
                Err(InstanceError::BoundExceeded {
                    field: field.to_owned(),
                    value,
                    max: MAX_JOBS,
                })
            } else {
                Ok(())
            }
        };
        job_bound("nA", self.n_a)?;
        job_bound("nB", self.n_b)?;
        for (idx, m) in self.machines.iter().enumerate() {
            for (name, value) in [
                ("kA", m.k_a),
                ("kB", m.k_b),
                ("tA", m.t_a),
                ("tB", m.t_b),
            ] {
                if value > MAX_PARAM {
                    return Err(InstanceError::BoundExceeded {
                        field: format!("machines[{idx}].{name}"),
                        value,
                        max: MAX_PARAM,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn machine_count(&self) -> usize {
        self.machines.len()
    }
}

/// The two job types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JobType {
    A,
    B,
}

/// A run of same-type jobs processed consecutively on one machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Batch {
    #[serde(rename = "type")]
    pub job_type: JobType,
    #[serde(rename = "count")]
    pub size: u64,
}

impl Batch {
    pub fn new(job_type: JobType, size: u64) -> Self {
        Self { job_type, size }
    }
}

/// An explicit schedule: one ordered batch list per machine (an empty list
/// is an idle machine) plus the resulting makespan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    pub per_machine: Vec<Vec<Batch>>,
    pub makespan: u64,
}

impl Schedule {
    /// Total `(A, B)` job counts over all machines.
    pub fn job_counts(&self) -> (u64, u64) {
        let mut a = 0;
        let mut b = 0;
        for batch in self.per_machine.iter().flatten() {
            match batch.job_type {
                JobType::A => a += batch.size,
                JobType::B => b += batch.size,
            }
        }
        (a, b)
    }
}

/// A batch list that no machine may execute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum InvalidBatchSequence {
    #[error("batch of size 0")]
    EmptyBatch,
    #[error("neighbouring batches of the same type")]
    SameTypeNeighbours,
}

/// Total time for `machine` to process `batches` in order.
///
/// Each batch costs its setup overhead plus `k·size²` (quadratic) or
/// `k·size` (linear). An empty list is an idle machine and costs 0.
pub fn machine_time(
    machine: &MachineParams,
    batches: &[Batch],
    mode: CostMode,
) -> Result<u64, InvalidBatchSequence> {
    let mut total = 0u64;
    let mut prev: Option<JobType> = None;
    for batch in batches {
        if batch.size == 0 {
            return Err(InvalidBatchSequence::EmptyBatch);
        }
        if prev == Some(batch.job_type) {
            return Err(InvalidBatchSequence::SameTypeNeighbours);
        }
        let (k, t) = match batch.job_type {
            JobType::A => (machine.k_a, machine.t_a),
            JobType::B => (machine.k_b, machine.t_b),
        };
        let work = match mode {
            CostMode::Quadratic => k * batch.size * batch.size,
            CostMode::Linear => k * batch.size,
        };
        total += t + work;
        prev = Some(batch.job_type);
    }
    Ok(total)
}
