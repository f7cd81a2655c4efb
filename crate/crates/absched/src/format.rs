//! JSON documents for instances and solutions.
//!
//! [`crate::instance::Instance`] doubles as the instance document. The
//! solution document is defined here. Both reject unknown fields, which
//! catches typos in hand-written fixtures early, and parse errors name the
//! offending field.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::instance::{Batch, Instance, Schedule};
use crate::reconstruct::ScheduleError;

/// One machine's batch list in a solution document. `machine` is the
/// 0-based position in the instance's machine array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MachineSchedule {
    pub machine: usize,
    pub batches: Vec<Batch>,
}

/// The on-disk solution document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub makespan: u64,
    pub schedule: Vec<MachineSchedule>,
}

/// A document that does not parse. The display form includes the path to
/// the offending field where one exists.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{0}")]
    Json(#[from] serde_path_to_error::Error<serde_json::Error>),
    #[error("{0}")]
    TrailingData(#[from] serde_json::Error),
}

fn parse<T: for<'de> Deserialize<'de>>(bytes: &[u8]) -> Result<T, ParseError> {
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let value = serde_path_to_error::deserialize(&mut de)?;
    de.end()?;
    Ok(value)
}

/// Parses an instance document. The caller still has to run
/// [`Instance::validate`] before solving.
pub fn parse_instance(bytes: &[u8]) -> Result<Instance, ParseError> {
    parse(bytes)
}

/// Parses a solution document.
pub fn parse_solution(bytes: &[u8]) -> Result<SolutionFile, ParseError> {
    parse(bytes)
}

/// Renders a document as pretty JSON with a trailing newline.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("document serialization cannot fail");
    out.push('\n');
    out
}

impl SolutionFile {
    /// Builds the document for a schedule, machines in input order.
    pub fn from_schedule(schedule: &Schedule) -> Self {
        SolutionFile {
            makespan: schedule.makespan,
            schedule: schedule
                .per_machine
                .iter()
                .enumerate()
                .map(|(machine, batches)| MachineSchedule {
                    machine,
                    batches: batches.clone(),
                })
                .collect(),
        }
    }

    /// Reassembles the per-machine batch lists for an instance with
    /// `machine_count` machines. The entries must cover every machine
    /// exactly once.
    pub fn into_schedule(self, machine_count: usize) -> Result<Schedule, ScheduleError> {
        let found = self.schedule.len() as u64;
        let mismatch = ScheduleError::CountMismatch {
            what: "machine entries",
            expected: machine_count as u64,
            found,
        };
        let mut per_machine: Vec<Option<Vec<Batch>>> = vec![None; machine_count];
        for entry in self.schedule {
            if entry.machine >= machine_count || per_machine[entry.machine].is_some() {
                return Err(mismatch);
            }
            per_machine[entry.machine] = Some(entry.batches);
        }
        let per_machine: Option<Vec<_>> = per_machine.into_iter().collect();
        match per_machine {
            Some(per_machine) => Ok(Schedule {
                per_machine,
                makespan: self.makespan,
            }),
            None => Err(mismatch),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{CostMode, JobType, MachineParams};
    use proptest::prelude::*;

    const BASIC: &str = r#"{
        "mode": "quadratic",
        "nA": 2,
        "nB": 2,
        "machines": [
            {"kA": 1, "kB": 1, "tA": 1, "tB": 1},
            {"kA": 1, "kB": 1, "tA": 1, "tB": 1}
        ]
    }"#;

    #[test]
    fn parses_basic_instance() {
        let inst = parse_instance(BASIC.as_bytes()).unwrap();
        assert_eq!(inst.mode, CostMode::Quadratic);
        assert_eq!(inst.n_a, 2);
        assert_eq!(inst.machines.len(), 2);
        assert_eq!(inst.machines[0], MachineParams::new(1, 1, 1, 1));
    }

    #[test]
    fn rejects_unknown_field_by_name() {
        let doc = r#"{"mode": "linear", "nA": 1, "nB": 1, "nC": 1, "machines": []}"#;
        let err = parse_instance(doc.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("nC"), "{err}");
    }

    #[test]
    fn error_names_nested_field() {
        let doc = r#"{"mode": "quadratic", "nA": 1, "nB": 1,
                      "machines": [{"kA": "fast", "kB": 1, "tA": 1, "tB": 1}]}"#;
        let err = parse_instance(doc.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("machines[0].kA"), "{err}");
    }

    #[test]
    fn rejects_trailing_garbage() {
        let doc = format!("{BASIC} extra");
        assert!(parse_instance(doc.as_bytes()).is_err());
    }

    #[test]
    fn solution_round_trip_through_schedule() {
        let schedule = Schedule {
            per_machine: vec![
                vec![Batch::new(JobType::A, 1), Batch::new(JobType::B, 1)],
                vec![],
            ],
            makespan: 4,
        };
        let doc = SolutionFile::from_schedule(&schedule);
        let json = to_json_pretty(&doc);
        let parsed = parse_solution(json.as_bytes()).unwrap();
        assert_eq!(parsed.into_schedule(2).unwrap(), schedule);
    }

    #[test]
    fn solution_rejects_bad_machine_indices() {
        let doc = SolutionFile {
            makespan: 0,
            schedule: vec![
                MachineSchedule { machine: 0, batches: vec![] },
                MachineSchedule { machine: 0, batches: vec![] },
            ],
        };
        assert_eq!(doc.clone().into_schedule(2).unwrap_err().code(), "CountMismatch");
        assert_eq!(doc.into_schedule(1).unwrap_err().code(), "CountMismatch");
    }

    fn batch_strategy() -> impl Strategy<Value = Batch> {
        (any::<bool>(), 1..9u64).prop_map(|(is_a, size)| {
            Batch::new(if is_a { JobType::A } else { JobType::B }, size)
        })
    }

    proptest! {
        #[test]
        fn instance_json_round_trips(
            n_a in 0..100u64,
            n_b in 0..100u64,
            params in proptest::collection::vec((0..9u64, 0..9u64, 0..9u64, 0..9u64), 1..4),
            linear in any::<bool>(),
        ) {
            let inst = Instance {
                mode: if linear { CostMode::Linear } else { CostMode::Quadratic },
                n_a,
                n_b,
                machines: params
                    .into_iter()
                    .map(|(k_a, k_b, t_a, t_b)| MachineParams::new(k_a, k_b, t_a, t_b))
                    .collect(),
            };
            let json = to_json_pretty(&inst);
            prop_assert_eq!(parse_instance(json.as_bytes()).unwrap(), inst);
        }

        #[test]
        fn solution_json_round_trips(
            makespan in 0..1000u64,
            machines in proptest::collection::vec(
                proptest::collection::vec(batch_strategy(), 0..4),
                0..4,
            ),
        ) {
            let doc = SolutionFile {
                makespan,
                schedule: machines
                    .into_iter()
                    .enumerate()
                    .map(|(machine, batches)| MachineSchedule { machine, batches })
                    .collect(),
            };
            let json = to_json_pretty(&doc);
            prop_assert_eq!(parse_solution(json.as_bytes()).unwrap(), doc);
        }
    }
}
