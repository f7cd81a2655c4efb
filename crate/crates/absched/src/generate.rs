//! Deterministic random instance generation, shared by the CLI, the bench
//! harness, and the test suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::instance::{CostMode, Instance, InstanceError, MachineParams, MAX_JOBS, MAX_PARAM};

/// Knobs for [`generate_instance`].
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub machines: u64,
    pub n_a: u64,
    pub n_b: u64,
    /// Parameters are drawn uniformly from `[1, param_max]`, or from
    /// `[0, param_max]` with `allow_zero`.
    pub param_max: u64,
    pub allow_zero: bool,
    pub seed: u64,
    pub mode: CostMode,
}

/// Generates a valid instance, byte-for-byte deterministic for a fixed
/// configuration.
pub fn generate_instance(cfg: &GenConfig) -> Result<Instance, InstanceError> {
    if cfg.machines == 0 {
        return Err(InstanceError::EmptyMachineList);
    }
    for (field, value, max) in [
        ("nA", cfg.n_a, MAX_JOBS),
        ("nB", cfg.n_b, MAX_JOBS),
        ("paramMax", cfg.param_max, MAX_PARAM),
    ] {
        if value > max {
            return Err(InstanceError::BoundExceeded {
                field: field.to_owned(),
                value,
                max,
            });
        }
    }
    let lo = if cfg.allow_zero { 0 } else { 1.min(cfg.param_max) };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    // the kA, kB, tA, tB draw order is part of the determinism contract
    let machines = (0..cfg.machines)
        .map(|_| {
            MachineParams::new(
                rng.random_range(lo..=cfg.param_max),
                rng.random_range(lo..=cfg.param_max),
                rng.random_range(lo..=cfg.param_max),
                rng.random_range(lo..=cfg.param_max),
            )
        })
        .collect();
    let inst = Instance {
        mode: cfg.mode,
        n_a: cfg.n_a,
        n_b: cfg.n_b,
        machines,
    };
    debug_assert!(inst.validate().is_ok());
    Ok(inst)
}
