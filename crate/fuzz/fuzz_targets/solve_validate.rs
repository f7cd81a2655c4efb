#![no_main]

use absched::instance::{CostMode, Instance, MachineParams};
use absched::reconstruct::validate_schedule;
use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;

/// Small but fully in-bounds instances. Solving must always produce a
/// schedule that validates against the instance.
#[derive(Debug, Arbitrary)]
struct SmallInstance {
    linear: bool,
    n_a: u8,
    n_b: u8,
    machines: Vec<[u16; 4]>,
}

fuzz_target!(|input: SmallInstance| {
    let machines: Vec<MachineParams> = input
        .machines
        .iter()
        .take(4)
        .map(|&[k_a, k_b, t_a, t_b]| {
            MachineParams::new(u64::from(k_a), u64::from(k_b), u64::from(t_a), u64::from(t_b))
        })
        .collect();
    if machines.is_empty() {
        return;
    }
    let inst = Instance {
        mode: if input.linear {
            CostMode::Linear
        } else {
            CostMode::Quadratic
        },
        n_a: u64::from(input.n_a % 33),
        n_b: u64::from(input.n_b % 33),
        machines,
    };
    let result = absched::solve(&inst);
    validate_schedule(&inst, &result.schedule, result.makespan)
        .expect("solver output must validate");
});
