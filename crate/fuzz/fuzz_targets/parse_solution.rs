#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(doc) = absched::format::parse_solution(data) {
        let machines = doc.schedule.len();
        let _ = doc.into_schedule(machines);
    }
});
