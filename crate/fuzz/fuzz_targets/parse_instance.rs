#![no_main]

use libfuzzer_sys::fuzz_target;

// Parsing arbitrary bytes must never panic, and neither may validating
// whatever parsed.
fuzz_target!(|data: &[u8]| {
    if let Ok(inst) = absched::format::parse_instance(data) {
        let _ = inst.validate();
    }
});
