//! The rational literal parser must never panic on untrusted input, and
//! accepted values must round-trip through the canonical text form.

#![no_main]

use libfuzzer_sys::fuzz_target;
use nichols_cft::exact::{format_rational, parse_rational};

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else { return };
    if let Ok(value) = parse_rational(input) {
        let canonical = format_rational(&value);
        let reparsed = parse_rational(&canonical).expect("canonical form parses");
        assert_eq!(reparsed, value);
    }
});
