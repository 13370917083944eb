//! Angle parsing must never panic, and every parsed angle must be
//! canonicalized into [0, 1) with a positive order.

#![no_main]

use libfuzzer_sys::fuzz_target;
use nichols_cft::exact::RationalAngle;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else { return };
    if let Ok(angle) = RationalAngle::parse(input) {
        assert!(angle.t().numer().sign() != num_bigint::Sign::Minus);
        assert!(angle.t().numer() < angle.t().denom());
        let back = RationalAngle::parse(&angle.to_string()).expect("canonical form parses");
        assert_eq!(back, angle);
        // group law stays total on parsed values
        let _ = &angle * &angle.inverse();
    }
});
