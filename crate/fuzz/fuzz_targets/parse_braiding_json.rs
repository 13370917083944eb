//! Braiding-matrix JSON decoding must never panic; accepted matrices
//! round-trip and admit the (bounded) Cartan inference without crashes.

#![no_main]

use libfuzzer_sys::fuzz_target;
use nichols_cft::braiding::{self, BraidingMatrix};

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else { return };
    let Ok(matrix) = serde_json::from_str::<BraidingMatrix>(input) else { return };
    let encoded = serde_json::to_string(&matrix).expect("serializes");
    let back: BraidingMatrix = serde_json::from_str(&encoded).expect("round trip");
    assert_eq!(back, matrix);
    // keep the witness search bounded for adversarial entry orders
    if matrix.theta() <= 4 && matrix.try_conductor().is_some_and(|n| n <= 720) {
        let _ = braiding::generalized_cartan(&matrix);
        let _ = matrix.dynkin_diagram().to_string();
        let _ = nichols_cft::catalog::match_braiding(&matrix);
    }
});
