#![no_main]
use libfuzzer_sys::fuzz_target;

use coconvex::scalar::{format_rational, parse_rational};

fuzz_target!(|data: &str| {
    if let Ok(x) = parse_rational(data) {
        // canonical form survives a round trip
        let again = parse_rational(&format_rational(&x)).expect("rendered rational reparses");
        assert_eq!(x, again);
    }
});
