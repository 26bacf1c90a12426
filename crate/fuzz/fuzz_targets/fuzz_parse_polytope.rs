#![no_main]
use libfuzzer_sys::fuzz_target;

use coconvex::io::{parse_polytope_str, serialize_polytope};

fuzz_target!(|data: &str| {
    if let Ok(p) = parse_polytope_str(data) {
        let again = parse_polytope_str(&serialize_polytope(&p)).expect("round trip");
        assert_eq!(p, again);
    }
});
