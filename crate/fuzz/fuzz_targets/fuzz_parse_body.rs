#![no_main]
use libfuzzer_sys::fuzz_target;

use coconvex::io::{parse_body_str, serialize_body};

fuzz_target!(|data: &str| {
    if let Ok(b) = parse_body_str(data) {
        let again = parse_body_str(&serialize_body(&b)).expect("round trip");
        assert_eq!(b, again);
    }
});
