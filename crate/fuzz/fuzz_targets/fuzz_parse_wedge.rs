#![no_main]
use libfuzzer_sys::fuzz_target;

use coconvex::io::{parse_wedge_str, serialize_wedge};

fuzz_target!(|data: &str| {
    if let Ok(f) = parse_wedge_str(data) {
        let again = parse_wedge_str(&serialize_wedge(&f)).expect("round trip");
        assert_eq!(f.wedge_generator(), again.wedge_generator());
        assert_eq!(f.normals(), again.normals());
    }
});
