#![no_main]
use libfuzzer_sys::fuzz_target;

use coconvex::io::validate_chain_header;

fuzz_target!(|data: &str| {
    let _ = validate_chain_header(data);
});
