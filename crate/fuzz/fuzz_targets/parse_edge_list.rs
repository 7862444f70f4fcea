#![no_main]

use libfuzzer_sys::fuzz_target;
use regspec::ensemble::parse_edge_list;

fuzz_target!(|text: &str| {
    let _ = parse_edge_list(text);
});
