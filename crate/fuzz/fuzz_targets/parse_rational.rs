#![no_main]

use libfuzzer_sys::fuzz_target;
use regspec::rational::{format_rational, parse_rational};

fuzz_target!(|text: &str| {
    if text.len() > 4096 {
        return;
    }
    if let Ok(r) = parse_rational(text) {
        assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
});
