#![no_main]

use libfuzzer_sys::fuzz_target;
use regspec::ensemble::WeightSpec;

fuzz_target!(|text: &str| {
    if let Ok(spec) = text.parse::<WeightSpec>() {
        let again: WeightSpec = spec.to_string().parse().expect("display output parses");
        assert_eq!(again, spec);
    }
});
