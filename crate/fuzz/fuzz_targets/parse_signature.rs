#![no_main]

use libfuzzer_sys::fuzz_target;
use regspec::capp::SignatureClass;

fuzz_target!(|text: &str| {
    if let Ok(class) = text.parse::<SignatureClass>() {
        let again: SignatureClass = class.to_string().parse().expect("display output parses");
        assert_eq!(again, class);
    }
});
