#![no_main]

use libfuzzer_sys::fuzz_target;
use regspec::capp::Capp;

fuzz_target!(|text: &str| {
    if let Ok(capp) = text.parse::<Capp>() {
        // a parsed pattern must print back to something that parses to itself
        let again: Capp = capp.to_string().parse().expect("display output parses");
        assert_eq!(again, capp);
        let _ = capp.signature();
        let _ = capp.multiplicity();
    }
});
