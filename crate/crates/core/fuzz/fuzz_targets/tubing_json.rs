#![no_main]

use elimtree::Tubing;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(tubing) = Tubing::from_json(text) {
        assert_eq!(Tubing::from_json(&tubing.to_json()).unwrap(), tubing);
    }
});
