#![no_main]

use elimtree::RotationSequence;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(seq) = RotationSequence::from_json(text) {
        assert_eq!(RotationSequence::from_json(&seq.to_json()).unwrap(), seq);
    }
});
