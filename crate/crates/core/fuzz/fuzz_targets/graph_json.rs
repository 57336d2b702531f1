#![no_main]

use elimtree::Graph;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = Graph::from_json(text) {
        let again = Graph::from_json(&g.to_json()).expect("emitted graph parses");
        assert_eq!(again, g);
    }
});
