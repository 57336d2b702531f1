#![no_main]

use elimtree::SearchTree;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = SearchTree::from_json(text) {
        assert_eq!(SearchTree::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(t.bfs_order().len(), t.n());
    }
});
