#![no_main]

// A bundle {"graph", "tree", "seq", "subset"} driven through validation,
// rotation and projection. Anything that parses must not panic, and valid
// inputs must give valid outputs.

use elimtree::projection::{project_tree, project_tree_direct};
use elimtree::rotation::apply_sequence;
use elimtree::search_tree::{from_ranking, from_tubing, to_ranking, to_tubing, validate};
use elimtree::{Graph, RotationSequence, SearchTree, VertexSet};
use libfuzzer_sys::fuzz_target;
use serde::Deserialize;

#[derive(Deserialize)]
struct Bundle {
    graph: Graph,
    tree: SearchTree,
    #[serde(default)]
    seq: RotationSequence,
    #[serde(default)]
    subset: VertexSet,
}

fuzz_target!(|data: &[u8]| {
    let Ok(bundle) = serde_json::from_slice::<Bundle>(data) else {
        return;
    };
    let Bundle {
        graph: g,
        tree: t,
        seq,
        subset,
    } = bundle;
    if g.n() > 64 || !matches!(validate(&g, &t), Ok(true)) {
        return;
    }
    assert_eq!(from_tubing(&g, &to_tubing(&g, &t).unwrap()).unwrap(), t);
    assert_eq!(from_ranking(&g, &to_ranking(&g, &t).unwrap()).unwrap(), t);
    if let Ok(end) = apply_sequence(&g, &t, &seq) {
        assert!(validate(&g, &end).unwrap());
    }
    if g.is_tree() {
        if let Ok(p) = project_tree(&g, &t, &subset) {
            assert!(validate(p.graph(), &p.tree).unwrap());
            assert_eq!(project_tree_direct(&g, &t, &subset).unwrap(), p);
        }
    }
});
