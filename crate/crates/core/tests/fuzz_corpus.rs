//! The checked-in fuzz seeds stay meaningful: the well-formed ones parse and
//! survive the same checks the fuzz targets make, and the malformed ones are
//! rejected with an error.

use std::fs;
use std::path::Path;

use elimtree::projection::{project_tree, project_tree_direct};
use elimtree::rotation::apply_sequence;
use elimtree::search_tree::{from_tubing, to_tubing, validate};
use elimtree::{Graph, RotationSequence, SearchTree, Tubing, VertexSet};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn graph_seeds() {
    for (name, text) in seeds("graph_json") {
        let parsed = Graph::from_json(&text);
        if name == "self_loop.json" {
            assert!(parsed.is_err());
        } else {
            let g = parsed.unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        }
    }
}

#[test]
fn search_tree_seeds() {
    for (name, text) in seeds("search_tree_json") {
        let parsed = SearchTree::from_json(&text);
        if name == "cycle.json" {
            assert!(parsed.is_err());
        } else {
            let t = parsed.unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(SearchTree::from_json(&t.to_json()).unwrap(), t);
        }
    }
}

#[test]
fn tubing_and_sequence_seeds() {
    for (name, text) in seeds("tubing_json") {
        Tubing::from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    for (name, text) in seeds("rotation_sequence_json") {
        RotationSequence::from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn pipeline_seeds() {
    for (name, text) in seeds("pipeline") {
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let g = Graph::from_json(&v["graph"].to_string()).unwrap();
        let t = SearchTree::from_json(&v["tree"].to_string()).unwrap();
        let seq = RotationSequence::from_json(&v["seq"].to_string()).unwrap();
        assert!(validate(&g, &t).unwrap(), "{name}");
        assert_eq!(from_tubing(&g, &to_tubing(&g, &t).unwrap()).unwrap(), t);
        let end = apply_sequence(&g, &t, &seq).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(validate(&g, &end).unwrap());
        if let Some(subset) = v.get("subset") {
            let s: VertexSet = serde_json::from_value(subset.clone()).unwrap();
            let p = project_tree(&g, &t, &s).unwrap();
            assert_eq!(project_tree_direct(&g, &t, &s).unwrap(), p);
        }
    }
}
