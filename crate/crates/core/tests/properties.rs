use proptest::prelude::*;

use elimtree::constructions::{
    centroid_transform, centroid_tree, log_height_bound, transform, transform_length_bound,
};
use elimtree::graph::tree_from_prufer;
use elimtree::projection::{project_sequence, project_tree, project_tree_direct, replay_projected};
use elimtree::rotation::{apply_sequence, invert_sequence, rotatable_pairs, rotate};
use elimtree::search_tree::{
    from_elimination_order, from_ranking, from_tubing, to_ranking, to_tubing, validate,
};
use elimtree::{Graph, Rotation, RotationSequence, SearchTree, Tubing, VertexSet};

/// A labeled tree on `2..=max_n` vertices and a permutation of its vertices.
fn tree_and_order(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (2..=max_n).prop_flat_map(|n| {
        let code = prop::collection::vec(0..n, n - 2);
        let order = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (code, order).prop_map(move |(code, order)| (tree_from_prufer(n, &code).unwrap(), order))
    })
}

/// A connected graph: a random tree plus random extra edges.
fn connected_graph_and_order(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (
        tree_and_order(max_n),
        prop::collection::vec((0usize..64, 0usize..64), 0..6),
    )
        .prop_map(|((tree, order), extra)| {
            let n = tree.n();
            let mut edges: Vec<_> = tree.edges().collect();
            edges.extend(
                extra
                    .into_iter()
                    .map(|(a, b)| (a % n, b % n))
                    .filter(|(a, b)| a != b)
                    .filter(|&(a, b)| !tree.has_edge(a, b)),
            );
            edges.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
            edges.dedup_by_key(|&mut (a, b)| (a.min(b), a.max(b)));
            (Graph::new(n, edges).unwrap(), order)
        })
}

/// A walk of rotations chosen by index among the current tree edges.
fn walk(g: &Graph, t: &SearchTree, picks: &[usize]) -> (RotationSequence, SearchTree) {
    let mut cur = t.clone();
    let mut seq = RotationSequence::new();
    for &p in picks {
        let pairs = rotatable_pairs(g, &cur).unwrap();
        let r = pairs[p % pairs.len()];
        cur = rotate(g, &cur, r.parent, r.child).unwrap();
        seq.push(r);
    }
    (seq, cur)
}

/// A connected vertex set of about `size` vertices, grown from `order[0]` by
/// taking the earliest vertex of `order` adjacent to the set.
fn connected_subset(g: &Graph, order: &[usize], size: usize) -> VertexSet {
    let mut set = VertexSet::from([order[0]]);
    while set.len() < size.clamp(1, g.n()) {
        let next = order
            .iter()
            .find(|&&v| !set.contains(&v) && g.neighbors(v).iter().any(|w| set.contains(w)))
            .copied()
            .expect("connected graph");
        set.insert(next);
    }
    set
}

proptest! {
    #[test]
    fn elimination_orders_give_valid_trees((g, order) in connected_graph_and_order(9)) {
        let t = from_elimination_order(&g, &order).unwrap();
        prop_assert!(validate(&g, &t).unwrap());
        prop_assert_eq!(t.root(), order[0]);
    }

    #[test]
    fn tubing_and_ranking_round_trip((g, order) in connected_graph_and_order(9)) {
        let t = from_elimination_order(&g, &order).unwrap();
        let tubing = to_tubing(&g, &t).unwrap();
        prop_assert_eq!(tubing.len(), g.n());
        prop_assert!(tubing.check(&g).is_ok());
        prop_assert_eq!(&from_tubing(&g, &tubing).unwrap(), &t);
        let ranking = to_ranking(&g, &t).unwrap();
        prop_assert!(ranking.is_valid_for(&g));
        prop_assert_eq!(ranking.max_color(), t.height());
        prop_assert_eq!(from_ranking(&g, &ranking).unwrap(), t);
    }

    #[test]
    fn rotations_are_involutive_flips(
        (g, order) in connected_graph_and_order(9),
        pick in any::<usize>(),
    ) {
        let t = from_elimination_order(&g, &order).unwrap();
        let pairs = rotatable_pairs(&g, &t).unwrap();
        prop_assert_eq!(pairs.len(), g.n() - 1);
        let r = pairs[pick % pairs.len()];
        let next = rotate(&g, &t, r.parent, r.child).unwrap();
        prop_assert!(validate(&g, &next).unwrap());
        prop_assert_eq!(next.parent(r.parent), Some(r.child));
        prop_assert_eq!(
            to_tubing(&g, &t).unwrap().symmetric_difference(&to_tubing(&g, &next).unwrap()),
            2
        );
        prop_assert_eq!(rotate(&g, &next, r.child, r.parent).unwrap(), t);
    }

    #[test]
    fn inverted_walk_returns(
        (g, order) in connected_graph_and_order(9),
        picks in prop::collection::vec(any::<usize>(), 0..15),
    ) {
        let t = from_elimination_order(&g, &order).unwrap();
        let (seq, end) = walk(&g, &t, &picks);
        prop_assert_eq!(apply_sequence(&g, &t, &seq).unwrap(), end.clone());
        prop_assert_eq!(apply_sequence(&g, &end, &invert_sequence(&seq)).unwrap(), t);
    }

    #[test]
    fn projection_commutes_with_walks(
        (g, order) in tree_and_order(12),
        picks in prop::collection::vec(any::<usize>(), 0..20),
        size in 1usize..12,
    ) {
        let t = from_elimination_order(&g, &order).unwrap();
        let (seq, end) = walk(&g, &t, &picks);
        let s = connected_subset(&g, &order, size);
        let before = project_tree(&g, &t, &s).unwrap();
        let after = project_tree(&g, &end, &s).unwrap();
        prop_assert!(validate(before.graph(), &before.tree).unwrap());
        prop_assert_eq!(&project_tree_direct(&g, &t, &s).unwrap(), &before);
        let local = before.localize(&project_sequence(&seq, &s)).unwrap();
        let (replayed, skipped) = replay_projected(before.graph(), &before.tree, &local).unwrap();
        prop_assert_eq!(skipped, 0);
        prop_assert_eq!(replayed, after.tree);
    }

    #[test]
    fn projection_onto_everything_is_identity((g, order) in tree_and_order(10)) {
        let t = from_elimination_order(&g, &order).unwrap();
        let all: VertexSet = (0..g.n()).collect();
        let p = project_tree(&g, &t, &all).unwrap();
        prop_assert_eq!(p.tree, t);
    }

    #[test]
    fn transform_reaches_target_within_bound(
        (g, order) in tree_and_order(40),
        shuffled in Just((0..40).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let n = g.n();
        let t1 = from_elimination_order(&g, &order).unwrap();
        let other: Vec<usize> = shuffled.into_iter().filter(|&v| v < n).collect();
        let t2 = from_elimination_order(&g, &other).unwrap();
        let hub = centroid_tree(&g).unwrap();
        prop_assert!(hub.height() <= log_height_bound(n));
        prop_assert_eq!(apply_sequence(&g, &t1, &centroid_transform(&g, &t1).unwrap()).unwrap(), hub);
        let seq = transform(&g, &t1, &t2).unwrap();
        prop_assert!(seq.len() <= transform_length_bound(n));
        prop_assert_eq!(apply_sequence(&g, &t1, &seq).unwrap(), t2);
    }

    #[test]
    fn json_round_trips(
        (g, order) in connected_graph_and_order(9),
        picks in prop::collection::vec(any::<usize>(), 0..6),
    ) {
        prop_assert_eq!(&Graph::from_json(&g.to_json()).unwrap(), &g);
        let t = from_elimination_order(&g, &order).unwrap();
        prop_assert_eq!(&SearchTree::from_json(&t.to_json()).unwrap(), &t);
        let tubing = to_tubing(&g, &t).unwrap();
        prop_assert_eq!(&Tubing::from_json(&tubing.to_json()).unwrap(), &tubing);
        let (seq, _) = walk(&g, &t, &picks);
        prop_assert_eq!(RotationSequence::from_json(&seq.to_json()).unwrap(), seq);
    }

    #[test]
    fn parsers_never_panic(text in ".{0,64}") {
        let _ = Graph::from_json(&text);
        let _ = SearchTree::from_json(&text);
        let _ = Tubing::from_json(&text);
        let _ = RotationSequence::from_json(&text);
    }
}

#[test]
fn rotation_pairs_follow_tree_edges() {
    let g = Graph::path(4);
    let t = from_elimination_order(&g, &[1, 3, 0, 2]).unwrap();
    assert_eq!(
        rotatable_pairs(&g, &t).unwrap(),
        vec![
            Rotation::new(1, 0),
            Rotation::new(1, 3),
            Rotation::new(3, 2)
        ]
    );
}
