//! Random instances for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{tree_from_prufer, Graph, Vertex, VertexSet};
use crate::rotation::{rotate, tree_edges, Rotation, RotationSequence};
use crate::search_tree::{from_elimination_order, SearchTree};

/// A uniformly random labeled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    match n {
        0 => panic!("a tree needs at least one vertex"),
        1 => Graph::new(1, []).expect("single vertex"),
        _ => {
            let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_prufer(n, &code).expect("valid Prüfer code")
        }
    }
}

/// The search tree of a uniformly random elimination order of a connected
/// graph.
pub fn random_search_tree<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> SearchTree {
    let mut order: Vec<Vertex> = (0..g.n()).collect();
    order.shuffle(rng);
    from_elimination_order(g, &order).expect("connected graph and permutation")
}

/// A random walk of `len` rotations from `t`, together with its endpoint.
pub fn random_walk<R: Rng + ?Sized>(
    rng: &mut R,
    g: &Graph,
    t: &SearchTree,
    len: usize,
) -> (RotationSequence, SearchTree) {
    let mut cur = t.clone();
    let mut seq = RotationSequence::new();
    if t.n() < 2 {
        return (seq, cur);
    }
    for _ in 0..len {
        let edges = tree_edges(&cur);
        let Rotation { parent, child } = *edges.choose(rng).expect("n >= 2");
        cur = rotate(g, &cur, parent, child).expect("tree edge");
        seq.push(Rotation::new(parent, child));
    }
    (seq, cur)
}

/// A random nonempty vertex set inducing a connected subgraph, grown from a
/// random vertex by adding random neighbors.
pub fn random_connected_subset<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> VertexSet {
    let target = rng.gen_range(1..=g.n());
    let mut set = VertexSet::new();
    set.insert(rng.gen_range(0..g.n()));
    while set.len() < target {
        let boundary: Vec<Vertex> = set
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|w| !set.contains(w))
            .collect();
        match boundary.choose(rng) {
            Some(&w) => {
                set.insert(w);
            }
            None => break,
        }
    }
    set
}
