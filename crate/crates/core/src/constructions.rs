//! Lower-bound and upper-bound constructions for rotation distance on tree
//! graphs.
//!
//! The lower-bound family is built on complete binary trees `G_k` with
//! `2^k - 1` vertices. Heap positions `1..=n` fix the shape: position `i`
//! has children `2i` and `2i + 1`. Leaves (positions `l..2l`, where
//! `l = 2^(k-1)`) get ids `0..l` from left to right. Internal positions
//! `1..l` get ids `l..n` in breadth-first order, so the root of `G_k` is `l`
//! whenever `k >= 2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rotation::{apply_sequence, invert_sequence, rotate, Rotation, RotationSequence};
use crate::search_tree::{ensure_valid, SearchTree};

/// Largest `k` accepted by the constructions. `G_24` already has about
/// sixteen million vertices.
pub const MAX_K: usize = 24;

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::BadParameter(k))
    } else if k > MAX_K {
        Err(Error::UnsupportedSize {
            n: k,
            reason: "parameter k is too large",
        })
    } else {
        Ok(())
    }
}

/// The bit-reversal permutation of `{0, .., 2^(k-1) - 1}`, built by
/// concatenating `2s` and `2s + 1` for the permutation `s` of parameter
/// `k - 1`.
pub fn bit_reversal(k: usize) -> Result<Vec<usize>> {
    check_k(k)?;
    let mut sigma = vec![0usize];
    for _ in 1..k {
        let evens = sigma.iter().map(|&x| 2 * x);
        let odds = sigma.iter().map(|&x| 2 * x + 1);
        sigma = evens.chain(odds).collect();
    }
    Ok(sigma)
}

/// The complete binary tree `G_k` with its leaf labels and root split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GkSpec {
    pub k: usize,
    #[serde(flatten)]
    pub graph: Graph,
    pub root: Vertex,
    /// Vertices of the subtree of the root holding leaves `0..l/2`.
    pub a: Vec<Vertex>,
    /// Vertices of the other subtree of the root.
    pub b: Vec<Vertex>,
    /// Leaf ids, indexed by label. Leaf labels coincide with ids.
    pub leaves: Vec<Vertex>,
    #[serde(skip)]
    side: Vec<Side>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    A,
    B,
    Root,
}

impl GkSpec {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Number of leaves, `2^(k-1)`.
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn in_a(&self, v: Vertex) -> bool {
        self.side[v] == Side::A
    }

    pub fn in_b(&self, v: Vertex) -> bool {
        self.side[v] == Side::B
    }

    /// Vertex id at heap position `pos` (1-based).
    pub fn vertex_at(&self, pos: usize) -> Vertex {
        heap_to_id(pos, self.leaf_count())
    }
}

fn heap_to_id(pos: usize, leaves: usize) -> Vertex {
    if pos >= leaves {
        pos - leaves
    } else {
        leaves + pos - 1
    }
}

pub fn build_gk(k: usize) -> Result<GkSpec> {
    check_k(k)?;
    let leaves = 1usize << (k - 1);
    let n = 2 * leaves - 1;
    let id = |pos| heap_to_id(pos, leaves);
    let graph = Graph::new(n, (2..=n).map(|pos| (id(pos / 2), id(pos))))?;
    let mut side = vec![Side::Root; n];
    let (mut a, mut b) = (Vec::new(), Vec::new());
    // Heap position p lies under position 2 (resp. 3) iff its leading bits
    // after the top one are 0 (resp. 1).
    for pos in 2..=n {
        let depth = usize::BITS - 1 - pos.leading_zeros();
        let branch = (pos >> (depth - 1)) & 1;
        let v = id(pos);
        if branch == 0 {
            side[v] = Side::A;
            a.push(v);
        } else {
            side[v] = Side::B;
            b.push(v);
        }
    }
    a.sort_unstable();
    b.sort_unstable();
    Ok(GkSpec {
        k,
        graph,
        root: id(1),
        a,
        b,
        leaves: (0..leaves).collect(),
        side,
    })
}

/// `T_k`: the search tree with the same shape as `G_k`, rooted at its root.
pub fn build_tk(spec: &GkSpec) -> SearchTree {
    let n = spec.n();
    let mut parent = vec![None; n];
    for pos in 2..=n {
        parent[spec.vertex_at(pos)] = Some(spec.vertex_at(pos / 2));
    }
    SearchTree::from_parents_unchecked(spec.root, parent)
}

/// `T'_k`: the leaves of `G_k` as a chain in bit-reversal order, starting at
/// leaf 0, with the internal vertices below the last leaf arranged as in
/// `T_k`.
pub fn build_tk_prime(spec: &GkSpec) -> SearchTree {
    let n = spec.n();
    let leaves = spec.leaf_count();
    let sigma = bit_reversal(spec.k).expect("spec has a valid k");
    let mut parent = vec![None; n];
    for pair in sigma.windows(2) {
        parent[spec.leaves[pair[1]]] = Some(spec.leaves[pair[0]]);
    }
    if n > 1 {
        parent[spec.root] = Some(spec.leaves[sigma[leaves - 1]]);
        for pos in 2..leaves {
            parent[spec.vertex_at(pos)] = Some(spec.vertex_at(pos / 2));
        }
    }
    SearchTree::from_parents_unchecked(spec.leaves[sigma[0]], parent)
}

/// The largest number of tree edges joining `A` and `B` on a root-to-leaf
/// path of `t`. Edges at the root of `G_k` never count.
pub fn alternation_number(spec: &GkSpec, t: &SearchTree) -> usize {
    let mut count = vec![0usize; t.n()];
    let mut best = 0;
    for v in t.bfs_order() {
        if let Some(p) = t.parent(v) {
            let crossing = (spec.in_a(v) && spec.in_b(p)) || (spec.in_b(v) && spec.in_a(p));
            count[v] = count[p] + usize::from(crossing);
            best = best.max(count[v]);
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RotationClass {
    AA,
    BB,
    AB,
    /// Touches the root of `G_k`, which lies in neither half.
    R,
}

pub fn classify_rotation(spec: &GkSpec, rot: Rotation) -> RotationClass {
    let (u, v) = (rot.parent, rot.child);
    match (spec.side[u], spec.side[v]) {
        (Side::Root, _) | (_, Side::Root) => RotationClass::R,
        (Side::A, Side::A) => RotationClass::AA,
        (Side::B, Side::B) => RotationClass::BB,
        _ => RotationClass::AB,
    }
}

/// `f(1) = 0`, `f(k) = 2 f(k-1) + 2^(k-2)`: a lower bound on the rotation
/// distance between `T_k` and `T'_k`.
pub fn lower_bound_f(k: usize) -> Result<u128> {
    if k == 0 {
        return Err(Error::BadParameter(k));
    }
    if k > 120 {
        return Err(Error::UnsupportedSize {
            n: k,
            reason: "recurrence overflows 128 bits",
        });
    }
    let mut f = 0u128;
    for j in 2..=k {
        f = 2 * f + (1u128 << (j - 2));
    }
    Ok(f)
}

fn require_tree(g: &Graph) -> Result<()> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Centroid of the subtree of `g` induced by `set`, smallest id on ties.
fn centroid_of(g: &Graph, set: &[Vertex]) -> Vertex {
    let n = set.len();
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    // Parent pointers and subtree sizes from an arbitrary root.
    let start = set[0];
    let mut order = vec![start];
    let mut parent = vec![usize::MAX; g.n()];
    parent[start] = start;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in g.neighbors(u) {
            if inside[w] && parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut size = vec![1usize; g.n()];
    for &u in order.iter().rev().take(n - 1) {
        size[parent[u]] += size[u];
    }
    let heaviest = |v: Vertex| {
        let below = g
            .neighbors(v)
            .iter()
            .filter(|&&w| inside[w] && w != parent[v] && parent[w] == v)
            .map(|&w| size[w])
            .max()
            .unwrap_or(0);
        below.max(n - size[v])
    };
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted
        .into_iter()
        .find(|&v| 2 * heaviest(v) <= n)
        .expect("every tree has a centroid")
}

/// A vertex whose removal leaves components of at most `n / 2` vertices.
pub fn centroid(g: &Graph) -> Result<Vertex> {
    require_tree(g)?;
    Ok(centroid_of(g, &(0..g.n()).collect::<Vec<_>>()))
}

/// Rotations `(parent(v), v)` until `v` is the root.
pub fn rotate_to_root(g: &Graph, t: &SearchTree, v: Vertex) -> Result<RotationSequence> {
    ensure_valid(g, t)?;
    g.check_vertex(v)?;
    Ok(lift(g, t, v, None).0)
}

/// Rotates `v` up until its parent is `stop`; returns the rotations and the
/// resulting tree.
fn lift(
    g: &Graph,
    t: &SearchTree,
    v: Vertex,
    stop: Option<Vertex>,
) -> (RotationSequence, SearchTree) {
    let mut seq = RotationSequence::new();
    let mut cur = t.clone();
    while cur.parent(v) != stop {
        let p = cur.parent(v).expect("stop is an ancestor of v");
        cur = rotate(g, &cur, p, v).expect("v is a child of its parent");
        seq.push(Rotation::new(p, v));
    }
    (seq, cur)
}

/// The centroid-decomposition search tree of a tree graph.
pub fn centroid_tree(g: &Graph) -> Result<SearchTree> {
    require_tree(g)?;
    let mut parent = vec![None; g.n()];
    let mut root = 0;
    let mut pending = vec![((0..g.n()).collect::<Vec<_>>(), None)];
    while let Some((component, above)) = pending.pop() {
        let c = centroid_of(g, &component);
        parent[c] = above;
        if above.is_none() {
            root = c;
        }
        for rest in g.components_without(&component, c) {
            pending.push((rest, Some(c)));
        }
    }
    Ok(SearchTree::from_parents_unchecked(root, parent))
}

/// Rotations turning `t` into [`centroid_tree`]: lift the centroid of the
/// whole tree to the root, then recurse into each subtree below it.
pub fn centroid_transform(g: &Graph, t: &SearchTree) -> Result<RotationSequence> {
    require_tree(g)?;
    ensure_valid(g, t)?;
    let mut seq = RotationSequence::new();
    let mut cur = t.clone();
    // Each entry is a subtree of `cur` rooted directly below `above`; rotations
    // inside it never change anything outside it.
    let mut pending = vec![(cur.root(), None)];
    while let Some((top, above)) = pending.pop() {
        let members = cur.descendants(top);
        let c = centroid_of(g, &members);
        let (lifted, next) = lift(g, &cur, c, above);
        seq.extend(lifted);
        cur = next;
        for child in cur.children_of(c) {
            pending.push((child, Some(c)));
        }
    }
    Ok(seq)
}

/// A rotation sequence from `t1` to `t2` through the centroid tree.
pub fn transform(g: &Graph, t1: &SearchTree, t2: &SearchTree) -> Result<RotationSequence> {
    let mut seq = centroid_transform(g, t1)?;
    seq.extend(invert_sequence(&centroid_transform(g, t2)?));
    debug_assert_eq!(apply_sequence(g, t1, &seq).as_ref(), Ok(t2));
    Ok(seq)
}

/// `ceil(log2(n + 1))`, the height bound of a centroid decomposition.
pub fn log_height_bound(n: usize) -> usize {
    (usize::BITS - n.leading_zeros()) as usize
}

/// `2 n ceil(log2(n + 1))`, the length bound for [`transform`].
pub fn transform_length_bound(n: usize) -> usize {
    2 * n * log_height_bound(n)
}
