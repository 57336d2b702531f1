//! Rotations on search trees and rotation sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::search_tree::{ensure_valid, to_tubing, SearchTree};

/// A rotation on the tree edge between `parent` and its child `child`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(Vertex, Vertex)", into = "(Vertex, Vertex)")]
pub struct Rotation {
    pub parent: Vertex,
    pub child: Vertex,
}

impl Rotation {
    pub fn new(parent: Vertex, child: Vertex) -> Self {
        Rotation { parent, child }
    }

    /// The rotation that undoes this one.
    pub fn inverse(self) -> Self {
        Rotation::new(self.child, self.parent)
    }

    pub fn touches(self, v: Vertex) -> bool {
        self.parent == v || self.child == v
    }
}

impl From<(Vertex, Vertex)> for Rotation {
    fn from((parent, child): (Vertex, Vertex)) -> Self {
        Rotation::new(parent, child)
    }
}

impl From<Rotation> for (Vertex, Vertex) {
    fn from(r: Rotation) -> Self {
        (r.parent, r.child)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RotationSequence(pub Vec<Rotation>);

impl RotationSequence {
    pub fn new() -> Self {
        RotationSequence(Vec::new())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("sequence serialization is infallible")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rotation> {
        self.0.iter()
    }

    pub fn push(&mut self, r: Rotation) {
        self.0.push(r);
    }

    pub fn extend(&mut self, other: RotationSequence) {
        self.0.extend(other.0);
    }
}

impl FromIterator<Rotation> for RotationSequence {
    fn from_iter<I: IntoIterator<Item = Rotation>>(iter: I) -> Self {
        RotationSequence(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a RotationSequence {
    type Item = &'a Rotation;
    type IntoIter = std::slice::Iter<'a, Rotation>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// One rotation per tree edge, sorted by `(parent, child)`.
pub fn rotatable_pairs(g: &Graph, t: &SearchTree) -> Result<Vec<Rotation>> {
    ensure_valid(g, t)?;
    Ok(tree_edges(t))
}

pub(crate) fn tree_edges(t: &SearchTree) -> Vec<Rotation> {
    let mut out: Vec<Rotation> = (0..t.n())
        .filter_map(|v| t.parent(v).map(|p| Rotation::new(p, v)))
        .collect();
    out.sort_unstable();
    out
}

/// Rotates the tree edge `(u, v)`, where `v` is a child of `u`.
///
/// `v` takes `u`'s place (becoming the root if `u` was the root) and `u`
/// becomes a child of `v`. A subtree of `v` moves under `u` exactly when `u`
/// has a neighbor in it in `g`; every other subtree stays where it was.
pub fn rotate(g: &Graph, t: &SearchTree, u: Vertex, v: Vertex) -> Result<SearchTree> {
    let n = t.n();
    if u >= n || v >= n || t.parent(v) != Some(u) {
        return Err(Error::NotAChild {
            parent: u,
            child: v,
        });
    }
    if g.n() != n {
        return Err(Error::VertexSetMismatch {
            tree: n,
            graph: g.n(),
        });
    }
    let before = t.parents();
    let mut parent = before.to_vec();
    parent[v] = before[u];
    parent[u] = Some(v);
    let root = if t.root() == u { v } else { t.root() };
    // A neighbor w of u inside the subtree of v reaches v through the child
    // of v whose subtree holds it; that subtree moves under u.
    for &w in g.neighbors(u) {
        let mut below = w;
        let mut cur = before[w];
        while let Some(x) = cur {
            if x == v {
                parent[below] = Some(u);
                break;
            }
            if x == u {
                break;
            }
            below = x;
            cur = before[x];
        }
    }
    Ok(SearchTree::from_parents_unchecked(root, parent))
}

/// Applies `seq` to `t` left to right; the error names the first step whose
/// pair is not parent and child at that point.
pub fn apply_sequence(g: &Graph, t: &SearchTree, seq: &RotationSequence) -> Result<SearchTree> {
    let mut cur = t.clone();
    for (index, r) in seq.iter().enumerate() {
        cur = rotate(g, &cur, r.parent, r.child).map_err(|err| match err {
            Error::NotAChild { parent, child } => Error::InapplicableStep {
                index,
                parent,
                child,
            },
            other => other,
        })?;
    }
    Ok(cur)
}

/// Reverses `seq` and swaps each pair, giving the sequence that undoes it.
pub fn invert_sequence(seq: &RotationSequence) -> RotationSequence {
    seq.iter().rev().map(|r| r.inverse()).collect()
}

/// Number of tubes in which the tubings of `t1` and `t2` differ.
pub fn tubing_difference(g: &Graph, t1: &SearchTree, t2: &SearchTree) -> Result<usize> {
    Ok(to_tubing(g, t1)?.symmetric_difference(&to_tubing(g, t2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search_tree::{from_elimination_order, validate};

    fn tree(parent: &[Option<Vertex>]) -> SearchTree {
        SearchTree::from_parents(parent.to_vec()).unwrap()
    }

    fn seq(pairs: &[(Vertex, Vertex)]) -> RotationSequence {
        pairs.iter().map(|&p| Rotation::from(p)).collect()
    }

    #[test]
    fn pairs_examples() {
        let single = Graph::new(1, []).unwrap();
        assert!(rotatable_pairs(&single, &SearchTree::singleton())
            .unwrap()
            .is_empty());
        let p3 = Graph::path(3);
        let balanced = tree(&[Some(1), None, Some(1)]);
        assert_eq!(
            rotatable_pairs(&p3, &balanced).unwrap(),
            vec![Rotation::new(1, 0), Rotation::new(1, 2)]
        );
        assert!(rotatable_pairs(&p3, &tree(&[None, Some(0), Some(0)])).is_err());
    }

    #[test]
    fn rotate_chain_on_path() {
        // 0 -> 1 -> 2; rotating (0, 1) lifts 1; {2} is not adjacent to 0 so it
        // stays under 1.
        let p3 = Graph::path(3);
        let chain = tree(&[None, Some(0), Some(1)]);
        let rotated = rotate(&p3, &chain, 0, 1).unwrap();
        assert_eq!(rotated, tree(&[Some(1), None, Some(1)]));
        assert_eq!(rotated, from_elimination_order(&p3, &[1, 0, 2]).unwrap());
        assert!(validate(&p3, &rotated).unwrap());
        assert_eq!(rotate(&p3, &rotated, 1, 0).unwrap(), chain);
    }

    /// Literal form of the rule: for each subtree S of v, move S under u iff
    /// u has a neighbor in S.
    fn rotate_by_subtrees(g: &Graph, t: &SearchTree, u: Vertex, v: Vertex) -> SearchTree {
        let mut parent = t.parents().to_vec();
        parent[v] = parent[u];
        parent[u] = Some(v);
        for c in t.children_of(v) {
            if t.descendants(c).iter().any(|&w| g.has_edge(u, w)) {
                parent[c] = Some(u);
            }
        }
        SearchTree::from_parents(parent).unwrap()
    }

    #[test]
    fn rotate_matches_subtree_rule() {
        use crate::rotation_graph::{enumerate_search_trees, Limits};
        let graphs = [
            Graph::path(5),
            Graph::star(4),
            Graph::complete(4),
            Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)]).unwrap(),
        ];
        for g in graphs {
            for t in enumerate_search_trees(&g, &Limits::default()).unwrap() {
                for r in tree_edges(&t) {
                    let fast = rotate(&g, &t, r.parent, r.child).unwrap();
                    assert_eq!(fast, rotate_by_subtrees(&g, &t, r.parent, r.child));
                    assert!(validate(&g, &fast).unwrap());
                }
            }
        }
    }

    #[test]
    fn rotate_on_complete_graph_moves_every_subtree() {
        let k3 = Graph::complete(3);
        let chain = from_elimination_order(&k3, &[2, 0, 1]).unwrap();
        let rotated = rotate(&k3, &chain, 2, 0).unwrap();
        assert_eq!(rotated, from_elimination_order(&k3, &[0, 2, 1]).unwrap());
    }

    #[test]
    fn rotate_requires_parent_child_pair() {
        let p3 = Graph::path(3);
        let chain = tree(&[None, Some(0), Some(1)]);
        assert_eq!(
            rotate(&p3, &chain, 0, 2),
            Err(Error::NotAChild {
                parent: 0,
                child: 2
            })
        );
        assert!(rotate(&p3, &chain, 1, 0).is_err());
        assert!(rotate(&p3, &chain, 9, 0).is_err());
    }

    #[test]
    fn sequences() {
        let p3 = Graph::path(3);
        let chain = tree(&[None, Some(0), Some(1)]);
        assert_eq!(
            apply_sequence(&p3, &chain, &RotationSequence::new()).unwrap(),
            chain
        );
        assert_eq!(
            apply_sequence(&p3, &chain, &seq(&[(0, 1), (1, 0)])).unwrap(),
            chain
        );
        assert_eq!(
            apply_sequence(&p3, &chain, &seq(&[(0, 1), (0, 1)])),
            Err(Error::InapplicableStep {
                index: 1,
                parent: 0,
                child: 1
            })
        );
    }

    #[test]
    fn inversion() {
        assert!(invert_sequence(&RotationSequence::new()).is_empty());
        assert_eq!(invert_sequence(&seq(&[(1, 0)])), seq(&[(0, 1)]));
        assert_eq!(
            invert_sequence(&seq(&[(1, 2), (3, 4)])),
            seq(&[(4, 3), (2, 1)])
        );
    }

    #[test]
    fn tubing_difference_examples() {
        let p3 = Graph::path(3);
        let chain = tree(&[None, Some(0), Some(1)]);
        assert_eq!(tubing_difference(&p3, &chain, &chain).unwrap(), 0);
        let rotated = rotate(&p3, &chain, 1, 2).unwrap();
        assert_eq!(tubing_difference(&p3, &chain, &rotated).unwrap(), 2);
    }

    #[test]
    fn json_shape() {
        let s = seq(&[(1, 0), (4, 8)]);
        assert_eq!(s.to_json(), "[[1,0],[4,8]]");
        assert_eq!(RotationSequence::from_json("[[1,0],[4,8]]").unwrap(), s);
        assert!(RotationSequence::from_json("[[1]]").is_err());
    }
}
