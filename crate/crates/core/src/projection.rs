//! Pruning and projection of search trees on tree graphs, and projection of
//! rotation sequences.
//!
//! Projecting a search tree `T` on `G` onto a connected vertex set `S` gives
//! a search tree on `G[S]`. Two routes compute it: [`project_tree`] prunes
//! leaves of `G` outside `S` one at a time, while [`project_tree_direct`]
//! handles each component of `T - S` in one step, contracting it to an edge
//! or deleting it.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph, Vertex, VertexSet};
use crate::rotation::{rotate, Rotation, RotationSequence};
use crate::search_tree::{ensure_valid, SearchTree};

/// A search tree on an induced subgraph, together with that subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub subgraph: Subgraph,
    /// The projected tree in the subgraph's local ids.
    pub tree: SearchTree,
}

impl Projection {
    pub fn graph(&self) -> &Graph {
        self.subgraph.graph()
    }

    pub fn host_root(&self) -> Vertex {
        self.subgraph.to_host(self.tree.root())
    }

    /// Parent map in host ids.
    pub fn host_parents(&self) -> BTreeMap<Vertex, Vertex> {
        (0..self.tree.n())
            .filter_map(|v| {
                self.tree
                    .parent(v)
                    .map(|p| (self.subgraph.to_host(v), self.subgraph.to_host(p)))
            })
            .collect()
    }

    /// The projected tree in the search-tree JSON shape, keyed by host ids.
    pub fn host_json(&self) -> Value {
        let parent: serde_json::Map<String, Value> = self
            .host_parents()
            .into_iter()
            .map(|(v, p)| (v.to_string(), json!(p)))
            .collect();
        json!({ "root": self.host_root(), "parent": parent })
    }

    /// Rewrites a host-id sequence in local ids.
    pub fn localize(&self, seq: &RotationSequence) -> Result<RotationSequence> {
        seq.iter()
            .map(|r| {
                let local = |v| {
                    self.subgraph.to_local(v).ok_or(Error::VertexOutOfRange {
                        vertex: v,
                        n: self.graph().n(),
                    })
                };
                Ok(Rotation::new(local(r.parent)?, local(r.child)?))
            })
            .collect()
    }
}

/// A search tree on a shrinking set of live host vertices.
struct HostTree<'g> {
    g: &'g Graph,
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    alive: Vec<bool>,
}

impl<'g> HostTree<'g> {
    fn new(g: &'g Graph, t: &SearchTree) -> Self {
        HostTree {
            g,
            root: t.root(),
            parent: t.parents().to_vec(),
            alive: vec![true; g.n()],
        }
    }

    fn live_degree(&self, v: Vertex) -> usize {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&w| self.alive[w])
            .count()
    }

    fn live_children(&self, x: Vertex) -> Vec<Vertex> {
        (0..self.g.n())
            .filter(|&w| self.alive[w] && self.parent[w] == Some(x))
            .collect()
    }

    /// Removes the live leaf `x` of the host graph.
    fn prune(&mut self, x: Vertex) {
        let children = self.live_children(x);
        debug_assert!(children.len() <= 1, "a graph leaf has at most one child");
        match (self.parent[x], children.first()) {
            // leaf of the search tree: drop it
            (Some(_), None) => {}
            // splice the parent and the single child together
            (Some(p), Some(&c)) => self.parent[c] = Some(p),
            // root with its single child promoted
            (None, Some(&c)) => {
                self.parent[c] = None;
                self.root = c;
            }
            (None, None) => unreachable!("the last vertex is never pruned"),
        }
        self.alive[x] = false;
        self.parent[x] = None;
    }

    fn finish(self) -> Result<Projection> {
        let set: VertexSet = (0..self.g.n()).filter(|&v| self.alive[v]).collect();
        let subgraph = self.g.induced(&set)?;
        let local = |v: Vertex| subgraph.to_local(v).expect("live vertex");
        let parent = subgraph
            .labels()
            .iter()
            .map(|&v| self.parent[v].map(local))
            .collect();
        let tree = SearchTree::from_parents(parent)?;
        debug_assert_eq!(subgraph.to_host(tree.root()), self.root);
        Ok(Projection { subgraph, tree })
    }
}

fn require_tree(g: &Graph) -> Result<()> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Removes the graph leaf `x` from `t`, giving a search tree on `g - x`.
pub fn prune_leaf(g: &Graph, t: &SearchTree, x: Vertex) -> Result<Projection> {
    require_tree(g)?;
    g.check_vertex(x)?;
    if g.degree(x) != 1 {
        return Err(Error::NotALeaf(x));
    }
    ensure_valid(g, t)?;
    let mut host = HostTree::new(g, t);
    host.prune(x);
    host.finish()
}

fn check_projection_input(g: &Graph, t: &SearchTree, s: &VertexSet) -> Result<()> {
    require_tree(g)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&v) = s.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    if !g.is_connected(s) {
        return Err(Error::DisconnectedSubset);
    }
    ensure_valid(g, t)
}

/// Projects `t` onto `s` by pruning, at each step, the smallest live graph
/// leaf outside `s`.
pub fn project_tree(g: &Graph, t: &SearchTree, s: &VertexSet) -> Result<Projection> {
    check_projection_input(g, t, s)?;
    let mut host = HostTree::new(g, t);
    let mut remaining = g.n() - s.len();
    while remaining > 0 {
        let x = (0..g.n())
            .find(|&v| host.alive[v] && !s.contains(&v) && host.live_degree(v) == 1)
            .expect("a live leaf outside a connected subset exists");
        host.prune(x);
        remaining -= 1;
    }
    host.finish()
}

/// Projects `t` onto `s` component by component.
///
/// For each component `C` of `T - s`: if two vertices of `s` are adjacent
/// to `C` in `T`, `C` is replaced by an edge between them; if only one is,
/// `C` is deleted, and that vertex becomes the root when `C` held the root.
pub fn project_tree_direct(g: &Graph, t: &SearchTree, s: &VertexSet) -> Result<Projection> {
    check_projection_input(g, t, s)?;
    let n = g.n();
    let inside: Vec<bool> = (0..n).map(|v| s.contains(&v)).collect();
    let outside_forest = Graph::new(
        n,
        (0..n).filter_map(|v| {
            let p = t.parent(v)?;
            (!inside[v] && !inside[p]).then_some((v, p))
        }),
    )?;
    let outside_mask: Vec<bool> = inside.iter().map(|&b| !b).collect();

    let mut parent: Vec<Option<Vertex>> = (0..n)
        .map(|v| match t.parent(v) {
            Some(p) if inside[v] && inside[p] => Some(p),
            _ => None,
        })
        .collect();
    let mut root = if inside[t.root()] {
        Some(t.root())
    } else {
        None
    };

    for component in outside_forest.components_in(&outside_mask) {
        let mut in_c = vec![false; n];
        for &v in &component {
            in_c[v] = true;
        }
        // Exactly one vertex of C has its parent outside C (or is the root).
        let top = *component
            .iter()
            .find(|&&v| t.parent(v).is_none_or(|p| !in_c[p]))
            .expect("a component of a rooted forest has a top vertex");
        let above = t.parent(top);
        let below: Vec<Vertex> = (0..n)
            .filter(|&w| inside[w] && t.parent(w).is_some_and(|p| in_c[p]))
            .collect();
        match (above, below.as_slice()) {
            (Some(a), [b]) => parent[*b] = Some(a),
            (Some(_), []) => {}
            (None, [b]) => root = Some(*b),
            _ => {
                return Err(Error::MalformedTree(format!(
                    "component {component:?} of T - S touches more than two vertices of S"
                )))
            }
        }
    }

    let subgraph = g.induced(s)?;
    let local = |v: Vertex| subgraph.to_local(v).expect("vertex of S");
    let local_parent = subgraph
        .labels()
        .iter()
        .map(|&v| parent[v].map(local))
        .collect();
    let tree = SearchTree::from_parents(local_parent)?;
    debug_assert_eq!(Some(subgraph.to_host(tree.root())), root);
    Ok(Projection { subgraph, tree })
}

/// Keeps the rotations whose two vertices both lie in `s`.
pub fn project_sequence(seq: &RotationSequence, s: &VertexSet) -> RotationSequence {
    seq.iter()
        .copied()
        .filter(|r| s.contains(&r.parent) && s.contains(&r.child))
        .collect()
}

/// Replays a projected sequence, treating any step whose pair is not parent
/// and child at that point as the identity. Returns the final tree and the
/// number of such identity steps.
pub fn replay_projected(
    g: &Graph,
    t: &SearchTree,
    seq: &RotationSequence,
) -> Result<(SearchTree, usize)> {
    let mut cur = t.clone();
    let mut skipped = 0;
    for r in seq {
        match rotate(g, &cur, r.parent, r.child) {
            Ok(next) => cur = next,
            Err(Error::NotAChild { .. }) => skipped += 1,
            Err(other) => return Err(other),
        }
    }
    Ok((cur, skipped))
}
