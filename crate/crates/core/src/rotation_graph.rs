//! Exhaustive enumeration of search trees and exact distances in the
//! rotation graph.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rotation::{rotate, tree_edges};
use crate::search_tree::{ensure_valid, SearchTree};

pub const DEFAULT_MAX_NODES: u128 = 10_000_000;

/// Resource caps for exhaustive work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of search trees enumerated or visited.
    pub max_nodes: u128,
    pub max_duration: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: DEFAULT_MAX_NODES,
            max_duration: None,
        }
    }
}

impl Limits {
    pub fn with_max_nodes(max_nodes: u128) -> Self {
        Limits {
            max_nodes,
            ..Limits::default()
        }
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.max_duration.map(|d| Instant::now() + d)
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_graph_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Number of search trees on `g`, by summing over the root of each
/// component the product of the counts of the components it leaves.
/// Saturates at `u128::MAX`.
pub fn count_search_trees(g: &Graph, limits: &Limits) -> Result<u128> {
    require_connected(g)?;
    let mut memo: HashMap<Vec<Vertex>, u128> = HashMap::new();
    let all: Vec<Vertex> = (0..g.n()).collect();
    count_component(g, &all, &mut memo, limits.max_nodes)
}

fn count_component(
    g: &Graph,
    component: &[Vertex],
    memo: &mut HashMap<Vec<Vertex>, u128>,
    cap: u128,
) -> Result<u128> {
    if component.len() == 1 {
        return Ok(1);
    }
    if let Some(&c) = memo.get(component) {
        return Ok(c);
    }
    if memo.len() as u128 >= cap {
        return Err(Error::CapExceeded {
            what: "distinct components while counting",
            explored: memo.len() as u128,
            cap,
        });
    }
    let mut total = 0u128;
    for &r in component {
        let mut product = 1u128;
        for rest in g.components_without(component, r) {
            product = product.saturating_mul(count_component(g, &rest, memo, cap)?);
        }
        total = total.saturating_add(product);
    }
    memo.insert(component.to_vec(), total);
    Ok(total)
}

/// Every search tree on `g` exactly once, sorted by `(root, parents)`.
pub fn enumerate_search_trees(g: &Graph, limits: &Limits) -> Result<Vec<SearchTree>> {
    let count = count_search_trees(g, limits)?;
    if count > limits.max_nodes {
        return Err(Error::CapExceeded {
            what: "search trees to enumerate",
            explored: count,
            cap: limits.max_nodes,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut parent = vec![None; g.n()];
    let mut pending = vec![((0..g.n()).collect::<Vec<_>>(), None)];
    let mut root = 0;
    choose_roots(g, &mut pending, &mut parent, &mut root, &mut out);
    out.sort_unstable();
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

type Pending = Vec<(Vec<Vertex>, Option<Vertex>)>;

fn choose_roots(
    g: &Graph,
    pending: &mut Pending,
    parent: &mut Vec<Option<Vertex>>,
    root: &mut Vertex,
    out: &mut Vec<SearchTree>,
) {
    let Some((component, above)) = pending.pop() else {
        out.push(SearchTree::from_parents_unchecked(*root, parent.clone()));
        return;
    };
    for &r in &component {
        parent[r] = above;
        if above.is_none() {
            *root = r;
        }
        let rest = g.components_without(&component, r);
        let depth = pending.len();
        pending.extend(rest.into_iter().map(|c| (c, Some(r))));
        choose_roots(g, pending, parent, root, out);
        pending.truncate(depth);
    }
    pending.push((component, above));
}

/// The rotation graph of `g`: all search trees, adjacent when one rotation
/// apart.
#[derive(Clone, Debug)]
pub struct RotationGraph {
    trees: Vec<SearchTree>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

pub fn build_rotation_graph(g: &Graph, limits: &Limits) -> Result<RotationGraph> {
    let trees = enumerate_search_trees(g, limits)?;
    let index: HashMap<&SearchTree, usize> =
        trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let adjacency: Vec<Vec<usize>> = trees
        .par_iter()
        .map(|t| {
            let mut out: Vec<usize> = tree_edges(t)
                .into_iter()
                .map(|r| {
                    let next = rotate(g, t, r.parent, r.child).expect("tree edge is rotatable");
                    index[&next]
                })
                .collect();
            out.sort_unstable();
            out
        })
        .collect();
    let mut edges = Vec::new();
    for (i, list) in adjacency.iter().enumerate() {
        for &j in list {
            if i < j {
                debug_assert!(adjacency[j].binary_search(&i).is_ok());
                edges.push((i, j));
            }
        }
    }
    Ok(RotationGraph {
        trees,
        adjacency,
        edges,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RotationGraphStats {
    pub nodes: usize,
    pub edges: usize,
    pub diameter: usize,
}

/// How nodes are labeled in DOT output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DotLabels {
    Index,
    Tree,
}

impl RotationGraph {
    pub fn trees(&self) -> &[SearchTree] {
        &self.trees
    }

    pub fn node_count(&self) -> usize {
        self.trees.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn index_of(&self, t: &SearchTree) -> Option<usize> {
        self.trees.binary_search(t).ok()
    }

    /// BFS distances from `source`; unreachable nodes get `usize::MAX`.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.trees.len()];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.trees.is_empty() || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// Largest eccentricity, from a BFS at every node.
    pub fn diameter(&self) -> Result<usize> {
        self.diameter_until(None)
    }

    /// As [`RotationGraph::diameter`], giving up once `deadline` passes.
    pub fn diameter_until(&self, deadline: Option<Instant>) -> Result<usize> {
        let eccentricities = (0..self.trees.len())
            .into_par_iter()
            .map(|s| {
                if deadline.is_some_and(|d| Instant::now() > d) {
                    return Err(Error::Timeout {
                        explored: self.trees.len() as u128,
                    });
                }
                Ok(self.distances_from(s).into_iter().max().unwrap_or(0))
            })
            .collect::<Result<Vec<usize>>>()?;
        match eccentricities.into_iter().max() {
            Some(usize::MAX) => Err(Error::Disconnected),
            other => Ok(other.unwrap_or(0)),
        }
    }

    pub fn stats(&self) -> Result<RotationGraphStats> {
        Ok(RotationGraphStats {
            nodes: self.node_count(),
            edges: self.edges.len(),
            diameter: self.diameter()?,
        })
    }

    pub fn to_dot(&self, labels: DotLabels) -> String {
        let mut out = String::from("graph rotation_graph {\n");
        for (i, t) in self.trees.iter().enumerate() {
            let label = match labels {
                DotLabels::Index => i.to_string(),
                DotLabels::Tree => t.to_json().replace('"', "\\\""),
            };
            writeln!(out, "  {i} [label=\"{label}\"];").unwrap();
        }
        for &(a, b) in &self.edges {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Diameter of the rotation graph of `g`.
pub fn diameter(g: &Graph, limits: &Limits) -> Result<usize> {
    let deadline = limits.deadline();
    build_rotation_graph(g, limits)?.diameter_until(deadline)
}

/// Result of a distance query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub distance: usize,
    /// Trees discovered by both searches together.
    pub explored: u128,
}

/// Exact rotation distance by bidirectional breadth-first search.
pub fn distance(g: &Graph, t1: &SearchTree, t2: &SearchTree, limits: &Limits) -> Result<usize> {
    Ok(distance_report(g, t1, t2, limits)?.distance)
}

pub fn distance_report(
    g: &Graph,
    t1: &SearchTree,
    t2: &SearchTree,
    limits: &Limits,
) -> Result<DistanceReport> {
    ensure_valid(g, t1)?;
    ensure_valid(g, t2)?;
    let n = g.n();
    if let Some(bits) = packed_width(n) {
        let encode = move |t: &SearchTree| pack(t, bits);
        let decode = move |k: &u128| unpack(*k, n, bits);
        bidirectional(g, t1, t2, limits, encode, decode)
    } else {
        let encode = |t: &SearchTree| -> Box<[u32]> {
            t.parents()
                .iter()
                .map(|p| p.map_or(u32::MAX, |p| p as u32))
                .collect()
        };
        #[allow(clippy::borrowed_box)] // the key type is Box<[u32]>
        let decode = |k: &Box<[u32]>| -> SearchTree {
            let parent: Vec<Option<Vertex>> = k
                .iter()
                .map(|&p| (p != u32::MAX).then_some(p as Vertex))
                .collect();
            let root = parent.iter().position(Option::is_none).expect("root");
            SearchTree::from_parents_unchecked(root, parent)
        };
        bidirectional(g, t1, t2, limits, encode, decode)
    }
}

fn packed_width(n: usize) -> Option<u32> {
    let bits = usize::BITS - n.leading_zeros();
    (bits as usize * n <= 128).then_some(bits)
}

/// Packs the parent array, writing `n` for the root.
fn pack(t: &SearchTree, bits: u32) -> u128 {
    let n = t.n();
    t.parents().iter().enumerate().fold(0u128, |acc, (v, p)| {
        acc | ((p.unwrap_or(n) as u128) << (bits * v as u32))
    })
}

fn unpack(key: u128, n: usize, bits: u32) -> SearchTree {
    let mask = (1u128 << bits) - 1;
    let mut root = 0;
    let parent = (0..n)
        .map(|v| {
            let p = ((key >> (bits * v as u32)) & mask) as usize;
            if p == n {
                root = v;
                None
            } else {
                Some(p)
            }
        })
        .collect();
    SearchTree::from_parents_unchecked(root, parent)
}

fn bidirectional<K, E, D>(
    g: &Graph,
    source: &SearchTree,
    target: &SearchTree,
    limits: &Limits,
    encode: E,
    decode: D,
) -> Result<DistanceReport>
where
    K: Hash + Eq + Clone + Send + Sync,
    E: Fn(&SearchTree) -> K + Sync,
    D: Fn(&K) -> SearchTree + Sync,
{
    if source == target {
        return Ok(DistanceReport {
            distance: 0,
            explored: 1,
        });
    }
    let deadline = limits.deadline();
    let mut seen = [FxHashMap::default(), FxHashMap::default()];
    let mut frontier = [vec![encode(source)], vec![encode(target)]];
    let mut depth = [0usize; 2];
    seen[0].insert(frontier[0][0].clone(), 0usize);
    seen[1].insert(frontier[1][0].clone(), 0usize);
    loop {
        let side = usize::from(frontier[1].len() < frontier[0].len());
        let other = 1 - side;
        if frontier[side].is_empty() {
            return Err(Error::Disconnected);
        }
        let next_keys: Vec<K> = frontier[side]
            .par_iter()
            .flat_map_iter(|key| {
                let t = decode(key);
                (0..t.n())
                    .filter_map(|v| {
                        let p = t.parent(v)?;
                        Some(encode(&rotate(g, &t, p, v).expect("tree edge")))
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        depth[side] += 1;
        let mut best: Option<usize> = None;
        let mut next = Vec::new();
        for key in next_keys {
            if let Some(&d) = seen[other].get(&key) {
                let total = depth[side] + d;
                best = Some(best.map_or(total, |b| b.min(total)));
            }
            if !seen[side].contains_key(&key) {
                seen[side].insert(key.clone(), depth[side]);
                next.push(key);
            }
        }
        let explored = (seen[0].len() + seen[1].len()) as u128;
        if let Some(distance) = best {
            return Ok(DistanceReport { distance, explored });
        }
        if explored > limits.max_nodes {
            return Err(Error::CapExceeded {
                what: "trees visited by distance search",
                explored,
                cap: limits.max_nodes,
            });
        }
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::Timeout { explored });
        }
        frontier[side] = next;
    }
}
