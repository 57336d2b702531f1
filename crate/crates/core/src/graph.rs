//! Simple undirected graphs with dense vertex ids.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;

/// Upper bound on the vertex count accepted by [`Graph::new`].
pub const MAX_VERTICES: usize = 1 << 16;

/// Largest `n` for which [`enumerate_labeled_trees`] is supported.
pub const MAX_LABELED_TREE_ORDER: usize = 8;

/// A simple undirected graph on the vertex set `0..n`.
///
/// Adjacency lists are sorted and free of duplicates. Graphs are immutable
/// once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        Graph::new(repr.n, repr.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize {
                n,
                reason: "too many vertices",
            });
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is well formed")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is well formed")
    }

    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is well formed")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.n()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub(crate) fn mask_of<'a, I>(&self, vertices: I) -> Result<Vec<bool>>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let mut mask = vec![false; self.n()];
        for &v in vertices {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(mask)
    }

    /// Connected components of the subgraph induced by `mask`, each sorted,
    /// listed by increasing minimum element.
    pub(crate) fn components_in(&self, mask: &[bool]) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n() {
            if !mask[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if mask[w] && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components of `G[set] - removed`.
    pub(crate) fn components_without(&self, set: &[Vertex], removed: Vertex) -> Vec<Vec<Vertex>> {
        let mut mask = vec![false; self.n()];
        for &v in set {
            mask[v] = true;
        }
        mask[removed] = false;
        self.components_in(&mask)
    }

    /// The connected components of `G - v`, ordered by minimum element.
    pub fn components_after_removal(&self, v: Vertex) -> Result<Vec<VertexSet>> {
        self.check_vertex(v)?;
        let mut mask = vec![true; self.n()];
        mask[v] = false;
        Ok(self
            .components_in(&mask)
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect())
    }

    /// Whether `G[set]` is connected. The empty set is not connected.
    pub fn is_connected(&self, set: &VertexSet) -> bool {
        match self.mask_of(set) {
            Ok(mask) => !set.is_empty() && self.components_in(&mask).len() == 1,
            Err(_) => false,
        }
    }

    pub(crate) fn is_connected_mask(&self, mask: &[bool]) -> bool {
        self.components_in(mask).len() == 1
    }

    pub fn is_graph_connected(&self) -> bool {
        self.n() > 0 && self.is_connected_mask(&vec![true; self.n()])
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.m + 1 == self.n() && self.is_graph_connected()
    }

    /// Degree-one vertices.
    pub fn leaves(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// The subgraph induced by `set`, relabeled to dense ids in increasing
    /// order of the host ids.
    pub fn induced(&self, set: &VertexSet) -> Result<Subgraph> {
        let mut local = vec![None; self.n()];
        let mut labels = Vec::with_capacity(set.len());
        for &v in set {
            self.check_vertex(v)?;
            local[v] = Some(labels.len());
            labels.push(v);
        }
        let edges = self
            .edges()
            .filter_map(|(u, v)| Some((local[u]?, local[v]?)))
            .collect::<Vec<_>>();
        Ok(Subgraph {
            graph: Graph::new(labels.len(), edges)?,
            labels,
            local,
        })
    }
}

/// An induced subgraph together with its relabeling to host ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    graph: Graph,
    labels: Vec<Vertex>,
    local: Vec<Option<Vertex>>,
}

impl Subgraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Host ids indexed by local id.
    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn to_host(&self, local: Vertex) -> Vertex {
        self.labels[local]
    }

    pub fn to_local(&self, host: Vertex) -> Option<Vertex> {
        self.local.get(host).copied().flatten()
    }
}

/// Decodes a Prüfer sequence over `0..n` into a labeled tree, `n >= 2`.
pub fn tree_from_prufer(n: usize, code: &[Vertex]) -> Result<Graph> {
    if n < 2 || code.len() != n - 2 {
        return Err(Error::UnsupportedSize {
            n,
            reason: "Prüfer code must have length n - 2",
        });
    }
    let mut degree = vec![1usize; n];
    for &c in code {
        if c >= n {
            return Err(Error::VertexOutOfRange { vertex: c, n });
        }
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges)
}

/// All `n^(n-2)` labeled trees on `n` vertices, in Prüfer-code order.
pub fn enumerate_labeled_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_LABELED_TREE_ORDER {
        return Err(Error::UnsupportedSize {
            n,
            reason: "labeled tree enumeration supports 1 <= n <= 8",
        });
    }
    if n == 1 {
        return Ok(vec![Graph::new(1, [])?]);
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut code = vec![0; len];
    for mut index in 0..total {
        for slot in code.iter_mut().rev() {
            *slot = index % n;
            index /= n;
        }
        out.push(tree_from_prufer(n, &code)?);
    }
    Ok(out)
}
