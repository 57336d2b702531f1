//! Search trees on connected graphs, and their tubing and vertex-ranking
//! counterparts.
//!
//! A search tree on `G` is a rooted tree on `V(G)` such that the subtrees
//! hanging below any vertex `v` are exactly the connected components left
//! when `v` is removed from the subgraph induced by `v`'s own subtree.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A rooted tree on `0..n`, stored as a root and a parent array.
///
/// The parent array always describes a single rooted tree spanning every
/// vertex; whether it is a *search* tree depends on the graph and is checked
/// by [`validate`]. Children are unordered.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TreeRepr", into = "TreeRepr")]
pub struct SearchTree {
    root: Vertex,
    parent: Vec<Option<Vertex>>,
}

#[derive(Serialize, Deserialize)]
struct TreeRepr {
    root: Vertex,
    parent: BTreeMap<Vertex, Vertex>,
}

impl TryFrom<TreeRepr> for SearchTree {
    type Error = Error;

    fn try_from(repr: TreeRepr) -> Result<Self> {
        let n = repr.parent.len() + 1;
        if repr.root >= n {
            return Err(Error::MalformedTree(format!(
                "root {} outside 0..{n}",
                repr.root
            )));
        }
        let mut parent = vec![None; n];
        for (&v, &p) in &repr.parent {
            if v >= n || p >= n {
                return Err(Error::MalformedTree(format!(
                    "parent entry {v} -> {p} outside 0..{n}"
                )));
            }
            if v == repr.root {
                return Err(Error::MalformedTree("root has a parent".into()));
            }
            parent[v] = Some(p);
        }
        SearchTree::from_parents(parent)
    }
}

impl From<SearchTree> for TreeRepr {
    fn from(t: SearchTree) -> Self {
        TreeRepr {
            root: t.root,
            parent: t
                .parent
                .iter()
                .enumerate()
                .filter_map(|(v, p)| p.map(|p| (v, p)))
                .collect(),
        }
    }
}

impl SearchTree {
    /// Builds a tree from a parent array; exactly one entry must be `None`.
    pub fn from_parents(parent: Vec<Option<Vertex>>) -> Result<Self> {
        let n = parent.len();
        let mut roots = parent.iter().enumerate().filter(|(_, p)| p.is_none());
        let root = match (roots.next(), roots.next()) {
            (Some((r, _)), None) => r,
            (None, _) => return Err(Error::MalformedTree("no root".into())),
            (Some(_), Some(_)) => return Err(Error::MalformedTree("several roots".into())),
        };
        // 0 = unvisited, 1 = on current walk, 2 = reaches the root
        let mut state = vec![0u8; n];
        state[root] = 2;
        let mut walk = Vec::new();
        for start in 0..n {
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                walk.push(v);
                let p = parent[v].expect("only the root lacks a parent");
                if p >= n {
                    return Err(Error::MalformedTree(format!("parent {p} outside 0..{n}")));
                }
                v = p;
            }
            if state[v] == 1 {
                return Err(Error::MalformedTree(format!("cycle through vertex {v}")));
            }
            for w in walk.drain(..) {
                state[w] = 2;
            }
        }
        Ok(SearchTree { root, parent })
    }

    /// The single-vertex tree.
    pub fn singleton() -> Self {
        SearchTree {
            root: 0,
            parent: vec![None],
        }
    }

    pub(crate) fn from_parents_unchecked(root: Vertex, parent: Vec<Option<Vertex>>) -> Self {
        debug_assert!(parent[root].is_none());
        SearchTree { root, parent }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization is infallible")
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<Vertex>] {
        &self.parent
    }

    /// Child lists indexed by vertex, each sorted.
    pub fn children(&self) -> Vec<Vec<Vertex>> {
        let mut children = vec![Vec::new(); self.n()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                children[p].push(v);
            }
        }
        children
    }

    pub fn children_of(&self, v: Vertex) -> Vec<Vertex> {
        (0..self.n())
            .filter(|&w| self.parent[w] == Some(v))
            .collect()
    }

    /// Number of edges from `v` up to the root.
    pub fn depth(&self, v: Vertex) -> usize {
        let mut d = 0;
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            d += 1;
            cur = p;
        }
        d
    }

    /// Vertices in breadth-first order from the root.
    pub fn bfs_order(&self) -> Vec<Vertex> {
        let children = self.children();
        let mut order = Vec::with_capacity(self.n());
        order.push(self.root);
        let mut i = 0;
        while i < order.len() {
            order.extend_from_slice(&children[order[i]]);
            i += 1;
        }
        order
    }

    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.n()];
        for v in self.bfs_order() {
            if let Some(p) = self.parent[v] {
                depth[v] = depth[p] + 1;
            }
        }
        depth
    }

    /// Number of vertices on a longest root-to-leaf path.
    pub fn height(&self) -> usize {
        self.depths().into_iter().max().map_or(0, |d| d + 1)
    }

    /// Vertex set of the subtree rooted at `v`, sorted.
    pub fn descendants(&self, v: Vertex) -> Vec<Vertex> {
        let children = self.children();
        descendants_with(&children, v)
    }

    /// Subtree vertex sets for every vertex, indexed by vertex.
    pub fn subtree_sets(&self) -> Vec<Vec<Vertex>> {
        let children = self.children();
        let mut sets: Vec<Vec<Vertex>> = vec![Vec::new(); self.n()];
        for v in self.bfs_order().into_iter().rev() {
            let mut set = vec![v];
            for &c in &children[v] {
                set.extend_from_slice(&sets[c]);
            }
            set.sort_unstable();
            sets[v] = set;
        }
        sets
    }

    /// Whether `a` is an ancestor of `b` (a vertex is its own ancestor).
    pub fn is_ancestor(&self, a: Vertex, b: Vertex) -> bool {
        let mut cur = Some(b);
        while let Some(v) = cur {
            if v == a {
                return true;
            }
            cur = self.parent[v];
        }
        false
    }
}

pub(crate) fn descendants_with(children: &[Vec<Vertex>], v: Vertex) -> Vec<Vertex> {
    let mut out = vec![v];
    let mut i = 0;
    while i < out.len() {
        out.extend_from_slice(&children[out[i]]);
        i += 1;
    }
    out.sort_unstable();
    out
}

fn check_same_vertex_set(g: &Graph, t: &SearchTree) -> Result<()> {
    if g.n() != t.n() {
        return Err(Error::VertexSetMismatch {
            tree: t.n(),
            graph: g.n(),
        });
    }
    Ok(())
}

/// Whether `t` is a search tree on `g`.
///
/// Checks that every edge of `g` joins an ancestor–descendant pair of `t`
/// (so distinct child subtrees are never adjacent) and that every subtree
/// induces a connected subgraph. Together these say that the child subtrees
/// of each vertex are exactly the components left after removing it.
pub fn validate(g: &Graph, t: &SearchTree) -> Result<bool> {
    check_same_vertex_set(g, t)?;
    let n = g.n();
    // Euler-tour intervals for O(1) ancestor queries.
    let children = t.children();
    let mut enter = vec![0usize; n];
    let mut exit = vec![0usize; n];
    let mut clock = 0;
    let mut stack = vec![(t.root, false)];
    while let Some((v, done)) = stack.pop() {
        if done {
            exit[v] = clock;
            continue;
        }
        enter[v] = clock;
        clock += 1;
        stack.push((v, true));
        for &c in &children[v] {
            stack.push((c, false));
        }
    }
    let related = |a: Vertex, b: Vertex| {
        (enter[a] <= enter[b] && exit[b] <= exit[a]) || (enter[b] <= enter[a] && exit[a] <= exit[b])
    };
    if !g.edges().all(|(a, b)| related(a, b)) {
        return Ok(false);
    }
    let mut mask = vec![false; n];
    for set in t.subtree_sets() {
        for &v in &set {
            mask[v] = true;
        }
        let connected = g.is_connected_mask(&mask);
        for &v in &set {
            mask[v] = false;
        }
        if !connected {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn ensure_valid(g: &Graph, t: &SearchTree) -> Result<()> {
    if validate(g, t)? {
        Ok(())
    } else {
        Err(Error::InvalidSearchTree)
    }
}

/// Builds the search tree whose every subtree is rooted at its earliest
/// vertex in `order`.
pub fn from_elimination_order(g: &Graph, order: &[Vertex]) -> Result<SearchTree> {
    let n = g.n();
    let mut position = vec![usize::MAX; n];
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return Err(Error::NotAPermutation);
        }
        position[v] = i;
    }
    if !g.is_graph_connected() {
        return Err(Error::Disconnected);
    }
    let mut parent = vec![None; n];
    let mut pending = vec![((0..n).collect::<Vec<_>>(), None)];
    while let Some((component, above)) = pending.pop() {
        let root = *component
            .iter()
            .min_by_key(|&&v| position[v])
            .expect("components are nonempty");
        parent[root] = above;
        for rest in g.components_without(&component, root) {
            pending.push((rest, Some(root)));
        }
    }
    Ok(SearchTree::from_parents_unchecked(order[0], parent))
}

/// A family of connected vertex sets, pairwise nested or nonadjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Vec<Vertex>>", into = "Vec<Vec<Vertex>>")]
pub struct Tubing {
    tubes: BTreeSet<Vec<Vertex>>,
}

impl From<Vec<Vec<Vertex>>> for Tubing {
    fn from(tubes: Vec<Vec<Vertex>>) -> Self {
        Tubing::new(tubes)
    }
}

impl From<Tubing> for Vec<Vec<Vertex>> {
    fn from(t: Tubing) -> Self {
        t.tubes.into_iter().collect()
    }
}

impl Tubing {
    pub fn new<I>(tubes: I) -> Self
    where
        I: IntoIterator<Item = Vec<Vertex>>,
    {
        Tubing {
            tubes: tubes
                .into_iter()
                .map(|mut t| {
                    t.sort_unstable();
                    t.dedup();
                    t
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tubing serialization is infallible")
    }

    pub fn tubes(&self) -> impl Iterator<Item = &Vec<Vertex>> {
        self.tubes.iter()
    }

    pub fn len(&self) -> usize {
        self.tubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tubes.is_empty()
    }

    pub fn symmetric_difference(&self, other: &Tubing) -> usize {
        self.tubes.symmetric_difference(&other.tubes).count()
    }

    /// Checks that every tube is a nonempty connected set and that every
    /// pair of tubes is nested or nonadjacent.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let mut masks = Vec::with_capacity(self.len());
        for tube in &self.tubes {
            if tube.is_empty() {
                return Err(Error::InvalidTubing("empty tube".into()));
            }
            let mask = g.mask_of(tube)?;
            if !g.is_connected_mask(&mask) {
                return Err(Error::InvalidTubing(format!(
                    "tube {tube:?} is not connected"
                )));
            }
            masks.push(mask);
        }
        let tubes: Vec<&Vec<Vertex>> = self.tubes.iter().collect();
        for i in 0..tubes.len() {
            for j in i + 1..tubes.len() {
                let (a, b) = (tubes[i], tubes[j]);
                let a_in_b = a.iter().all(|&v| masks[j][v]);
                let b_in_a = b.iter().all(|&v| masks[i][v]);
                if a_in_b || b_in_a {
                    continue;
                }
                let touching = a
                    .iter()
                    .any(|&v| masks[j][v] || g.neighbors(v).iter().any(|&w| masks[j][w]));
                if touching {
                    return Err(Error::InvalidTubing(format!(
                        "tubes {a:?} and {b:?} are neither nested nor nonadjacent"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The maximal tubing `{ desc(v) : v in V }` of a search tree.
pub fn to_tubing(g: &Graph, t: &SearchTree) -> Result<Tubing> {
    ensure_valid(g, t)?;
    Ok(Tubing::new(t.subtree_sets()))
}

/// Inverse of [`to_tubing`].
pub fn from_tubing(g: &Graph, tubing: &Tubing) -> Result<SearchTree> {
    let n = g.n();
    tubing.check(g)?;
    if tubing.len() != n || !tubing.tubes.contains(&(0..n).collect::<Vec<_>>()) {
        return Err(Error::InvalidTubing("not a maximal tubing".into()));
    }
    // Tubes are pairwise nested or disjoint, so the smallest strict superset
    // of a tube is unique.
    let mut by_size: Vec<&Vec<Vertex>> = tubing.tubes.iter().collect();
    by_size.sort_by_key(|t| t.len());
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut top = vec![usize::MAX; by_size.len()];
    let mut parent_tube = vec![None; by_size.len()];
    for (i, tube) in by_size.iter().enumerate() {
        let mut fresh = Vec::new();
        for &v in tube.iter() {
            match owner[v] {
                None => fresh.push(v),
                Some(j) if parent_tube[j].is_none() => parent_tube[j] = Some(i),
                Some(_) => {}
            }
        }
        if fresh.len() != 1 {
            return Err(Error::InvalidTubing("not a maximal tubing".into()));
        }
        top[i] = fresh[0];
        for &v in tube.iter() {
            // Owner tracks the largest tube processed so far containing v.
            owner[v] = Some(i);
        }
    }
    let mut parent = vec![None; n];
    for (i, p) in parent_tube.iter().enumerate() {
        if let Some(p) = p {
            parent[top[i]] = Some(top[*p]);
        }
    }
    let tree = SearchTree::from_parents(parent)?;
    if to_tubing(g, &tree)? != *tubing {
        return Err(Error::InvalidTubing("not a maximal tubing".into()));
    }
    Ok(tree)
}

/// A vertex coloring with positive integer colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ranking {
    colors: Vec<usize>,
}

impl Ranking {
    pub fn new(colors: Vec<usize>) -> Self {
        Ranking { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    pub fn max_color(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Whether equal colors are always separated by a larger color.
    ///
    /// Equivalent check: for each color `c`, every component of the subgraph
    /// induced by colors `<= c` holds at most one vertex of color `c`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() || self.colors.contains(&0) {
            return false;
        }
        let distinct: BTreeSet<usize> = self.colors.iter().copied().collect();
        for c in distinct {
            let mask: Vec<bool> = self.colors.iter().map(|&x| x <= c).collect();
            for comp in g.components_in(&mask) {
                if comp.iter().filter(|&&v| self.colors[v] == c).count() > 1 {
                    return false;
                }
            }
        }
        true
    }
}

/// Colors each vertex by `height - depth`, so the root gets the largest
/// color and the deepest leaves get color 1.
pub fn to_ranking(g: &Graph, t: &SearchTree) -> Result<Ranking> {
    ensure_valid(g, t)?;
    let depths = t.depths();
    let height = t.height();
    Ok(Ranking::new(
        depths.into_iter().map(|d| height - d).collect(),
    ))
}

/// Builds a search tree by repeatedly rooting each component at its unique
/// largest color.
pub fn from_ranking(g: &Graph, ranking: &Ranking) -> Result<SearchTree> {
    let n = g.n();
    if ranking.colors.len() != n {
        return Err(Error::InvalidRanking(format!(
            "{} colors for {n} vertices",
            ranking.colors.len()
        )));
    }
    if ranking.colors.contains(&0) {
        return Err(Error::InvalidRanking("colors must be positive".into()));
    }
    if !g.is_graph_connected() {
        return Err(Error::Disconnected);
    }
    let mut parent = vec![None; n];
    let mut root = None;
    let mut pending = vec![((0..n).collect::<Vec<_>>(), None)];
    while let Some((component, above)) = pending.pop() {
        let best = component
            .iter()
            .map(|&v| ranking.colors[v])
            .max()
            .expect("nonempty");
        let mut tops = component.iter().filter(|&&v| ranking.colors[v] == best);
        let top = *tops.next().expect("maximum is attained");
        if let Some(&other) = tops.next() {
            return Err(Error::InvalidRanking(format!(
                "vertices {top} and {other} share the maximum color {best} of a component"
            )));
        }
        parent[top] = above;
        if above.is_none() {
            root = Some(top);
        }
        for rest in g.components_without(&component, top) {
            pending.push((rest, Some(top)));
        }
    }
    Ok(SearchTree::from_parents_unchecked(
        root.expect("root assigned"),
        parent,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(parent: &[Option<Vertex>]) -> SearchTree {
        SearchTree::from_parents(parent.to_vec()).unwrap()
    }

    fn p3_balanced() -> SearchTree {
        tree(&[Some(1), None, Some(1)])
    }

    fn p3_chain() -> SearchTree {
        tree(&[None, Some(0), Some(1)])
    }

    #[test]
    fn malformed_parent_arrays() {
        assert!(SearchTree::from_parents(vec![]).is_err());
        assert!(SearchTree::from_parents(vec![None, None]).is_err());
        assert!(SearchTree::from_parents(vec![Some(1), Some(0), None]).is_err());
        assert!(SearchTree::from_parents(vec![None, Some(7)]).is_err());
        assert!(SearchTree::from_parents(vec![Some(1), Some(1)]).is_err());
    }

    #[test]
    fn validate_examples() {
        let single = Graph::new(1, []).unwrap();
        assert!(validate(&single, &SearchTree::singleton()).unwrap());
        let p3 = Graph::path(3);
        assert!(validate(&p3, &p3_balanced()).unwrap());
        // P3 - 0 is connected, so 0 must have a single child.
        assert!(!validate(&p3, &tree(&[None, Some(0), Some(0)])).unwrap());
        assert_eq!(
            validate(&p3, &SearchTree::singleton()),
            Err(Error::VertexSetMismatch { tree: 1, graph: 3 })
        );
    }

    #[test]
    fn validate_rejects_disconnected_subtree() {
        // root 1 over chain 0 -> 2: subtree {0, 2} is not connected in P3.
        let p3 = Graph::path(3);
        assert!(!validate(&p3, &tree(&[Some(1), None, Some(0)])).unwrap());
    }

    #[test]
    fn elimination_order_examples() {
        let p3 = Graph::path(3);
        assert_eq!(
            from_elimination_order(&p3, &[1, 0, 2]).unwrap(),
            p3_balanced()
        );
        assert_eq!(from_elimination_order(&p3, &[0, 1, 2]).unwrap(), p3_chain());
        let k3 = Graph::complete(3);
        assert_eq!(
            from_elimination_order(&k3, &[2, 0, 1]).unwrap(),
            tree(&[Some(2), Some(0), None])
        );
        assert_eq!(
            from_elimination_order(&p3, &[0, 0, 1]),
            Err(Error::NotAPermutation)
        );
        assert_eq!(
            from_elimination_order(&p3, &[0, 1]),
            Err(Error::NotAPermutation)
        );
        let split = Graph::new(2, []).unwrap();
        assert_eq!(
            from_elimination_order(&split, &[0, 1]),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn tubing_examples() {
        let single = Graph::new(1, []).unwrap();
        assert_eq!(
            to_tubing(&single, &SearchTree::singleton()).unwrap(),
            Tubing::new([vec![0]])
        );
        let p3 = Graph::path(3);
        let balanced = Tubing::new([vec![0], vec![2], vec![0, 1, 2]]);
        assert_eq!(to_tubing(&p3, &p3_balanced()).unwrap(), balanced);
        assert_eq!(
            to_tubing(&p3, &p3_chain()).unwrap(),
            Tubing::new([vec![2], vec![1, 2], vec![0, 1, 2]])
        );
        assert_eq!(from_tubing(&p3, &balanced).unwrap(), p3_balanced());
        assert_eq!(
            from_tubing(&single, &Tubing::new([vec![0]])).unwrap(),
            SearchTree::singleton()
        );
        assert_eq!(balanced.to_json(), "[[0],[0,1,2],[2]]");
    }

    #[test]
    fn tubing_errors() {
        let p3 = Graph::path(3);
        // not maximal
        assert!(from_tubing(&p3, &Tubing::new([vec![0], vec![0, 1, 2]])).is_err());
        // {0} and {1} are adjacent and not nested
        assert!(from_tubing(&p3, &Tubing::new([vec![0], vec![1], vec![0, 1, 2]])).is_err());
        // disconnected tube
        assert!(from_tubing(&p3, &Tubing::new([vec![0, 2], vec![0], vec![0, 1, 2]])).is_err());
        // missing the full vertex set
        assert!(from_tubing(&p3, &Tubing::new([vec![0], vec![2], vec![0, 1]])).is_err());
        assert!(from_tubing(&p3, &Tubing::new([vec![0], vec![2], vec![0, 1, 7]])).is_err());
    }

    #[test]
    fn ranking_examples() {
        let single = Graph::new(1, []).unwrap();
        assert_eq!(
            to_ranking(&single, &SearchTree::singleton())
                .unwrap()
                .colors(),
            &[1]
        );
        let p3 = Graph::path(3);
        assert_eq!(
            to_ranking(&p3, &p3_balanced()).unwrap().colors(),
            &[1, 2, 1]
        );
        assert_eq!(to_ranking(&p3, &p3_chain()).unwrap().colors(), &[3, 2, 1]);
        assert_eq!(
            from_ranking(&p3, &Ranking::new(vec![1, 2, 1])).unwrap(),
            p3_balanced()
        );
        assert_eq!(
            from_ranking(&p3, &Ranking::new(vec![3, 2, 1])).unwrap(),
            p3_chain()
        );
        assert_eq!(
            from_ranking(&single, &Ranking::new(vec![1])).unwrap(),
            SearchTree::singleton()
        );
    }

    #[test]
    fn ranking_errors() {
        let p3 = Graph::path(3);
        assert!(matches!(
            from_ranking(&p3, &Ranking::new(vec![2, 1, 2])),
            Err(Error::InvalidRanking(_))
        ));
        assert!(from_ranking(&p3, &Ranking::new(vec![1, 2])).is_err());
        assert!(!Ranking::new(vec![2, 1, 2]).is_valid_for(&p3));
        assert!(Ranking::new(vec![1, 2, 1]).is_valid_for(&p3));
        assert!(!Ranking::new(vec![0, 2, 1]).is_valid_for(&p3));
    }

    #[test]
    fn height_examples() {
        assert_eq!(SearchTree::singleton().height(), 1);
        assert_eq!(p3_balanced().height(), 2);
        let chain: Vec<Option<Vertex>> = (0..7)
            .map(|v| if v == 0 { None } else { Some(v - 1) })
            .collect();
        assert_eq!(tree(&chain).height(), 7);
    }

    #[test]
    fn json_shape() {
        let t = p3_balanced();
        assert_eq!(t.to_json(), r#"{"root":1,"parent":{"0":1,"2":1}}"#);
        assert_eq!(SearchTree::from_json(&t.to_json()).unwrap(), t);
        assert!(SearchTree::from_json(r#"{"root":0,"parent":{"0":1}}"#).is_err());
        assert!(SearchTree::from_json(r#"{"root":5,"parent":{}}"#).is_err());
        assert!(SearchTree::from_json(r#"{"root":0,"parent":{"1":2,"2":1}}"#).is_err());
    }
}
