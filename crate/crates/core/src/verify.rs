//! Invariant suites run by the `check` command and the acceptance tests.
//!
//! Each suite exercises one structural property over exhaustive or random
//! instances and reports how many cases it checked and how many failed.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::constructions::{
    alternation_number, build_gk, build_tk, build_tk_prime, centroid_transform, centroid_tree,
    classify_rotation, log_height_bound, lower_bound_f, transform, transform_length_bound,
    RotationClass,
};
use crate::error::Result;
use crate::graph::{enumerate_labeled_trees, Graph, Vertex};
use crate::projection::{
    project_sequence, project_tree, project_tree_direct, prune_leaf, replay_projected,
};
use crate::rotation::{apply_sequence, rotate, tree_edges, tubing_difference};
use crate::rotation_graph::{
    build_rotation_graph, count_search_trees, distance_report, enumerate_search_trees, Limits,
};
use crate::sampling::{random_connected_subset, random_search_tree, random_tree, random_walk};
use crate::search_tree::{to_tubing, validate, SearchTree};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            ..CheckReport::default()
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0 && self.cases > 0
    }
}

/// All connected labeled graphs on `n <= 6` vertices.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "supported for 1 <= n <= 6");
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::new(n, edges).expect("valid edges");
            g.is_graph_connected().then_some(g)
        })
        .collect()
}

fn catalan(n: u128) -> u128 {
    // C(2n, n) / (n + 1), computed incrementally
    (1..=n).fold(1u128, |c, i| c * (n + i) / i) / (n + 1)
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Search-tree counts on paths (Catalan numbers) and complete graphs
/// (factorials).
pub fn correspondence_counts(max_path: usize, max_complete: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("correspondence_counts");
    let limits = Limits::default();
    for n in 1..=max_path {
        let got = enumerate_search_trees(&Graph::path(n), &limits)?.len() as u128;
        let want = catalan(n as u128);
        report.record(got == want, || {
            format!("path {n}: {got} trees, expected {want}")
        });
    }
    for n in 2..=max_complete {
        let got = enumerate_search_trees(&Graph::complete(n), &limits)?.len() as u128;
        let want = factorial(n as u128);
        report.record(got == want, || {
            format!("K{n}: {got} trees, expected {want}")
        });
    }
    Ok(report)
}

/// Every rotation on every search tree of every connected graph with at most
/// `max_n` vertices changes the tubing by exactly two tubes, yields a valid
/// search tree, and is undone by the reverse rotation.
pub fn flip_characterization(max_n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("flip_characterization");
    let limits = Limits::default();
    for n in 1..=max_n {
        for g in all_connected_graphs(n) {
            for t in enumerate_search_trees(&g, &limits)? {
                for r in tree_edges(&t) {
                    let next = rotate(&g, &t, r.parent, r.child)?;
                    let ok = validate(&g, &next)?
                        && tubing_difference(&g, &t, &next)? == 2
                        && rotate(&g, &next, r.child, r.parent)? == t;
                    report.record(ok, || {
                        format!("graph {} tree {} rotation {r:?}", g.to_json(), t.to_json())
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Two search trees whose tubings differ in exactly two tubes are one
/// rotation apart, on every connected graph with at most `max_n` vertices.
pub fn flip_converse(max_n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("flip_converse");
    let limits = Limits::default();
    for n in 1..=max_n {
        for g in all_connected_graphs(n) {
            let rg = build_rotation_graph(&g, &limits)?;
            let tubings = rg
                .trees()
                .iter()
                .map(|t| to_tubing(&g, t))
                .collect::<Result<Vec<_>>>()?;
            for i in 0..tubings.len() {
                for j in i + 1..tubings.len() {
                    if tubings[i].symmetric_difference(&tubings[j]) == 2 {
                        let adjacent = rg.neighbors(i).binary_search(&j).is_ok();
                        report.record(adjacent, || {
                            format!("graph {} nodes {i} and {j}", g.to_json())
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

fn structure_case(g: &Graph, report: &mut CheckReport, limits: &Limits) -> Result<()> {
    let rg = build_rotation_graph(g, limits)?;
    let expected = count_search_trees(g, limits)?;
    let degree = g.n() - 1;
    let ok = rg.is_connected()
        && rg.degrees().all(|d| d == degree)
        && rg.node_count() as u128 == expected;
    report.record(ok, || format!("graph {}", g.to_json()));
    Ok(())
}

/// Rotation graphs of all labeled trees, paths and complete graphs with at
/// most `max_n` vertices are connected and `(n-1)`-regular.
pub fn rotation_graph_structure(max_n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("rotation_graph_structure");
    let limits = Limits::default();
    for n in 1..=max_n {
        for g in enumerate_labeled_trees(n)? {
            structure_case(&g, &mut report, &limits)?;
        }
        structure_case(&Graph::path(n), &mut report, &limits)?;
        structure_case(&Graph::complete(n), &mut report, &limits)?;
    }
    Ok(report)
}

/// The rotation-graph diameter of every labeled tree with at most `max_n`
/// vertices is at least its number of edges.
pub fn edge_lower_bound(max_n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("edge_lower_bound");
    let limits = Limits::default();
    let mut tight = 0;
    for n in 1..=max_n {
        for g in enumerate_labeled_trees(n)? {
            let d = build_rotation_graph(&g, &limits)?.diameter()?;
            tight += usize::from(d == g.edge_count());
            report.record(d >= g.edge_count(), || {
                format!("tree {} has diameter {d}", g.to_json())
            });
        }
    }
    report
        .notes
        .push(format!("{tight} trees attain diameter = edge count"));
    Ok(report)
}

/// Projecting the endpoint of a rotation sequence equals replaying the
/// projected sequence on the projected start, on random instances. Also
/// checks that both projection routes agree and that the projected
/// sequence applies without identity steps.
pub fn projection_commutes<R: Rng + ?Sized>(
    rng: &mut R,
    instances: usize,
    max_n: usize,
    max_len: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("projection_commutes");
    let mut identity_steps = 0;
    let mut kept_steps = 0;
    for _ in 0..instances {
        let n = rng.gen_range(1..=max_n);
        let g = random_tree(rng, n);
        let start = random_search_tree(rng, &g);
        let len = rng.gen_range(0..=max_len);
        let (seq, end) = random_walk(rng, &g, &start, len);
        let s = random_connected_subset(rng, &g);

        let before = project_tree(&g, &start, &s)?;
        let after = project_tree(&g, &end, &s)?;
        let local_seq = before.localize(&project_sequence(&seq, &s))?;
        let (replayed, skipped) = replay_projected(before.graph(), &before.tree, &local_seq)?;
        identity_steps += skipped;
        kept_steps += local_seq.len();
        let strict = apply_sequence(before.graph(), &before.tree, &local_seq).ok();
        let direct_ok = project_tree_direct(&g, &start, &s)? == before
            && project_tree_direct(&g, &end, &s)? == after;
        let ok = replayed == after.tree && strict.as_ref() == Some(&after.tree) && direct_ok;
        report.record(ok, || {
            format!(
                "graph {} start {} sequence {} subset {s:?}",
                g.to_json(),
                start.to_json(),
                seq.to_json()
            )
        });
    }
    report.notes.push(format!(
        "{kept_steps} projected rotations replayed, {identity_steps} were identity steps"
    ));
    Ok(report)
}

/// Pruning two leaves of a tree graph in either order gives the same search
/// tree.
pub fn shelling_invariance<R: Rng + ?Sized>(
    rng: &mut R,
    instances: usize,
    max_n: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("shelling_invariance");
    for _ in 0..instances {
        let n = rng.gen_range(3..=max_n.max(3));
        let g = random_tree(rng, n);
        let t = random_search_tree(rng, &g);
        let leaves = g.leaves();
        let picked: Vec<Vertex> = leaves.choose_multiple(rng, 2).copied().collect();
        let (x, y) = (picked[0], picked[1]);
        let ok = prune_pair(&g, &t, x, y)? == prune_pair(&g, &t, y, x)?;
        report.record(ok, || {
            format!("graph {} tree {} leaves {x}, {y}", g.to_json(), t.to_json())
        });
    }
    Ok(report)
}

/// Root and parent map, in host ids, after pruning `x` and then `y`.
fn prune_pair(
    g: &Graph,
    t: &SearchTree,
    x: Vertex,
    y: Vertex,
) -> Result<(Vertex, BTreeMap<Vertex, Vertex>)> {
    let first = prune_leaf(g, t, x)?;
    let y_local = first.subgraph.to_local(y).expect("y survives pruning x");
    let second = prune_leaf(first.graph(), &first.tree, y_local)?;
    let host = |v: Vertex| first.subgraph.to_host(second.subgraph.to_host(v));
    let parents = second
        .host_parents()
        .into_iter()
        .map(|(v, p)| (first.subgraph.to_host(v), first.subgraph.to_host(p)))
        .collect();
    Ok((host(second.tree.root()), parents))
}

/// Per-class extremes of the change in alternation number under a single
/// rotation on search trees of `G_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AlternationDeltas {
    pub pairs: u64,
    pub max_increase: BTreeMap<String, i64>,
    pub count: BTreeMap<String, u64>,
}

fn class_name(c: RotationClass) -> String {
    format!("{c:?}")
}

fn alternation_pass(
    k: usize,
    trees: impl IntoIterator<Item = SearchTree>,
    report: &mut CheckReport,
    deltas: &mut AlternationDeltas,
) -> Result<()> {
    let spec = build_gk(k)?;
    for t in trees {
        let before = alternation_number(&spec, &t) as i64;
        for r in tree_edges(&t) {
            let next = rotate(&spec.graph, &t, r.parent, r.child)?;
            let delta = alternation_number(&spec, &next) as i64 - before;
            let class = classify_rotation(&spec, r);
            let entry = deltas
                .max_increase
                .entry(class_name(class))
                .or_insert(i64::MIN);
            *entry = (*entry).max(delta);
            *deltas.count.entry(class_name(class)).or_default() += 1;
            deltas.pairs += 1;
            let ok = match class {
                RotationClass::AB => delta <= 2,
                RotationClass::AA | RotationClass::BB => delta <= 0,
                RotationClass::R => true,
            };
            report.record(ok, || {
                format!(
                    "G_{k} tree {} rotation {r:?} changes alternation by {delta}",
                    t.to_json()
                )
            });
        }
    }
    Ok(())
}

/// AB-rotations raise the alternation number by at most two and AA- or
/// BB-rotations never raise it. Rotations touching the root of `G_k` are
/// recorded but not constrained. Trees of `G_k` are enumerated exhaustively
/// for `k <= exhaustive_k` and sampled otherwise.
pub fn alternation_accounting<R: Rng + ?Sized>(
    rng: &mut R,
    ks: &[usize],
    exhaustive_k: usize,
    samples: usize,
) -> Result<(CheckReport, AlternationDeltas)> {
    let mut report = CheckReport::new("alternation_accounting");
    let mut deltas = AlternationDeltas::default();
    for &k in ks {
        let spec = build_gk(k)?;
        if k <= exhaustive_k {
            let trees = enumerate_search_trees(&spec.graph, &Limits::default())?;
            alternation_pass(k, trees, &mut report, &mut deltas)?;
        } else {
            let trees: Vec<SearchTree> = (0..samples)
                .map(|_| random_search_tree(rng, &spec.graph))
                .collect();
            alternation_pass(k, trees, &mut report, &mut deltas)?;
        }
    }
    Ok((report, deltas))
}

/// `alternation(T_k) = 0` and `alternation(T'_k) = l - 1` for `k <= max_k`,
/// with both trees valid.
pub fn extreme_alternations(max_k: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("extreme_alternations");
    for k in 1..=max_k {
        let spec = build_gk(k)?;
        let (t, tp) = (build_tk(&spec), build_tk_prime(&spec));
        let ok = validate(&spec.graph, &t)?
            && validate(&spec.graph, &tp)?
            && alternation_number(&spec, &t) == 0
            && alternation_number(&spec, &tp) == spec.leaf_count() - 1;
        report.record(ok, || format!("k = {k}"));
    }
    Ok(report)
}

/// Exact distances between `T_k` and `T'_k` compared with the recurrence.
pub fn lower_bound_distances(ks: &[usize], limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("lower_bound_distances");
    for &k in ks {
        let spec = build_gk(k)?;
        let (t, tp) = (build_tk(&spec), build_tk_prime(&spec));
        let got = distance_report(&spec.graph, &t, &tp, limits)?;
        let bound = lower_bound_f(k)?;
        report.record(got.distance as u128 >= bound, || {
            format!("k = {k}: distance {} below {bound}", got.distance)
        });
        report.notes.push(format!(
            "k = {k}: distance {} (lower bound {bound}, {} trees explored)",
            got.distance, got.explored
        ));
    }
    Ok(report)
}

/// Summary of [`transform_bounds`] for one tree size.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransformSizeSummary {
    pub n: usize,
    pub instances: usize,
    pub mean_length: f64,
    pub max_length: usize,
    pub length_bound: usize,
}

/// The centroid-based transform reaches its target within
/// `2 n ceil(log2(n+1))` rotations, and the centroid tree has height at most
/// `ceil(log2(n+1))`.
pub fn transform_bounds<R: Rng + ?Sized>(
    rng: &mut R,
    sizes: &[usize],
    per_size: usize,
) -> Result<(CheckReport, Vec<TransformSizeSummary>)> {
    let mut report = CheckReport::new("transform_bounds");
    let mut summaries = Vec::new();
    for &n in sizes {
        let mut total = 0usize;
        let mut longest = 0usize;
        for _ in 0..per_size {
            let g = random_tree(rng, n);
            let t1 = random_search_tree(rng, &g);
            let t2 = random_search_tree(rng, &g);
            let hub = centroid_tree(&g)?;
            let to_hub = centroid_transform(&g, &t1)?;
            let seq = transform(&g, &t1, &t2)?;
            let ok = apply_sequence(&g, &t1, &to_hub)? == hub
                && hub.height() <= log_height_bound(n)
                && apply_sequence(&g, &t1, &seq)? == t2
                && seq.len() <= transform_length_bound(n);
            report.record(ok, || {
                format!(
                    "graph {} from {} to {}",
                    g.to_json(),
                    t1.to_json(),
                    t2.to_json()
                )
            });
            total += seq.len();
            longest = longest.max(seq.len());
        }
        summaries.push(TransformSizeSummary {
            n,
            instances: per_size,
            mean_length: total as f64 / per_size.max(1) as f64,
            max_length: longest,
            length_bound: transform_length_bound(n),
        });
    }
    Ok((report, summaries))
}

/// Every suite at a size suitable for an interactive run.
pub fn run_all<R: Rng + ?Sized>(rng: &mut R, quick: bool) -> Result<Vec<CheckReport>> {
    let (small, random) = if quick { (4, 200) } else { (5, 1000) };
    let mut reports = vec![
        correspondence_counts(if quick { 6 } else { 7 }, if quick { 5 } else { 6 })?,
        flip_characterization(small)?,
        flip_converse(small)?,
        rotation_graph_structure(small + 1)?,
        edge_lower_bound(small + 1)?,
        projection_commutes(rng, random, 12, 20)?,
        shelling_invariance(rng, random, 12)?,
    ];
    let (alternation, deltas) =
        alternation_accounting(rng, &[3, 4], 3, if quick { 200 } else { 1000 })?;
    let mut alternation = alternation;
    alternation
        .notes
        .push(format!("max increase per class: {:?}", deltas.max_increase));
    reports.push(alternation);
    reports.push(extreme_alternations(10)?);
    reports.push(lower_bound_distances(&[2, 3], &Limits::default())?);
    let sizes: &[usize] = if quick { &[15, 31] } else { &[15, 31, 63] };
    reports.push(transform_bounds(rng, sizes, if quick { 20 } else { 100 })?.0);
    Ok(reports)
}
