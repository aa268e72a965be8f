//! Exhaustive checkers for rainbow 2-connectivity and the auxiliary
//! properties the inductive coloring maintains.
//!
//! Everything here enumerates simple rainbow paths by depth-first search,
//! pruning at the first repeated color. That is exponential in general, so
//! the whole-graph checks refuse graphs above [`VerifyLimits`] and report
//! the check as skipped instead.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, ColoringResult, EdgeColoring, UniqueColorMap};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Path, Vertex, VertexSet};

/// Property tags carried by reports.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Property {
    /// Rainbow 2-connected.
    A1,
    /// Fan: two rainbow paths from one vertex to two targets, sharing only the start.
    A2,
    /// Linkage: two vertex-disjoint rainbow paths matching two sources to two targets.
    A3,
    /// Unique-color map is injective.
    A4,
    /// Each mapped color is used exactly once, on an edge at its vertex.
    A5,
    /// A rainbow path between the ear ends avoids the recycled color.
    B1,
    /// The recycled color sits on a single edge at the first ear end.
    B2,
    #[serde(rename = "structure")]
    Structure,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Structure => f.write_str("structure"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub property: Property,
    pub vertices: Vec<Vertex>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<Vertex>,
    pub paths: Vec<Path>,
}

/// Pass/fail evidence for one property.
///
/// `passed` holds exactly when the check ran (`skipped` is false) and found
/// no violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub property: Property,
    pub passed: bool,
    pub skipped: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn new(property: Property) -> Self {
        VerificationReport {
            property,
            passed: true,
            skipped: false,
            witnesses: Vec::new(),
            violations: Vec::new(),
            note: None,
        }
    }

    pub fn skipped(property: Property, why: String) -> Self {
        VerificationReport {
            passed: false,
            skipped: true,
            note: Some(why),
            ..VerificationReport::new(property)
        }
    }

    pub fn violate(
        &mut self,
        property: Property,
        vertices: Vec<Vertex>,
        reason: impl Into<String>,
    ) {
        self.passed = false;
        self.violations.push(Violation {
            property,
            vertices,
            reason: reason.into(),
        });
    }

    fn witness(&mut self, vertices: Vec<Vertex>, paths: Vec<Path>) {
        self.witnesses.push(Witness { vertices, paths });
    }

    /// Rewrites every vertex id through `back` (compact id -> host id).
    fn relabel(mut self, back: &[Vertex]) -> Self {
        let map = |v: &mut Vertex| *v = back[*v];
        for w in &mut self.witnesses {
            w.vertices.iter_mut().for_each(map);
            for p in &mut w.paths {
                p.0.iter_mut().for_each(map);
            }
        }
        for v in &mut self.violations {
            v.vertices.iter_mut().for_each(map);
        }
        self
    }
}

/// Size guard for exhaustive checks.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct VerifyLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        VerifyLimits {
            max_vertices: 12,
            max_edges: 24,
        }
    }
}

impl VerifyLimits {
    fn admits(&self, g: &Graph) -> std::result::Result<(), String> {
        if g.vertex_count() > self.max_vertices || g.edge_count() > self.max_edges {
            Err(format!(
                "graph with n={} m={} exceeds the exhaustive-check limit n<={} m<={}",
                g.vertex_count(),
                g.edge_count(),
                self.max_vertices,
                self.max_edges
            ))
        } else {
            Ok(())
        }
    }
}

/// Hard cap from the bitmask representation of vertex sets.
const MAX_SEARCH_VERTICES: usize = 128;

type Mask = u128;

fn bit(v: Vertex) -> Mask {
    1 << v
}

/// Adjacency with per-edge color indices, shared by every search.
pub(crate) struct ColoredGraph {
    adj: Vec<Vec<(Vertex, usize)>>,
    colors: Vec<usize>,
    palette: usize,
}

impl ColoredGraph {
    /// `edge_colors[i]` colors the i-th edge of `g.edges()`.
    pub(crate) fn from_indices(g: &Graph, edge_colors: Vec<usize>) -> Self {
        assert!(
            g.vertex_count() <= MAX_SEARCH_VERTICES,
            "rainbow search supports at most {MAX_SEARCH_VERTICES} vertices"
        );
        let mut adj = vec![Vec::new(); g.vertex_count()];
        for (i, e) in g.edges().enumerate() {
            adj[e.u()].push((e.v(), i));
            adj[e.v()].push((e.u(), i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let palette = edge_colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        ColoredGraph {
            adj,
            colors: edge_colors,
            palette,
        }
    }

    /// Fails with the first edge of `g` the coloring leaves uncolored.
    fn new(g: &Graph, c: &EdgeColoring) -> std::result::Result<Self, Edge> {
        let colors = g
            .edges()
            .map(|e| c.get(e).map(|col| col.0).ok_or(e))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(ColoredGraph::from_indices(g, colors))
    }

    pub(crate) fn set_colors(&mut self, edge_colors: &[usize]) {
        self.colors.clear();
        self.colors.extend_from_slice(edge_colors);
        self.palette = edge_colors.iter().map(|&c| c + 1).max().unwrap_or(0);
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Calls `visit` with every rainbow `from`-`to` path that avoids the
    /// `blocked` vertices and the `forbidden` colors, plus the mask of all its
    /// vertices. Neighbors are explored in ascending order.
    fn walk<F>(
        &self,
        from: Vertex,
        to: Vertex,
        blocked: Mask,
        forbidden: &[usize],
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex], Mask) -> ControlFlow<()>,
    {
        let mut used = vec![false; self.palette.max(1)];
        for &c in forbidden {
            if c < used.len() {
                used[c] = true;
            }
        }
        let mut path = vec![from];
        self.extend(
            to,
            blocked | bit(from),
            &mut used,
            &mut path,
            &mut |p, m| visit(p, m & !blocked),
        )
    }

    fn extend<F>(
        &self,
        to: Vertex,
        mask: Mask,
        used: &mut [bool],
        path: &mut Vec<Vertex>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex], Mask) -> ControlFlow<()>,
    {
        let v = *path.last().unwrap();
        for &(w, e) in &self.adj[v] {
            let c = self.colors[e];
            if used[c] || mask & bit(w) != 0 {
                continue;
            }
            used[c] = true;
            path.push(w);
            let flow = if w == to {
                visit(path, mask | bit(w))
            } else {
                self.extend(to, mask | bit(w), used, path, visit)
            };
            path.pop();
            used[c] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn two_disjoint(&self, u: Vertex, v: Vertex) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let ends = bit(u) | bit(v);
        let mut seen: Vec<(Vec<Vertex>, Mask)> = Vec::new();
        let mut found = None;
        let _ = self.walk(u, v, 0, &[], &mut |p, m| {
            let inner = m & !ends;
            if let Some((q, _)) = seen.iter().find(|(_, o)| o & inner == 0) {
                found = Some((q.clone(), p.to_vec()));
                return ControlFlow::Break(());
            }
            seen.push((p.to_vec(), inner));
            ControlFlow::Continue(())
        });
        found
    }

    fn fan(&self, v: Vertex, t1: Vertex, t2: Vertex) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let mut first: Vec<(Vec<Vertex>, Mask)> = Vec::new();
        let _ = self.walk(v, t1, bit(t2), &[], &mut |p, m| {
            first.push((p.to_vec(), m & !bit(v)));
            ControlFlow::Continue(())
        });
        if first.is_empty() {
            return None;
        }
        let mut found = None;
        let _ = self.walk(v, t2, bit(t1), &[], &mut |p, m| {
            let m = m & !bit(v);
            if let Some((q, _)) = first.iter().find(|(_, o)| o & m == 0) {
                found = Some((q.clone(), p.to_vec()));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        found
    }

    fn linked(
        &self,
        s1: Vertex,
        t1: Vertex,
        s2: Vertex,
        t2: Vertex,
    ) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let mut first: Vec<(Vec<Vertex>, Mask)> = Vec::new();
        let avoid_first = bit(s2) | bit(t2);
        if s1 == t1 {
            first.push((vec![s1], bit(s1)));
        } else {
            let _ = self.walk(s1, t1, avoid_first, &[], &mut |p, m| {
                first.push((p.to_vec(), m));
                ControlFlow::Continue(())
            });
        }
        if first.is_empty() {
            return None;
        }
        let mut found = None;
        let _ = self.walk(s2, t2, bit(s1) | bit(t1), &[], &mut |p, m| {
            if let Some((q, _)) = first.iter().find(|(_, o)| o & m == 0) {
                found = Some((q.clone(), p.to_vec()));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        found
    }

    fn linkage(
        &self,
        s1: Vertex,
        s2: Vertex,
        t1: Vertex,
        t2: Vertex,
    ) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        self.linked(s1, t1, s2, t2)
            .or_else(|| self.linked(s1, t2, s2, t1))
    }

    /// First pair without two internally disjoint rainbow paths, if any.
    pub(crate) fn first_bad_pair(&self) -> Option<(Vertex, Vertex)> {
        let n = self.n();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| self.two_disjoint(u, v).is_none())
    }
}

fn paths(pair: (Vec<Vertex>, Vec<Vertex>)) -> (Path, Path) {
    (Path(pair.0), Path(pair.1))
}

fn colored(g: &Graph, c: &EdgeColoring) -> ColoredGraph {
    ColoredGraph::new(g, c).unwrap_or_else(|e| panic!("edge {e} has no color"))
}

fn forbidden_indices(forbidden: &BTreeSet<Color>) -> Vec<usize> {
    forbidden.iter().map(|c| c.0).collect()
}

/// Every simple rainbow `u`-`v` path avoiding the `forbidden` colors.
pub fn enumerate_rainbow_paths(
    g: &Graph,
    c: &EdgeColoring,
    u: Vertex,
    v: Vertex,
    forbidden: &BTreeSet<Color>,
) -> Vec<Path> {
    assert_ne!(u, v, "rainbow paths need distinct ends");
    let cg = colored(g, c);
    let mut out = Vec::new();
    let _ = cg.walk(u, v, 0, &forbidden_indices(forbidden), &mut |p, _| {
        out.push(Path(p.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// Two internally disjoint rainbow `u`-`v` paths, if they exist.
pub fn has_two_internally_disjoint_rainbow_paths(
    g: &Graph,
    c: &EdgeColoring,
    u: Vertex,
    v: Vertex,
) -> Option<(Path, Path)> {
    assert_ne!(u, v, "rainbow paths need distinct ends");
    colored(g, c).two_disjoint(u, v).map(paths)
}

/// Rainbow paths `v`->`t1` and `v`->`t2` sharing only `v`.
pub fn check_fan(
    g: &Graph,
    c: &EdgeColoring,
    v: Vertex,
    t1: Vertex,
    t2: Vertex,
) -> Option<(Path, Path)> {
    assert!(
        v != t1 && v != t2 && t1 != t2,
        "fan needs three distinct vertices"
    );
    colored(g, c).fan(v, t1, t2).map(paths)
}

/// Two vertex-disjoint rainbow paths joining `{s1, s2}` to `{t1, t2}` under
/// either pairing.
pub fn check_linkage(
    g: &Graph,
    c: &EdgeColoring,
    s1: Vertex,
    s2: Vertex,
    t1: Vertex,
    t2: Vertex,
) -> Option<(Path, Path)> {
    let all: BTreeSet<_> = [s1, s2, t1, t2].into_iter().collect();
    assert_eq!(all.len(), 4, "linkage needs four distinct vertices");
    colored(g, c).linkage(s1, s2, t1, t2).map(paths)
}

/// Vertex-disjoint rainbow paths `s1`->`t1` and `s2`->`t2` for this fixed pairing.
pub fn check_linkage_pairing(
    g: &Graph,
    c: &EdgeColoring,
    s1: Vertex,
    t1: Vertex,
    s2: Vertex,
    t2: Vertex,
) -> Option<(Path, Path)> {
    let all: BTreeSet<_> = [s1, s2, t1, t2].into_iter().collect();
    assert_eq!(all.len(), 4, "linkage needs four distinct vertices");
    colored(g, c).linked(s1, t1, s2, t2).map(paths)
}

/// Rainbow 2-connectivity under the default [`VerifyLimits`].
pub fn is_rainbow_two_connected(g: &Graph, c: &EdgeColoring) -> VerificationReport {
    is_rainbow_two_connected_with(g, c, &VerifyLimits::default())
}

pub fn is_rainbow_two_connected_with(
    g: &Graph,
    c: &EdgeColoring,
    limits: &VerifyLimits,
) -> VerificationReport {
    if let Err(why) = limits.admits(g) {
        return VerificationReport::skipped(Property::A1, why);
    }
    let mut report = VerificationReport::new(Property::A1);
    let cg = match ColoredGraph::new(g, c) {
        Ok(cg) => cg,
        Err(e) => {
            report.violate(Property::A1, vec![e.u(), e.v()], "edge has no color");
            return report;
        }
    };
    rainbow_pairs(&cg, &mut report);
    report
}

fn rainbow_pairs(cg: &ColoredGraph, report: &mut VerificationReport) {
    let n = cg.n();
    if n < 2 {
        report.violate(Property::A1, vec![], "fewer than two vertices");
        return;
    }
    for u in 0..n {
        for v in u + 1..n {
            match cg.two_disjoint(u, v) {
                Some((p, q)) => report.witness(vec![u, v], vec![Path(p), Path(q)]),
                None => {
                    report.violate(
                        Property::A1,
                        vec![u, v],
                        "no two internally disjoint rainbow paths",
                    );
                    return;
                }
            }
        }
    }
}

fn fan_triples(cg: &ColoredGraph, report: &mut VerificationReport) {
    let n = cg.n();
    for v in 0..n {
        for t1 in 0..n {
            for t2 in t1 + 1..n {
                if v == t1 || v == t2 {
                    continue;
                }
                if cg.fan(v, t1, t2).is_none() {
                    report.violate(Property::A2, vec![v, t1, t2], "no rainbow fan");
                    return;
                }
            }
        }
    }
}

fn linkage_quadruples(cg: &ColoredGraph, report: &mut VerificationReport) {
    let n = cg.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    // the three ways to split {a,b,c,d} into sources and targets
                    for (s1, s2, t1, t2) in [(a, b, c, d), (a, c, b, d), (a, d, b, c)] {
                        if cg.linkage(s1, s2, t1, t2).is_none() {
                            report.violate(
                                Property::A3,
                                vec![s1, s2, t1, t2],
                                "no disjoint rainbow linkage",
                            );
                            return;
                        }
                    }
                }
            }
        }
    }
}

/// Injectivity of `f` and single, incident use of every mapped color.
/// Violations are tagged [`Property::A4`] or [`Property::A5`].
pub fn check_unique_color_map(
    g: &Graph,
    c: &EdgeColoring,
    f: &UniqueColorMap,
) -> VerificationReport {
    let mut report = VerificationReport::new(Property::A5);
    let mut owner: std::collections::BTreeMap<Color, Vertex> = Default::default();
    for (v, col) in f.iter() {
        if v >= g.vertex_count() {
            report.violate(Property::A5, vec![v], "mapped vertex outside the graph");
            continue;
        }
        if let Some(&w) = owner.get(&col) {
            report.violate(
                Property::A4,
                vec![w, v],
                format!("both map to color {}", col.0),
            );
        } else {
            owner.insert(col, v);
        }
        let carriers: Vec<Edge> = g.edges().filter(|&e| c.get(e) == Some(col)).collect();
        match carriers.as_slice() {
            [e] if e.contains(v) => {}
            [e] => report.violate(
                Property::A5,
                vec![v, e.u(), e.v()],
                format!("color {} sits on a non-incident edge", col.0),
            ),
            _ => report.violate(
                Property::A5,
                vec![v],
                format!("color {} is used {} times", col.0, carriers.len()),
            ),
        }
    }
    report
}

/// Per-step reports from [`check_induction_invariants`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionReport {
    /// `(step index i, report)` for `G_1..G_t`.
    pub reports: Vec<(usize, VerificationReport)>,
}

impl InductionReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|(_, r)| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &(usize, VerificationReport)> {
        self.reports.iter().filter(|(_, r)| !r.passed)
    }
}

/// Re-checks A1-A5 on every intermediate subgraph of an ear-induction
/// trace, and B1/B2 at every extension.
///
/// A2 runs over all vertex triples and A3 over all 4-sets with each of
/// their three source/target splits.
pub fn check_induction_invariants(result: &ColoringResult, g: &Graph) -> Result<InductionReport> {
    check_induction_invariants_with(result, g, &VerifyLimits::default())
}

pub fn check_induction_invariants_with(
    result: &ColoringResult,
    g: &Graph,
    limits: &VerifyLimits,
) -> Result<InductionReport> {
    let trace = result.trace.as_ref().ok_or(Error::TraceMissing)?;
    let mut reports = Vec::new();
    let mut prev: Option<(Graph, &EdgeColoring, &UniqueColorMap)> = None;

    for (idx, step) in trace.iter().enumerate() {
        let i = idx + 1;
        let host = step_graph(g.vertex_count(), &step.coloring);
        let keep: VertexSet = host.support();
        let (local, back) = host.compact(&keep);
        let mut fwd = vec![usize::MAX; g.vertex_count()];
        for (k, &v) in back.iter().enumerate() {
            fwd[v] = k;
        }
        let local_coloring: EdgeColoring = step
            .coloring
            .iter()
            .map(|(e, col)| (Edge::new(fwd[e.u()], fwd[e.v()]), col))
            .collect();

        if let Err(why) = limits.admits(&local) {
            for p in [Property::A1, Property::A2, Property::A3] {
                reports.push((i, VerificationReport::skipped(p, why.clone())));
            }
        } else {
            let cg = colored(&local, &local_coloring);
            let mut a1 = VerificationReport::new(Property::A1);
            rainbow_pairs(&cg, &mut a1);
            a1.witnesses.clear();
            reports.push((i, a1.relabel(&back)));
            let mut a2 = VerificationReport::new(Property::A2);
            fan_triples(&cg, &mut a2);
            reports.push((i, a2.relabel(&back)));
            let mut a3 = VerificationReport::new(Property::A3);
            linkage_quadruples(&cg, &mut a3);
            reports.push((i, a3.relabel(&back)));
        }

        reports.push((i, check_unique_color_map(&host, &step.coloring, &step.map)));

        if let (Some(ext), Some((pg, pc, pf))) = (&step.extension, &prev) {
            let v1 = ext.ear.first();
            let vq = ext.ear.last();
            let mut b1 = VerificationReport::new(Property::B1);
            let mut b2 = VerificationReport::new(Property::B2);
            match pf.get(v1) {
                None => {
                    b1.violate(Property::B1, vec![v1], "first ear end has no unique color");
                    b2.violate(Property::B2, vec![v1], "first ear end has no unique color");
                }
                Some(recycled) => {
                    if recycled != ext.recycled {
                        b2.violate(
                            Property::B2,
                            vec![v1],
                            format!(
                                "trace recycles {} but f(v1) = {}",
                                ext.recycled.0, recycled.0
                            ),
                        );
                    }
                    let forbidden: BTreeSet<Color> = [recycled].into_iter().collect();
                    let found = enumerate_rainbow_paths(pg, pc, v1, vq, &forbidden);
                    match found.into_iter().next() {
                        Some(p) => b1.witness(vec![v1, vq], vec![p]),
                        None => b1.violate(
                            Property::B1,
                            vec![v1, vq],
                            "every rainbow path between the ear ends uses the recycled color",
                        ),
                    }
                    let carriers: Vec<Edge> = pc
                        .iter()
                        .filter(|&(_, c)| c == recycled)
                        .map(|(e, _)| e)
                        .collect();
                    if carriers.len() != 1 || !carriers[0].contains(v1) {
                        b2.violate(
                            Property::B2,
                            vec![v1],
                            format!(
                                "recycled color is on {} edge(s), not one edge at v1",
                                carriers.len()
                            ),
                        );
                    }
                }
            }
            reports.push((i, b1));
            reports.push((i, b2));
        }
        prev = Some((host, &step.coloring, &step.map));
    }

    Ok(InductionReport { reports })
}

fn step_graph(n: usize, c: &EdgeColoring) -> Graph {
    let mut h = Graph::new(n);
    for (e, _) in c.iter() {
        h.add_edge(e.u(), e.v());
    }
    h
}
