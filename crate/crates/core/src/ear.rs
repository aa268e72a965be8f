//! Ear decompositions of minimally 2-connected graphs in which every ear
//! carries a degree-two vertex and the first ear splits the base cycle into
//! two arcs that each carry one too.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::two_fan_to_subgraph;
use crate::graph::{
    degree_two_set, is_cycle_graph, is_two_connected, Edge, Graph, Path, Vertex, VertexSet,
};
use crate::verify::{Property, VerificationReport};

/// Base cycle `G_0` and ears `P_0..P_{t-1}`.
///
/// Each ear is stored from its smaller-id endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    /// Cycle vertex order; the closing edge is implied.
    pub base: Vec<Vertex>,
    pub ears: Vec<Path>,
}

impl EarDecomposition {
    /// Number of ears, `t`.
    pub fn t(&self) -> usize {
        self.ears.len()
    }

    pub fn base_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let k = self.base.len();
        (0..k).map(move |i| Edge::new(self.base[i], self.base[(i + 1) % k]))
    }

    /// `G_i = G_0 ∪ P_0 ∪ .. ∪ P_{i-1}` as a spanning subgraph on `n` vertex ids.
    pub fn prefix(&self, n: usize, i: usize) -> Graph {
        let mut g = Graph::new(n);
        for e in self.base_edges() {
            g.add_edge(e.u(), e.v());
        }
        for ear in &self.ears[..i] {
            for e in ear.edges() {
                g.add_edge(e.u(), e.v());
            }
        }
        g
    }
}

/// Indexing of `G_1` as `G_0 = v_1..v_s`, `P_0 = v_1, v_{s+1}, .., v_l, v_p`,
/// with chosen degree-two vertices at `1 < p1 < p < p2 <= s < p3 <= l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseLabeling {
    /// `order[j - 1]` is `v_j`.
    pub order: Vec<Vertex>,
    pub s: usize,
    pub ell: usize,
    pub p: usize,
    pub p1: usize,
    pub p2: usize,
    pub p3: usize,
}

impl BaseLabeling {
    /// `v_j` (1-based).
    pub fn vertex(&self, j: usize) -> Vertex {
        self.order[j - 1]
    }

    pub fn validate(&self, d: &VertexSet) -> Result<()> {
        let BaseLabeling {
            s,
            ell,
            p,
            p1,
            p2,
            p3,
            ..
        } = *self;
        if !(1 < p1 && p1 < p && p < p2 && p2 <= s && s < p3 && p3 <= ell) {
            return Err(Error::LabelingInvalid(format!(
                "index chain 1<p1<p<p2<=s<p3<=l fails for p1={p1} p={p} p2={p2} s={s} p3={p3} l={ell}"
            )));
        }
        if p < 3 || p > s - 1 {
            return Err(Error::LabelingInvalid(format!("p={p} outside 3..=s-1")));
        }
        if self.order.len() != ell || self.order.iter().collect::<BTreeSet<_>>().len() != ell {
            return Err(Error::LabelingInvalid(
                "order must list l distinct vertices".into(),
            ));
        }
        for j in [p1, p2, p3] {
            if !d.contains(self.vertex(j)) {
                return Err(Error::LabelingInvalid(format!(
                    "v_{j} = {} is not a degree-two vertex",
                    self.vertex(j)
                )));
            }
        }
        Ok(())
    }
}

/// Bookkeeping from the base-cycle repair loop.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepairStats {
    pub exchanges: usize,
    /// `|D ∩ V(G_0)|` for the initial cycle and after each exchange.
    pub coverage: Vec<usize>,
}

/// Some cycle of a 2-connected graph, from the first back edge of a DFS at 0.
fn dfs_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut stack: Vec<(Vertex, usize)> = vec![(0, 0)];
    let mut trail: Vec<Vertex> = vec![0];
    depth[0] = 0;
    while let Some(top) = stack.last_mut() {
        let (v, idx) = *top;
        if idx == g.degree(v) {
            stack.pop();
            trail.pop();
            continue;
        }
        top.1 += 1;
        let w = g.neighbors(v)[idx];
        let parent = if trail.len() >= 2 {
            Some(trail[trail.len() - 2])
        } else {
            None
        };
        if Some(w) == parent {
            continue;
        }
        if depth[w] == usize::MAX {
            depth[w] = trail.len();
            trail.push(w);
            stack.push((w, 0));
        } else if depth[w] < depth[v] {
            return Some(trail[depth[w]..].to_vec());
        }
    }
    None
}

/// Interiors of the two arcs of `cycle` between the vertices at positions `i < j`.
fn arcs(cycle: &[Vertex], i: usize, j: usize) -> (Vec<Vertex>, Vec<Vertex>) {
    let inner = cycle[i + 1..j].to_vec();
    let outer = cycle[j + 1..].iter().chain(&cycle[..i]).copied().collect();
    (inner, outer)
}

/// A base cycle for which the first ear (through the smallest uncovered
/// degree-two vertex) leaves a degree-two vertex on both arcs.
///
/// Starts from a DFS cycle. Whenever an arc misses `d`, the cycle is replaced
/// by the other arc plus the ear, which covers strictly more of `d`.
pub fn initial_cycle_with_repair(g: &Graph, d: &VertexSet) -> Result<(Vec<Vertex>, RepairStats)> {
    if is_cycle_graph(g) {
        return Err(Error::NotApplicable("graph is already a cycle".into()));
    }
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    repair_cycle(g, d, dfs_cycle(g).expect("2-connected graphs have a cycle"))
}

/// The exchange loop of [`initial_cycle_with_repair`] from a given cycle.
pub fn repair_cycle(
    g: &Graph,
    d: &VertexSet,
    mut cycle: Vec<Vertex>,
) -> Result<(Vec<Vertex>, RepairStats)> {
    let covered = |c: &[Vertex]| c.iter().filter(|&&v| d.contains(v)).count();
    let mut stats = RepairStats {
        exchanges: 0,
        coverage: vec![covered(&cycle)],
    };

    loop {
        let on_cycle: VertexSet = cycle.iter().copied().collect();
        let Some(v0) = d.iter().find(|&v| !on_cycle.contains(v)) else {
            return Ok((cycle, stats));
        };
        let current = cycle_graph(g.vertex_count(), &cycle);
        let ear = ear_through_vertex(g, &current, v0)?;
        let pa = cycle.iter().position(|&v| v == ear.first()).unwrap();
        let pb = cycle.iter().position(|&v| v == ear.last()).unwrap();
        let (i, j) = (pa.min(pb), pa.max(pb));
        let (inner, outer) = arcs(&cycle, i, j);
        let hits = |arc: &[Vertex]| arc.iter().any(|&v| d.contains(v));
        if hits(&inner) && hits(&outer) {
            return Ok((cycle, stats));
        }

        // Keep the arc from cycle[i] to cycle[j] that carries a degree-two
        // vertex (or the inner one if neither does) and close it with the ear.
        let kept: Vec<Vertex> = if hits(&inner) || !hits(&outer) {
            cycle[i..=j].to_vec()
        } else {
            let mut a: Vec<Vertex> = cycle[j..].to_vec();
            a.extend_from_slice(&cycle[..=i]);
            a
        };
        let (from, to) = (kept[0], *kept.last().unwrap());
        let mut closing: Vec<Vertex> = if ear.first() == to {
            ear.0.clone()
        } else {
            ear.reversed().0
        };
        debug_assert_eq!((closing[0], *closing.last().unwrap()), (to, from));
        closing.pop();
        closing.remove(0);
        let mut next = kept;
        next.extend(closing);

        let before = covered(&cycle);
        let after = covered(&next);
        assert!(
            after > before,
            "exchange must cover more degree-two vertices"
        );
        cycle = next;
        stats.exchanges += 1;
        stats.coverage.push(after);
        assert!(
            stats.exchanges <= d.len(),
            "more exchanges than degree-two vertices"
        );
    }
}

fn cycle_graph(n: usize, cycle: &[Vertex]) -> Graph {
    let mut h = Graph::new(n);
    let k = cycle.len();
    for i in 0..k {
        h.add_edge(cycle[i], cycle[(i + 1) % k]);
    }
    h
}

/// An ear of `current` through `v0`: two disjoint fans from `v0` into the
/// support of `current`, glued at `v0` and stored from the smaller endpoint.
pub fn ear_through_vertex(g: &Graph, current: &Graph, v0: Vertex) -> Result<Path> {
    let anchor = current.support();
    if anchor.contains(v0) {
        return Err(Error::PreconditionViolated(format!(
            "vertex {v0} already lies in the current subgraph"
        )));
    }
    let (to_small, to_large) = two_fan_to_subgraph(g, v0, &anchor)?;
    let mut verts = to_small.reversed().0;
    verts.extend_from_slice(&to_large.vertices()[1..]);
    Ok(Path(verts))
}

/// Builds the decomposition; the smallest uncovered degree-two vertex gets
/// the next ear until every degree-two vertex is covered.
pub fn build_ear_decomposition(g: &Graph) -> Result<EarDecomposition> {
    build_ear_decomposition_with_stats(g).map(|(dec, _)| dec)
}

pub fn build_ear_decomposition_with_stats(g: &Graph) -> Result<(EarDecomposition, RepairStats)> {
    let d = degree_two_set(g);
    let (base, stats) = initial_cycle_with_repair(g, &d)?;
    let mut current = cycle_graph(g.vertex_count(), &base);
    let mut ears = Vec::new();
    loop {
        let support = current.support();
        let Some(v0) = d.iter().find(|&v| !support.contains(v)) else {
            break;
        };
        let ear = ear_through_vertex(g, &current, v0)?;
        for e in ear.edges() {
            current.add_edge(e.u(), e.v());
        }
        ears.push(ear);
    }
    if ears.is_empty() || current.edge_count() != g.edge_count() {
        let missing: Vec<String> = g
            .edges()
            .filter(|e| !current.has_edge(e.u(), e.v()))
            .map(|e| e.to_string())
            .collect();
        return Err(Error::NotMinimal(format!(
            "after covering every degree-two vertex, edges {} remain",
            missing.join(", ")
        )));
    }
    Ok((EarDecomposition { base, ears }, stats))
}

/// Checks the decomposition is well formed, then that every ear has a
/// degree-two interior vertex (condition 1) and that both base arcs between
/// the ends of the first ear do too (condition 2).
pub fn check_lemma1_conditions(dec: &EarDecomposition, g: &Graph) -> Result<VerificationReport> {
    let n = g.vertex_count();
    let malformed = |m: String| Err(Error::MalformedDecomposition(m));

    let k = dec.base.len();
    let base_set: VertexSet = dec.base.iter().copied().collect();
    if k < 3 || base_set.len() != k || dec.base.iter().any(|&v| v >= n) {
        return malformed("base is not a simple cycle".into());
    }
    if let Some(e) = dec.base_edges().find(|e| !g.has_edge(e.u(), e.v())) {
        return malformed(format!("base edge {e} is not in the graph"));
    }

    let mut current = cycle_graph(n, &dec.base);
    let mut covered = base_set.clone();
    for (i, ear) in dec.ears.iter().enumerate() {
        if ear.is_empty() || !ear.is_simple_path_in(g) {
            return malformed(format!("ear {i} is not a simple path of the graph"));
        }
        if !covered.contains(ear.first()) || !covered.contains(ear.last()) {
            return malformed(format!("ear {i} has an endpoint outside the prefix"));
        }
        if let Some(&x) = ear.interior().iter().find(|&&x| covered.contains(x)) {
            return malformed(format!("ear {i} re-enters the prefix at {x}"));
        }
        if ear.len() == 1 && current.has_edge(ear.first(), ear.last()) {
            return malformed(format!("ear {i} repeats an edge"));
        }
        for e in ear.edges() {
            current.add_edge(e.u(), e.v());
        }
        covered.extend_from(ear.vertices());
        let (local, _) = current.compact(&covered);
        if !is_two_connected(&local) {
            return malformed(format!("prefix G_{} is not 2-connected", i + 1));
        }
    }
    if current.edge_count() != g.edge_count() {
        return malformed("pieces do not cover the graph".into());
    }

    let d = degree_two_set(g);
    let mut report = VerificationReport::new(Property::Structure);
    for (i, ear) in dec.ears.iter().enumerate() {
        if !ear.interior().iter().any(|&x| d.contains(x)) {
            report.violate(
                Property::Structure,
                ear.vertices().to_vec(),
                format!("condition (1): ear {i} has no degree-two vertex"),
            );
        }
    }
    match dec.ears.first() {
        None => report.violate(Property::Structure, vec![], "condition (2): no ears"),
        Some(ear) => {
            let pa = dec.base.iter().position(|&v| v == ear.first()).unwrap();
            let pb = dec.base.iter().position(|&v| v == ear.last()).unwrap();
            let (inner, outer) = arcs(&dec.base, pa.min(pb), pa.max(pb));
            for arc in [inner, outer] {
                if !arc.iter().any(|&x| d.contains(x)) {
                    report.violate(
                        Property::Structure,
                        arc,
                        "condition (2): base arc has no degree-two vertex",
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Rotates `G_0` to start at the first ear's first endpoint and picks the
/// smallest valid `p1`, `p2`, `p3`.
pub fn select_base_labeling(dec: &EarDecomposition, d: &VertexSet) -> Result<BaseLabeling> {
    let ear = dec
        .ears
        .first()
        .ok_or_else(|| Error::LabelingImpossible("no first ear".into()))?;
    let s = dec.base.len();
    let start = dec
        .base
        .iter()
        .position(|&v| v == ear.first())
        .ok_or_else(|| Error::LabelingImpossible("first ear does not start on the base".into()))?;
    let mut order: Vec<Vertex> = (0..s).map(|k| dec.base[(start + k) % s]).collect();
    let p =
        order.iter().position(|&v| v == ear.last()).ok_or_else(|| {
            Error::LabelingImpossible("first ear does not end on the base".into())
        })? + 1;
    order.extend_from_slice(ear.interior());
    let ell = order.len();

    let first_in = |range: std::ops::RangeInclusive<usize>, what: &str| {
        range
            .into_iter()
            .find(|&j| d.contains(order[j - 1]))
            .ok_or_else(|| Error::LabelingImpossible(format!("no degree-two vertex {what}")))
    };
    let p1 = first_in(2..=p.saturating_sub(1), "on the first base arc")?;
    let p2 = first_in(p + 1..=s, "on the second base arc")?;
    let p3 = first_in(s + 1..=ell, "inside the first ear")?;
    let labeling = BaseLabeling {
        order,
        s,
        ell,
        p,
        p1,
        p2,
        p3,
    };
    labeling
        .validate(d)
        .map_err(|e| Error::LabelingImpossible(e.to_string()))?;
    Ok(labeling)
}

trait ExtendFrom {
    fn extend_from(&mut self, vs: &[Vertex]);
}

impl ExtendFrom for VertexSet {
    fn extend_from(&mut self, vs: &[Vertex]) {
        for &v in vs {
            self.insert(v);
        }
    }
}
