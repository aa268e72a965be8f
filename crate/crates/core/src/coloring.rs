//! Rainbow 2-connected edge colorings with at most `n` colors.
//!
//! Three constructions, picked by [`color_rc2`]:
//!
//! * a cycle gets `n` distinct colors;
//! * a graph whose minimal spanning 2-connected subgraph is a Hamiltonian
//!   cycle gets the cycle-plus-chord coloring with `n - 1` colors;
//! * otherwise the minimal spanning subgraph is colored ear by ear, keeping
//!   `|G_i| - 1` colors on each prefix `G_i` together with a map `f_i` that
//!   assigns every vertex of degree at least three a color used once, on an
//!   edge at that vertex. Each new ear recycles the color of its first end.
//!
//! Edges outside the spanning subgraph get color 0; adding edges can only add
//! rainbow paths.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ear::{build_ear_decomposition, select_base_labeling, BaseLabeling, EarDecomposition};
use crate::error::{Error, Result};
use crate::graph::{
    cycle_order, degree_two_set, is_cycle_graph, is_two_connected, Edge, Graph, Path, Vertex,
    VertexSet,
};
use crate::minimalize::spanning_minimally_two_connected;
use crate::verify::check_unique_color_map;

/// Opaque color id.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub usize);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Edge -> color assignment.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: BTreeMap<Edge, Color>,
}

impl EdgeColoring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, e: Edge) -> Option<Color> {
        self.colors.get(&e).copied()
    }

    pub fn insert(&mut self, e: Edge, c: Color) -> Option<Color> {
        self.colors.insert(e, c)
    }

    pub fn remove(&mut self, e: Edge) -> Option<Color> {
        self.colors.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    /// Number of distinct colors in use.
    pub fn color_count(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    /// True iff the colors in use are exactly `0..color_count()`.
    pub fn is_contiguous(&self) -> bool {
        let used: BTreeSet<_> = self.colors.values().collect();
        used.iter().enumerate().all(|(i, c)| c.0 == i)
    }

    /// True iff every edge of `g` is colored and nothing else is.
    pub fn is_total_on(&self, g: &Graph) -> bool {
        self.colors.len() == g.edge_count() && g.edges().all(|e| self.colors.contains_key(&e))
    }

    /// Number of edges carrying `c`.
    pub fn multiplicity(&self, c: Color) -> usize {
        self.colors.values().filter(|&&x| x == c).count()
    }
}

impl FromIterator<(Edge, Color)> for EdgeColoring {
    fn from_iter<I: IntoIterator<Item = (Edge, Color)>>(iter: I) -> Self {
        EdgeColoring {
            colors: iter.into_iter().collect(),
        }
    }
}

/// Partial vertex -> color map over the degree-3+ vertices of a prefix.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniqueColorMap {
    map: BTreeMap<Vertex, Color>,
}

impl UniqueColorMap {
    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.map.get(&v).copied()
    }

    pub fn insert(&mut self, v: Vertex, c: Color) -> Option<Color> {
        self.map.insert(v, c)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.map.iter().map(|(&v, &c)| (v, c))
    }

    pub fn domain(&self) -> VertexSet {
        self.map.keys().copied().collect()
    }
}

impl FromIterator<(Vertex, Color)> for UniqueColorMap {
    fn from_iter<I: IntoIterator<Item = (Vertex, Color)>>(iter: I) -> Self {
        UniqueColorMap {
            map: iter.into_iter().collect(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Cycle,
    HamiltonianChord,
    EarInduction,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Cycle => "cycle",
            Strategy::HamiltonianChord => "hamiltonian_chord",
            Strategy::EarInduction => "ear_induction",
        })
    }
}

/// The ear attached at an induction step, oriented from the end whose
/// unique color was recycled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub ear: Path,
    pub recycled: Color,
}

/// `(c_i, f_i)` on the prefix `G_i`; `G_i` is the set of colored edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub coloring: EdgeColoring,
    pub map: UniqueColorMap,
    pub extension: Option<Extension>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringResult {
    pub coloring: EdgeColoring,
    pub strategy: Strategy,
    pub decomposition: Option<EarDecomposition>,
    pub trace: Option<Vec<TraceStep>>,
}

impl ColoringResult {
    pub fn color_count(&self) -> usize {
        self.coloring.color_count()
    }

    pub fn to_json(&self, include_trace: bool) -> ColoringJson {
        ColoringJson {
            colors: self.color_count(),
            strategy: self.strategy,
            edges: edge_rows(&self.coloring),
            decomposition: if include_trace {
                self.decomposition.clone()
            } else {
                None
            },
            trace: if include_trace {
                self.trace.as_ref().map(|t| {
                    t.iter()
                        .map(|s| TraceStepJson {
                            edges: edge_rows(&s.coloring),
                            map: s.map.iter().map(|(v, c)| [v, c.0]).collect(),
                            ear: s.extension.as_ref().map(|x| x.ear.clone()),
                        })
                        .collect()
                })
            } else {
                None
            },
        }
    }
}

fn edge_rows(c: &EdgeColoring) -> Vec<ColoredEdge> {
    c.iter()
        .map(|(e, col)| ColoredEdge {
            u: e.u(),
            v: e.v(),
            color: col.0,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStepJson {
    pub edges: Vec<ColoredEdge>,
    pub map: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ear: Option<Path>,
}

/// Wire form: `{"colors": k, "strategy": s, "edges": [{"u","v","color"}, ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub colors: usize,
    pub strategy: Strategy,
    pub edges: Vec<ColoredEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<EarDecomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStepJson>>,
}

impl ColoringJson {
    pub fn edge_coloring(&self) -> EdgeColoring {
        self.edges
            .iter()
            .map(|r| (Edge::new(r.u, r.v), Color(r.color)))
            .collect()
    }
}

/// Fixed 16-entry palette; color ids wrap around it.
pub const DOT_PALETTE: [&str; 16] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#800000", "#aaffc3", "#000075",
];

/// Graphviz rendering; each edge is labeled with its color id.
pub fn to_dot(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = String::from("graph rc2 {\n");
    for v in g.vertices() {
        out.push_str(&format!(
            "  {v} [label=\"{}\"];\n",
            g.label(v).replace('"', "\\\"")
        ));
    }
    for e in g.edges() {
        match c.get(e) {
            Some(col) => out.push_str(&format!(
                "  {} -- {} [color=\"{}\", label=\"{}\"];\n",
                e.u(),
                e.v(),
                DOT_PALETTE[col.0 % DOT_PALETTE.len()],
                col.0
            )),
            None => out.push_str(&format!("  {} -- {} [style=dashed];\n", e.u(), e.v())),
        }
    }
    out.push_str("}\n");
    out
}

/// `n` distinct colors around a cycle.
pub fn color_cycle(g: &Graph) -> Result<EdgeColoring> {
    let order = cycle_order(g).ok_or(Error::NotACycle)?;
    let n = order.len();
    Ok((0..n)
        .map(|i| (Edge::new(order[i], order[(i + 1) % n]), Color(i)))
        .collect())
}

/// `n - 1` colors on a Hamiltonian cycle plus one chord.
///
/// With the cycle rotated to `v_1..v_n` so the chord is `v_1 v_j`:
/// `v_1v_2` and `v_jv_{j+1}` share color 0, `v_1v_n` and `v_{j-1}v_j` share
/// color 1, the remaining cycle edges get fresh colors in cycle order, and
/// the chord gets the last fresh color. Other edges of `g` get color 0.
pub fn color_hamiltonian_with_chord(
    g: &Graph,
    cycle: &[Vertex],
    chord: Edge,
) -> Result<EdgeColoring> {
    let n = g.vertex_count();
    let distinct: BTreeSet<_> = cycle.iter().collect();
    if cycle.len() != n || distinct.len() != n || cycle.iter().any(|&v| v >= n) {
        return Err(Error::NotHamiltonianCycle(format!(
            "expected all {n} vertices exactly once, got {} entries",
            cycle.len()
        )));
    }
    if let Some(i) = (0..n).find(|&i| !g.has_edge(cycle[i], cycle[(i + 1) % n])) {
        return Err(Error::NotHamiltonianCycle(format!(
            "{} and {} are consecutive but not adjacent",
            cycle[i],
            cycle[(i + 1) % n]
        )));
    }
    let invalid = |reason: &str| Error::ChordInvalid {
        u: chord.u(),
        v: chord.v(),
        reason: reason.into(),
    };
    if !g.has_edge(chord.u(), chord.v()) {
        return Err(invalid("not an edge of the graph"));
    }

    let start = cycle.iter().position(|&v| v == chord.u()).unwrap();
    // vs[k] is v_{k+1}
    let vs: Vec<Vertex> = (0..n).map(|k| cycle[(start + k) % n]).collect();
    let j = vs.iter().position(|&v| v == chord.v()).unwrap() + 1;
    if !(3..n).contains(&j) {
        return Err(invalid("endpoints are consecutive on the cycle"));
    }

    let v = |i: usize| vs[i - 1];
    let mut c = EdgeColoring::new();
    c.insert(Edge::new(v(1), v(2)), Color(0));
    c.insert(Edge::new(v(j), v(j + 1)), Color(0));
    c.insert(Edge::new(v(1), v(n)), Color(1));
    c.insert(Edge::new(v(j - 1), v(j)), Color(1));
    let mut next = 2;
    for k in 1..=n {
        let e = Edge::new(v(k), v(if k == n { 1 } else { k + 1 }));
        if c.get(e).is_none() {
            c.insert(e, Color(next));
            next += 1;
        }
    }
    c.insert(chord, Color(next));
    for e in g.edges() {
        if c.get(e).is_none() {
            c.insert(e, Color(0));
        }
    }
    Ok(c)
}

/// The base coloring `c_1` and map `f_1` of `G_1 = G_0 ∪ P_0`.
///
/// With `x_j` as color `j - 1`: `c_1(v_jv_{j+1}) = x_j` along the cycle and
/// along the ear, `c_1(v_sv_1) = c_1(v_lv_p) = x_s`, and `c_1(v_1v_{s+1}) = x_p`.
/// `f_1(v_j)` is `x_j` for `j` in `[1,p1) ∪ [p+1,p2) ∪ [s+1,p3)` and `x_{j-1}`
/// for `j` in `(p1,p] ∪ (p2,s] ∪ (p3,l]`, on vertices outside `d`.
pub fn color_base_subgraph(
    labeling: &BaseLabeling,
    g1: &Graph,
    d: &VertexSet,
) -> Result<(EdgeColoring, UniqueColorMap)> {
    labeling.validate(d)?;
    let BaseLabeling {
        s,
        ell,
        p,
        p1,
        p2,
        p3,
        ..
    } = *labeling;
    let v = |j: usize| labeling.vertex(j);
    let x = |j: usize| Color(j - 1);

    let mut c = EdgeColoring::new();
    for j in (1..s).chain(s + 1..ell) {
        c.insert(Edge::new(v(j), v(j + 1)), x(j));
    }
    c.insert(Edge::new(v(s), v(1)), x(s));
    c.insert(Edge::new(v(ell), v(p)), x(s));
    c.insert(Edge::new(v(1), v(s + 1)), x(p));

    if let Some((e, _)) = c.iter().find(|(e, _)| !g1.has_edge(e.u(), e.v())) {
        return Err(Error::LabelingInvalid(format!(
            "edge {e} of the labeling is missing"
        )));
    }
    if c.len() != g1.edge_count() {
        return Err(Error::LabelingInvalid(format!(
            "labeling covers {} edges, subgraph has {}",
            c.len(),
            g1.edge_count()
        )));
    }

    let mut f = UniqueColorMap::default();
    for j in 1..=ell {
        let vj = v(j);
        if d.contains(vj) {
            continue;
        }
        let own = j < p1 || (p + 1..p2).contains(&j) || (s + 1..p3).contains(&j);
        f.insert(vj, if own { x(j) } else { x(j - 1) });
    }

    let report = check_unique_color_map(g1, &c, &f);
    assert!(
        report.passed,
        "base map violates its contract: {:?}",
        report.violations
    );
    Ok((c, f))
}

/// Extends `(c_{i-1}, f_{i-1})` by the ear `v_1..v_q`, oriented so `ear[0]`
/// is `v_1`.
///
/// The ear edges `v_jv_{j+1}` (`j <= q-2`) get fresh colors `y_j`; the last
/// edge `v_{q-1}v_q` reuses `f_{i-1}(v_1)`. `v_1` and the non-`d` interior
/// vertices before the first interior `d` vertex `v_{q0}` map to `y_j`, those
/// after it to `y_{j-1}`.
pub fn extend_with_ear(
    prev: &(EdgeColoring, UniqueColorMap),
    ear: &Path,
    d: &VertexSet,
) -> Result<(EdgeColoring, UniqueColorMap)> {
    let (c_prev, f_prev) = prev;
    let vs = ear.vertices();
    let q = vs.len();
    let v = |j: usize| vs[j - 1];
    let q0 = (2..q)
        .find(|&j| d.contains(v(j)))
        .ok_or_else(|| Error::NoInteriorDegreeTwo(vs.to_vec()))?;
    let recycled = f_prev.get(v(1)).ok_or(Error::EndpointNotEligible(v(1)))?;
    f_prev.get(v(q)).ok_or(Error::EndpointNotEligible(v(q)))?;

    let base = c_prev.color_count();
    let y = |j: usize| Color(base + j - 1);

    let mut c = c_prev.clone();
    for j in 1..=q - 2 {
        c.insert(Edge::new(v(j), v(j + 1)), y(j));
    }
    c.insert(Edge::new(v(q - 1), v(q)), recycled);

    let mut f = f_prev.clone();
    f.insert(v(1), y(1));
    for j in 2..q {
        if d.contains(v(j)) {
            continue;
        }
        f.insert(v(j), if j < q0 { y(j) } else { y(j - 1) });
    }

    let host = {
        let n = c.iter().map(|(e, _)| e.v() + 1).max().unwrap_or(0);
        let mut h = Graph::new(n);
        for (e, _) in c.iter() {
            h.add_edge(e.u(), e.v());
        }
        h
    };
    let report = check_unique_color_map(&host, &c, &f);
    assert!(
        report.passed,
        "extended map violates its contract: {:?}",
        report.violations
    );
    Ok((c, f))
}

/// Ear-induction coloring of a minimally 2-connected non-cycle with `n - 1`
/// colors, keeping every intermediate `(c_i, f_i)` in the trace.
pub fn color_minimally_two_connected(g: &Graph) -> Result<ColoringResult> {
    if is_cycle_graph(g) {
        return Err(Error::PreconditionViolated("graph is a cycle".into()));
    }
    let dec = build_ear_decomposition(g)?;
    let d = degree_two_set(g);
    let labeling = select_base_labeling(&dec, &d)?;
    let g1 = dec.prefix(g.vertex_count(), 1);
    let mut state = color_base_subgraph(&labeling, &g1, &d)?;
    let mut trace = vec![TraceStep {
        coloring: state.0.clone(),
        map: state.1.clone(),
        extension: None,
    }];
    for ear in &dec.ears[1..] {
        let recycled = state
            .1
            .get(ear.first())
            .ok_or(Error::EndpointNotEligible(ear.first()))?;
        state = extend_with_ear(&state, ear, &d)?;
        trace.push(TraceStep {
            coloring: state.0.clone(),
            map: state.1.clone(),
            extension: Some(Extension {
                ear: ear.clone(),
                recycled,
            }),
        });
    }
    debug_assert!(state.0.is_total_on(g));
    Ok(ColoringResult {
        coloring: state.0,
        strategy: Strategy::EarInduction,
        decomposition: Some(dec),
        trace: Some(trace),
    })
}

/// Colors any 2-connected graph: `n` colors for a cycle, at most `n - 1`
/// otherwise.
pub fn color_rc2(g: &Graph) -> Result<ColoringResult> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    if is_cycle_graph(g) {
        return Ok(ColoringResult {
            coloring: color_cycle(g)?,
            strategy: Strategy::Cycle,
            decomposition: None,
            trace: None,
        });
    }
    let h = spanning_minimally_two_connected(g)?;
    if let Some(order) = cycle_order(&h) {
        let chord = g
            .edges()
            .find(|e| !h.has_edge(e.u(), e.v()))
            .expect("a non-cycle has an edge off its Hamiltonian cycle");
        return Ok(ColoringResult {
            coloring: color_hamiltonian_with_chord(g, &order, chord)?,
            strategy: Strategy::HamiltonianChord,
            decomposition: None,
            trace: None,
        });
    }
    let mut result = color_minimally_two_connected(&h)?;
    for e in g.edges() {
        if result.coloring.get(e).is_none() {
            result.coloring.insert(e, Color(0));
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate_family, Family};
    use crate::verify::{check_unique_color_map, is_rainbow_two_connected};

    fn fam(f: Family) -> Graph {
        generate_family(&f, 0).unwrap()
    }

    fn colors_of(c: &EdgeColoring, pairs: &[(Vertex, Vertex)]) -> Vec<usize> {
        pairs
            .iter()
            .map(|&(u, v)| c.get(Edge::new(u, v)).unwrap().0)
            .collect()
    }

    #[test]
    fn cycle_colorings() {
        for n in [3, 5] {
            let g = fam(Family::Cycle(n));
            let c = color_cycle(&g).unwrap();
            assert_eq!(c.color_count(), n);
            assert!(is_rainbow_two_connected(&g, &c).passed);
        }
        assert_eq!(
            color_cycle(&fam(Family::Theta(2, 2, 2))),
            Err(Error::NotACycle)
        );
    }

    #[test]
    fn diamond_chord_coloring() {
        // v1..v4 = 0,1,2,3 and chord v1v3
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let c = color_hamiltonian_with_chord(&g, &[0, 1, 2, 3], Edge::new(0, 2)).unwrap();
        assert_eq!(
            colors_of(&c, &[(0, 1), (2, 3), (0, 3), (1, 2), (0, 2)]),
            [0, 0, 1, 1, 2]
        );
        assert_eq!(c.color_count(), 3);
        assert!(is_rainbow_two_connected(&g, &c).passed);
    }

    #[test]
    fn c6_chord_coloring() {
        let mut g = fam(Family::Cycle(6));
        g.add_edge(0, 3);
        let c = color_hamiltonian_with_chord(&g, &[0, 1, 2, 3, 4, 5], Edge::new(0, 3)).unwrap();
        // {v1v2,v4v5}:x1 {v6v1,v3v4}:x2 v2v3:x3 v5v6:x4 v1v4:x5
        assert_eq!(
            colors_of(
                &c,
                &[(0, 1), (3, 4), (5, 0), (2, 3), (1, 2), (4, 5), (0, 3)]
            ),
            [0, 0, 1, 1, 2, 3, 4]
        );
        assert!(is_rainbow_two_connected(&g, &c).passed);
    }

    #[test]
    fn chord_must_be_a_chord() {
        let mut g = fam(Family::Cycle(5));
        g.add_edge(0, 2);
        let err = color_hamiltonian_with_chord(&g, &[0, 1, 2, 3, 4], Edge::new(0, 1)).unwrap_err();
        assert!(matches!(err, Error::ChordInvalid { .. }));
        let err = color_hamiltonian_with_chord(&g, &[0, 2, 1, 3, 4], Edge::new(0, 2)).unwrap_err();
        assert!(matches!(err, Error::NotHamiltonianCycle(_)));
    }

    #[test]
    fn k23_base_coloring() {
        // u=0 v=1 a=2 b=3 c=4; G_0 = u,a,v,b and P_0 = u,c,v
        let g = fam(Family::Theta(2, 2, 2));
        let d = degree_two_set(&g);
        let labeling = BaseLabeling {
            order: vec![0, 2, 1, 3, 4],
            s: 4,
            ell: 5,
            p: 3,
            p1: 2,
            p2: 4,
            p3: 5,
        };
        let (c, f) = color_base_subgraph(&labeling, &g, &d).unwrap();
        // ua:x1 av:x2 vb:x3 bu:x4 cv:x4 uc:x3
        assert_eq!(
            colors_of(&c, &[(0, 2), (2, 1), (1, 3), (3, 0), (4, 1), (0, 4)]),
            [0, 1, 2, 3, 3, 2]
        );
        assert_eq!(f, UniqueColorMap::from_iter([(0, Color(0)), (1, Color(1))]));
        assert_eq!(c.color_count(), 4);
        assert!(is_rainbow_two_connected(&g, &c).passed);
        assert!(check_unique_color_map(&g, &c, &f).passed);
    }

    #[test]
    fn theta333_base_coloring() {
        let g = fam(Family::Theta(3, 3, 3));
        let d = degree_two_set(&g);
        let dec = build_ear_decomposition(&g).unwrap();
        let lab = select_base_labeling(&dec, &d).unwrap();
        let (c, _) = color_base_subgraph(&lab, &g, &d).unwrap();
        assert_eq!(c.color_count(), 7);
        assert_eq!(c.multiplicity(Color(5)), 2);
        assert_eq!(c.multiplicity(Color(3)), 2);
        assert!(is_rainbow_two_connected(&g, &c).passed);
    }

    #[test]
    fn k24_extension() {
        // K_{2,4}: hubs 0,1 and branch vertices 2,3,4,5
        let g = fam(Family::CompleteBipartite(2, 4));
        let d = degree_two_set(&g);
        let labeling = BaseLabeling {
            order: vec![0, 2, 1, 3, 4],
            s: 4,
            ell: 5,
            p: 3,
            p1: 2,
            p2: 4,
            p3: 5,
        };
        let mut g1 = g.clone();
        g1.remove_edge(0, 5);
        g1.remove_edge(1, 5);
        let base = color_base_subgraph(&labeling, &g1, &d).unwrap();
        let (c, f) = extend_with_ear(&base, &Path(vec![0, 5, 1]), &d).unwrap();
        // ud:y1, dv:x1 = f_1(u)
        assert_eq!(colors_of(&c, &[(0, 5), (5, 1)]), [4, 0]);
        assert_eq!(f, UniqueColorMap::from_iter([(0, Color(4)), (1, Color(1))]));
        assert_eq!(c.color_count(), 5);
        assert!(is_rainbow_two_connected(&g, &c).passed);
    }

    #[test]
    fn long_ear_extension() {
        // theta(2,2,2) plus the ear 0-5-6-1 where 5 has degree two and 6 has a
        // pendant ear 6-7-1 attached afterwards, so 6 is not in d.
        let g = Graph::from_edges(
            8,
            [
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (0, 5),
                (5, 6),
                (6, 1),
                (6, 7),
                (7, 1),
            ],
        )
        .unwrap();
        let d = degree_two_set(&g);
        assert!(d.contains(5) && !d.contains(6));
        let labeling = BaseLabeling {
            order: vec![0, 2, 1, 3, 4],
            s: 4,
            ell: 5,
            p: 3,
            p1: 2,
            p2: 4,
            p3: 5,
        };
        let g1 = Graph::from_edges(8, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let base = color_base_subgraph(&labeling, &g1, &d).unwrap();
        let (c, f) = extend_with_ear(&base, &Path(vec![0, 5, 6, 1]), &d).unwrap();
        // y1 = 4 on 0-5, y2 = 5 on 5-6, f_1(u) = 0 on 6-1
        assert_eq!(colors_of(&c, &[(0, 5), (5, 6), (6, 1)]), [4, 5, 0]);
        // q0 = 2, so v_3 = 6 maps to y_2
        assert_eq!(f.get(0), Some(Color(4)));
        assert_eq!(f.get(6), Some(Color(5)));
        assert_eq!(c.color_count(), 6);
    }

    #[test]
    fn extension_errors() {
        let g = fam(Family::Theta(2, 2, 2));
        let d = degree_two_set(&g);
        let c: EdgeColoring = g.edges().enumerate().map(|(i, e)| (e, Color(i))).collect();
        let f = UniqueColorMap::from_iter([(0, Color(0))]);
        let prev = (c, f);
        assert_eq!(
            extend_with_ear(&prev, &Path(vec![0, 7, 1]), &d),
            Err(Error::NoInteriorDegreeTwo(vec![0, 7, 1]))
        );
        assert_eq!(
            extend_with_ear(&prev, &Path(vec![1, 2, 0]), &d),
            Err(Error::EndpointNotEligible(1))
        );
    }

    #[test]
    fn minimal_end_to_end() {
        let r = color_minimally_two_connected(&fam(Family::Theta(2, 2, 2))).unwrap();
        assert_eq!(r.color_count(), 4);
        let r = color_minimally_two_connected(&fam(Family::CompleteBipartite(2, 4))).unwrap();
        assert_eq!(r.color_count(), 5);
        assert_eq!(r.trace.as_ref().unwrap().len(), 2);
        assert!(matches!(
            color_minimally_two_connected(&fam(Family::Cycle(6))),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn dispatcher() {
        let r = color_rc2(&fam(Family::Cycle(7))).unwrap();
        assert_eq!((r.strategy, r.color_count()), (Strategy::Cycle, 7));

        let k4 = fam(Family::Complete(4));
        let r = color_rc2(&k4).unwrap();
        assert_eq!(
            (r.strategy, r.color_count()),
            (Strategy::HamiltonianChord, 3)
        );
        assert!(is_rainbow_two_connected(&k4, &r.coloring).passed);

        let w6 = fam(Family::Wheel(6));
        let r = color_rc2(&w6).unwrap();
        assert!(r.color_count() <= 5);
        assert!(is_rainbow_two_connected(&w6, &r.coloring).passed);

        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(color_rc2(&path).unwrap_err(), Error::NotTwoConnected);
    }

    #[test]
    fn json_shape() {
        let r = color_rc2(&fam(Family::Cycle(3))).unwrap();
        let text = serde_json::to_string(&r.to_json(false)).unwrap();
        assert_eq!(
            text,
            r#"{"colors":3,"strategy":"cycle","edges":[{"u":0,"v":1,"color":0},{"u":0,"v":2,"color":2},{"u":1,"v":2,"color":1}]}"#
        );
        let back: ColoringJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.edge_coloring(), r.coloring);
    }

    #[test]
    fn dot_export() {
        let g = fam(Family::Cycle(3));
        let dot = to_dot(&g, &color_cycle(&g).unwrap());
        assert!(dot.starts_with("graph rc2 {"));
        assert!(dot.contains("0 -- 1 [color=\"#e6194b\", label=\"0\"];"));
        let mut big = EdgeColoring::new();
        big.insert(Edge::new(0, 1), Color(17));
        assert!(to_dot(&g, &big).contains("color=\"#3cb44b\", label=\"17\""));
    }
}
