//! Simple undirected graphs on dense vertex ids, plus the connectivity
//! primitives the rest of the crate is built on.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex id.
pub type Vertex = usize;

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Vertex, Vertex)", into = "(Vertex, Vertex)")]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn u(self) -> Vertex {
        self.0
    }

    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint opposite `x`. `x` must be an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        debug_assert!(self.contains(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((u, v): (Vertex, Vertex)) -> Self {
        Edge::new(u, v)
    }
}

impl From<Edge> for (Vertex, Vertex) {
    fn from(e: Edge) -> Self {
        (e.0, e.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A simple, finite, undirected graph.
///
/// Adjacency lists are kept sorted so every traversal visits neighbors in
/// ascending id order, which makes all downstream algorithms deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (i, (u, v)) in edges.into_iter().enumerate() {
            g.try_add_edge(u, v).map_err(|reason| Error::InvalidInput {
                line: i + 1,
                reason,
            })?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> std::result::Result<(), String> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(format!("edge {u}-{v} has an endpoint outside 0..{n}"));
        }
        if u == v {
            return Err(format!("self-loop at {u}"));
        }
        if self.has_edge(u, v) {
            return Err(format!("duplicate edge {}", Edge::new(u, v)));
        }
        insert_sorted(&mut self.adj[u], v);
        insert_sorted(&mut self.adj[v], u);
        Ok(())
    }

    /// Adds an edge; panics on loops, duplicates, or bad endpoints.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        if let Err(reason) = self.try_add_edge(u, v) {
            panic!("add_edge: {reason}");
        }
    }

    /// Removes an edge if present, returning whether it was there.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        true
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if present, else the id.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge(u, v))
        })
    }

    /// Spanning subgraph on the same vertex set with the given edges.
    pub fn spanning_subgraph<I: IntoIterator<Item = Edge>>(&self, edges: I) -> Graph {
        let mut h = Graph::new(self.vertex_count());
        for e in edges {
            h.add_edge(e.u(), e.v());
        }
        h.labels = self.labels.clone();
        h
    }

    /// Vertices with at least one incident edge.
    pub fn support(&self) -> VertexSet {
        self.vertices().filter(|&v| self.degree(v) > 0).collect()
    }

    /// Re-indexes the subgraph induced by `keep` onto `0..keep.len()`.
    /// Returns the compact graph and the map from new ids to old ids.
    pub fn compact(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let back: Vec<Vertex> = keep.iter().collect();
        let mut fwd = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in back.iter().enumerate() {
            fwd[v] = i;
        }
        let mut h = Graph::new(back.len());
        for e in self.edges() {
            let (a, b) = (fwd[e.u()], fwd[e.v()]);
            if a != usize::MAX && b != usize::MAX {
                h.add_edge(a, b);
            }
        }
        (h, back)
    }

    /// Serializable `{"n": .., "edges": [[u, v], ..]}` form.
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.vertex_count(),
            edges: self.edges().map(|e| [e.u(), e.v()]).collect(),
        }
    }

    /// One `u v` line per edge, using labels when the graph has them.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in self.edges() {
            out.push_str(&self.label(e.u()));
            out.push(' ');
            out.push_str(&self.label(e.v()));
            out.push('\n');
        }
        out
    }
}

fn insert_sorted(list: &mut Vec<Vertex>, v: Vertex) {
    if let Err(pos) = list.binary_search(&v) {
        list.insert(pos, v);
    }
}

/// JSON wire form of a [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

/// A simple path given as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        *self.0.last().expect("empty path")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    /// Vertices strictly between the two ends.
    pub fn interior(&self) -> &[Vertex] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Checks that consecutive vertices are adjacent in `g` and no vertex repeats.
    pub fn is_simple_path_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        let distinct: BTreeSet<_> = self.0.iter().collect();
        distinct.len() == self.0.len() && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("-"))
    }
}

/// An ordered set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    /// `V(g)` minus this set.
    pub fn complement_in(&self, g: &Graph) -> VertexSet {
        g.vertices().filter(|v| !self.contains(*v)).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

/// Parses the `u v` edge-list format.
///
/// Blank lines and lines starting with `#` are skipped. If every token is a
/// non-negative integer the tokens are used as ids directly; otherwise every
/// token is treated as a name and ids are assigned in order of first
/// appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs: Vec<(usize, &str, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => pairs.push((i + 1, a, b)),
            _ => {
                return Err(Error::InvalidInput {
                    line: i + 1,
                    reason: format!("expected two vertex tokens, got {line:?}"),
                })
            }
        }
    }

    let numeric = pairs
        .iter()
        .all(|(_, a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());

    let mut ids: Vec<(usize, Vertex, Vertex)> = Vec::with_capacity(pairs.len());
    let mut labels: Option<Vec<String>> = None;
    if numeric {
        for &(line, a, b) in &pairs {
            ids.push((line, a.parse().unwrap(), b.parse().unwrap()));
        }
    } else {
        let mut index: HashMap<&str, Vertex> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        for &(line, a, b) in &pairs {
            let mut id = |name| {
                *index.entry(name).or_insert_with(|| {
                    names.push(name.to_string());
                    names.len() - 1
                })
            };
            let u = id(a);
            let v = id(b);
            ids.push((line, u, v));
        }
        labels = Some(names);
    }

    let n = match &labels {
        Some(l) => l.len(),
        None => ids.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    let mut g = Graph::new(n);
    for (line, u, v) in ids {
        g.try_add_edge(u, v)
            .map_err(|reason| Error::InvalidInput { line, reason })?;
    }
    if let Some(l) = labels {
        g = g.with_labels(l);
    }
    Ok(g)
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Cut vertices of `g`, ascending. Iterative low-link DFS over every component.
pub fn articulation_points(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if idx < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// True iff `g` has at least three vertices, is connected, and has no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.vertex_count() >= 3 && is_connected(g) && articulation_points(g).is_empty()
}

/// Vertices of degree exactly two.
pub fn degree_two_set(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) == 2).collect()
}

/// True iff `g` is connected and 2-regular.
pub fn is_cycle_graph(g: &Graph) -> bool {
    g.vertex_count() >= 3 && g.vertices().all(|v| g.degree(v) == 2) && is_connected(g)
}

/// Vertex order around a cycle graph, starting at 0 and stepping to the
/// smaller neighbor first. `None` if `g` is not a cycle.
pub fn cycle_order(g: &Graph) -> Option<Vec<Vertex>> {
    if !is_cycle_graph(g) {
        return None;
    }
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let (mut prev, mut cur) = (usize::MAX, 0);
    for _ in 0..n {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("cycle vertex has two neighbors");
        prev = cur;
        cur = next;
    }
    Some(order)
}
