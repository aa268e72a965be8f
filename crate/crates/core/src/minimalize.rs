//! Spanning minimally 2-connected subgraphs and the forest structure of
//! minimally 2-connected graphs.

use crate::error::{Error, Result};
use crate::graph::{degree_two_set, is_cycle_graph, is_two_connected, Graph, Vertex};
use crate::verify::{Property, VerificationReport};

/// Deletes edges in lexicographic order while 2-connectivity survives,
/// repeating passes until one deletes nothing.
pub fn spanning_minimally_two_connected(g: &Graph) -> Result<Graph> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let mut h = g.clone();
    loop {
        let mut changed = false;
        let snapshot: Vec<_> = h.edges().collect();
        for e in snapshot {
            h.remove_edge(e.u(), e.v());
            if is_two_connected(&h) {
                changed = true;
            } else {
                h.add_edge(e.u(), e.v());
            }
        }
        if !changed {
            return Ok(h);
        }
    }
}

/// 2-connected, and every single-edge deletion breaks that.
pub fn is_minimally_two_connected(g: &Graph) -> bool {
    if !is_two_connected(g) {
        return false;
    }
    let mut h = g.clone();
    let edges: Vec<_> = g.edges().collect();
    edges.into_iter().all(|e| {
        h.remove_edge(e.u(), e.v());
        let critical = !is_two_connected(&h);
        h.add_edge(e.u(), e.v());
        critical
    })
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }

    /// False if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Checks the structure of a minimally 2-connected non-cycle with
/// degree-two set `D`:
///
/// (a) `G - D` is a forest with at least two components;
/// (b) each component of `G[D]` is a path;
/// (c) the two ends of each such path attach to different trees of `G - D`.
pub fn bollobas_structure_check(g: &Graph) -> Result<VerificationReport> {
    if is_cycle_graph(g) {
        return Err(Error::PreconditionViolated("graph is a cycle".into()));
    }
    if !is_minimally_two_connected(g) {
        return Err(Error::PreconditionViolated(
            "graph is not minimally 2-connected".into(),
        ));
    }
    let n = g.vertex_count();
    let d = degree_two_set(g);
    let mut report = VerificationReport::new(Property::Structure);

    // (a)
    let mut forest = Dsu::new(n);
    let mut cyclic = false;
    for e in g.edges() {
        if !d.contains(e.u()) && !d.contains(e.v()) && !forest.union(e.u(), e.v()) {
            report.violate(
                Property::Structure,
                vec![e.u(), e.v()],
                "(a) G - D contains a cycle",
            );
            cyclic = true;
        }
    }
    let mut roots: Vec<usize> = g
        .vertices()
        .filter(|&v| !d.contains(v))
        .map(|v| forest.find(v))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    if !cyclic && roots.len() < 2 {
        report.violate(
            Property::Structure,
            vec![],
            format!(
                "(a) G - D has {} component(s), need at least two",
                roots.len()
            ),
        );
    }

    // (b) and (c)
    let mut seen = vec![false; n];
    for start in d.iter() {
        if seen[start] {
            continue;
        }
        let mut comp: Vec<Vertex> = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if d.contains(w) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        let inner_edges = comp
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| d.contains(w)).count())
            .sum::<usize>()
            / 2;
        if inner_edges + 1 != comp.len() {
            report.violate(
                Property::Structure,
                comp.clone(),
                "(b) component of G[D] is not a path",
            );
            continue;
        }
        let attachments: Vec<Vertex> = comp
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied().filter(|&w| !d.contains(w)))
            .collect();
        if attachments.len() != 2 {
            report.violate(
                Property::Structure,
                comp.clone(),
                format!("(c) path has {} attachments, expected 2", attachments.len()),
            );
            continue;
        }
        if forest.find(attachments[0]) == forest.find(attachments[1]) {
            report.violate(
                Property::Structure,
                comp.clone(),
                format!(
                    "(c) path ends attach to the same tree via {} and {}",
                    attachments[0], attachments[1]
                ),
            );
        }
    }
    Ok(report)
}
