//! Two internally disjoint paths from a vertex into a vertex set, found with
//! unit vertex-capacity max-flow.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, Vertex, VertexSet};

struct Arc {
    to: usize,
    cap: u8,
    rev: usize,
    forward: bool,
}

struct Network {
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            arcs: (0..nodes).map(|_| Vec::new()).collect(),
        }
    }

    fn add(&mut self, from: usize, to: usize) {
        let rf = self.arcs[to].len();
        let rt = self.arcs[from].len();
        self.arcs[from].push(Arc {
            to,
            cap: 1,
            rev: rf,
            forward: true,
        });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: rt,
            forward: false,
        });
    }

    /// One BFS augmentation; returns false when the sink is unreachable.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
        let mut queue = VecDeque::from([source]);
        let mut reached = false;
        while let Some(x) = queue.pop_front() {
            if x == sink {
                reached = true;
                break;
            }
            for (i, a) in self.arcs[x].iter().enumerate() {
                if a.cap > 0 && a.to != source && pred[a.to].is_none() {
                    pred[a.to] = Some((x, i));
                    queue.push_back(a.to);
                }
            }
        }
        if !reached {
            return false;
        }
        let mut cur = sink;
        while let Some((x, i)) = pred[cur] {
            self.arcs[x][i].cap -= 1;
            let (to, rev) = (self.arcs[x][i].to, self.arcs[x][i].rev);
            self.arcs[to][rev].cap += 1;
            cur = x;
        }
        true
    }
}

/// Two paths from `v0` ending at distinct members of `anchor`, sharing only
/// `v0`, with no interior vertex in `anchor`.
///
/// The pair is returned ordered by end vertex.
pub fn two_fan_to_subgraph(g: &Graph, v0: Vertex, anchor: &VertexSet) -> Result<(Path, Path)> {
    let n = g.vertex_count();
    if v0 >= n || anchor.iter().any(|a| a >= n) {
        return Err(Error::PreconditionViolated("vertex out of range".into()));
    }
    if anchor.contains(v0) {
        return Err(Error::PreconditionViolated(format!(
            "start vertex {v0} lies in the anchor set"
        )));
    }
    if anchor.len() < 2 {
        return Err(Error::PreconditionViolated(
            "anchor set needs at least two vertices".into(),
        ));
    }

    // in(x) = 2x, out(x) = 2x + 1, sink = 2n
    let inn = |x: Vertex| 2 * x;
    let out = |x: Vertex| 2 * x + 1;
    let sink = 2 * n;
    let mut net = Network::new(2 * n + 1);
    for x in g.vertices() {
        if x == v0 {
            continue;
        }
        if anchor.contains(x) {
            net.add(inn(x), sink);
        } else {
            net.add(inn(x), out(x));
        }
    }
    for e in g.edges() {
        let (a, b) = (e.u(), e.v());
        if b != v0 && !anchor.contains(a) {
            net.add(out(a), inn(b));
        }
        if a != v0 && !anchor.contains(b) {
            net.add(out(b), inn(a));
        }
    }

    let source = out(v0);
    for _ in 0..2 {
        if !net.augment(source, sink) {
            return Err(Error::NoFan(v0));
        }
    }

    let mut paths = Vec::with_capacity(2);
    for _ in 0..2 {
        let mut verts = vec![v0];
        let mut node = source;
        loop {
            let next = net.arcs[node]
                .iter_mut()
                .find(|a| a.forward && a.cap == 0)
                .map(|a| {
                    // consume so the second walk takes the other unit of flow
                    a.cap = 2;
                    a.to
                })
                .expect("flow decomposition follows saturated arcs");
            if next == sink {
                break;
            }
            if next % 2 == 0 {
                verts.push(next / 2);
            }
            node = next;
        }
        paths.push(Path(verts));
    }
    paths.sort_by_key(|p| p.last());
    let second = paths.pop().unwrap();
    let first = paths.pop().unwrap();
    Ok((first, second))
}
