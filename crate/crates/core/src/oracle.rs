//! Exact rc2 by exhaustive search over canonical colorings, for tiny graphs.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{color_rc2, Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{is_cycle_graph, is_two_connected, Edge, Graph};
use crate::verify::ColoredGraph;

/// Default number of verifier calls a search may spend.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rc2Bound {
    /// `k` colors suffice and no smaller number does.
    Exact {
        k: usize,
        witness: EdgeColoring,
        calls: u64,
    },
    /// No coloring with at most `k_max` colors works.
    Unbounded { k_max: usize, calls: u64 },
}

impl Rc2Bound {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Rc2Bound::Exact { k, .. } => Some(*k),
            Rc2Bound::Unbounded { .. } => None,
        }
    }
}

/// Visits every restricted-growth string of length `m` with exactly `k`
/// distinct values, in lexicographic order. Each is the canonical
/// representative of the colorings that use exactly `k` colors and agree up
/// to renaming.
pub fn for_each_canonical<F>(m: usize, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k > m || (k == 0) != (m == 0) {
        return ControlFlow::Continue(());
    }
    let mut digits = vec![0usize; m];
    extend_canonical(&mut digits, 0, 0, k, &mut visit)
}

fn extend_canonical<F>(
    digits: &mut [usize],
    i: usize,
    used: usize,
    k: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let m = digits.len();
    if i == m {
        return if used == k {
            visit(digits)
        } else {
            ControlFlow::Continue(())
        };
    }
    // Every value still missing must fit in the remaining slots.
    if k - used > m - i {
        return ControlFlow::Continue(());
    }
    let top = if used < k { used } else { k - 1 };
    for c in 0..=top {
        digits[i] = c;
        extend_canonical(digits, i + 1, used.max(c + 1), k, visit)?;
    }
    ControlFlow::Continue(())
}

/// Smallest `k <= k_max` admitting a rainbow 2-connected coloring, trying
/// `k = 1, 2, ..` and at each stage every canonical coloring with exactly
/// `k` colors. `budget` caps the number of colorings checked.
pub fn brute_force_rc2(g: &Graph, k_max: usize, budget: u64) -> Result<Rc2Bound> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let m = edges.len();
    let mut cg = ColoredGraph::from_indices(g, vec![0; m]);
    let mut calls = 0u64;
    for k in 1..=k_max.min(m) {
        let mut found: Option<Vec<usize>> = None;
        let mut exhausted = false;
        let _ = for_each_canonical(m, k, |digits| {
            if calls == budget {
                exhausted = true;
                return ControlFlow::Break(());
            }
            calls += 1;
            cg.set_colors(digits);
            if cg.first_bad_pair().is_none() {
                found = Some(digits.to_vec());
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if let Some(digits) = found {
            let witness = edges
                .iter()
                .zip(digits)
                .map(|(&e, c)| (e, Color(c)))
                .collect();
            return Ok(Rc2Bound::Exact { k, witness, calls });
        }
        if exhausted {
            return Err(Error::BudgetExceeded {
                budget,
                lower_bound: k,
            });
        }
    }
    Ok(Rc2Bound::Unbounded { k_max, calls })
}

/// Recolors one edge of a repeated color with a fresh color and rechecks.
/// A fresh color cannot break a rainbow path, so a valid `k`-coloring with
/// `k < m` always yields a valid `(k+1)`-coloring this way.
pub fn monotone_step_holds(g: &Graph, c: &EdgeColoring) -> Option<bool> {
    let edges: Vec<Edge> = g.edges().collect();
    let mut colors: Vec<usize> = edges.iter().map(|&e| c.get(e).map_or(0, |x| x.0)).collect();
    let fresh = colors.iter().max().map_or(0, |&x| x + 1);
    let idx =
        (0..colors.len()).find(|&i| colors.iter().filter(|&&x| x == colors[i]).count() > 1)?;
    colors[idx] = fresh;
    Some(
        ColoredGraph::from_indices(g, colors)
            .first_bad_pair()
            .is_none(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    /// Bit `i` set when the `i`-th vertex pair in lexicographic order is an edge.
    pub graph_id: u64,
    pub n: usize,
    pub m: usize,
    /// `u-v` pairs joined by `;`.
    pub edges: String,
    pub rc2_exact: usize,
    pub rc2_constructive: usize,
    pub is_cycle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub rows: Vec<CensusRow>,
}

pub const CENSUS_HEADER: &str = "graph_id,n,m,edges,rc2_exact,rc2_constructive,is_cycle";

impl Census {
    /// Rows breaking `exact <= constructive`, `constructive <= n - 1` for
    /// non-cycles, or `exact == n` exactly for cycles.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.rows {
            if r.rc2_exact > r.rc2_constructive {
                out.push(format!(
                    "{}: exact {} > constructive {}",
                    r.edges, r.rc2_exact, r.rc2_constructive
                ));
            }
            if !r.is_cycle && r.rc2_constructive > r.n - 1 {
                out.push(format!(
                    "{}: constructive {} > n-1 on a non-cycle",
                    r.edges, r.rc2_constructive
                ));
            }
            if (r.rc2_exact == r.n) != r.is_cycle {
                out.push(format!(
                    "{}: exact {} with is_cycle={}",
                    r.edges, r.rc2_exact, r.is_cycle
                ));
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from(CENSUS_HEADER);
        s.push('\n');
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.graph_id, r.n, r.m, r.edges, r.rc2_exact, r.rc2_constructive, r.is_cycle
            ));
        }
        s
    }
}

/// Every 2-connected labeled graph on `n <= 5` vertices with its exact and
/// constructive rc2. Graphs are searched in parallel; rows come out in
/// `graph_id` order.
pub fn census_small_graphs(n: usize, budget: u64) -> Result<Census> {
    if !(3..=5).contains(&n) {
        return Err(Error::PreconditionViolated(format!(
            "census needs 3 <= n <= 5, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let graphs: Vec<(u64, Graph)> = (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let chosen = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            let g = Graph::from_edges(n, chosen).expect("pairs are valid");
            is_two_connected(&g).then_some((mask, g))
        })
        .collect();
    let rows = graphs
        .par_iter()
        .map(|(mask, g)| {
            let exact = match brute_force_rc2(g, g.edge_count(), budget)? {
                Rc2Bound::Exact { k, .. } => k,
                Rc2Bound::Unbounded { .. } => unreachable!("m distinct colors always work"),
            };
            let constructive = color_rc2(g)?.color_count();
            Ok(CensusRow {
                graph_id: *mask,
                n,
                m: g.edge_count(),
                edges: g
                    .edges()
                    .map(|e| format!("{}-{}", e.u(), e.v()))
                    .collect::<Vec<_>>()
                    .join(";"),
                rc2_exact: exact,
                rc2_constructive: constructive,
                is_cycle: is_cycle_graph(g),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Census { n, rows })
}
