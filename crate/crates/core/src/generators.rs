//! Deterministic generators for the 2-connected graph families used as a
//! test corpus.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A graph family and its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `C_n`.
    Cycle(usize),
    /// Two hubs joined by three internally disjoint paths with the given
    /// edge lengths. Hubs are vertices 0 and 1.
    Theta(usize, usize, usize),
    /// Hub 0 joined to every vertex of a rim cycle on `1..n`; `n` counts the hub.
    Wheel(usize),
    Complete(usize),
    /// Parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// A random cycle grown by `ears` random ears to `n` vertices in total.
    RandomTwoConnected {
        n: usize,
        ears: usize,
    },
}

impl Family {
    /// Builds a family from a CLI-style name and comma-separated parameters.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Family> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidSpec(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let fam = match name {
            "cycle" => {
                want(1)?;
                Family::Cycle(params[0])
            }
            "theta" => {
                want(3)?;
                Family::Theta(params[0], params[1], params[2])
            }
            "wheel" => {
                want(1)?;
                Family::Wheel(params[0])
            }
            "complete" => {
                want(1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" => {
                want(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "random_two_connected" | "random" => {
                want(2)?;
                Family::RandomTwoConnected {
                    n: params[0],
                    ears: params[1],
                }
            }
            other => return Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        };
        fam.validate()?;
        Ok(fam)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match *self {
            Family::Cycle(n) if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Family::Theta(a, b, c) if a.min(b).min(c) < 2 => bad(format!(
                "theta path lengths must be >= 2, got ({a},{b},{c})"
            )),
            Family::Wheel(n) if n < 4 => bad(format!("wheel needs n >= 4, got {n}")),
            Family::Complete(n) if n < 3 => bad(format!("complete graph needs n >= 3, got {n}")),
            Family::CompleteBipartite(a, b) if a.min(b) < 2 => bad(format!(
                "complete bipartite needs both parts >= 2, got ({a},{b})"
            )),
            Family::RandomTwoConnected { n, .. } if n < 3 => {
                bad(format!("random graph needs n >= 3, got {n}"))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Theta(a, b, c) => write!(f, "theta({a},{b},{c})"),
            Family::Wheel(n) => write!(f, "wheel({n})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            Family::RandomTwoConnected { n, ears } => write!(f, "random_two_connected({n},{ears})"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name(p1,p2,..)` as printed by `Display`.
    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim();
        let (name, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::InvalidSpec(format!("expected name(params), got {s:?}")))?;
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::InvalidSpec(format!("missing ')' in {s:?}")))?;
        let params = parse_params(inner)?;
        Family::from_name(name, &params)
    }
}

/// Parses `"2,3,4"` into integers.
pub fn parse_params(text: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidSpec(format!("bad parameter {p:?}")))
        })
        .collect()
}

/// Generates a member of `family`. Only the random family uses `seed`.
pub fn generate_family(family: &Family, seed: u64) -> Result<Graph> {
    family.validate()?;
    let g = match *family {
        Family::Cycle(n) => cycle(n),
        Family::Theta(a, b, c) => theta(a, b, c),
        Family::Wheel(n) => {
            let mut g = Graph::new(n);
            for i in 1..n {
                g.add_edge(0, i);
                g.add_edge(i, if i + 1 < n { i + 1 } else { 1 });
            }
            g
        }
        Family::Complete(n) => {
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            g
        }
        Family::CompleteBipartite(a, b) => {
            let mut g = Graph::new(a + b);
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v);
                }
            }
            g
        }
        Family::RandomTwoConnected { n, ears } => random_two_connected(n, ears, seed),
    };
    Ok(g)
}

fn cycle(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

fn theta(a: usize, b: usize, c: usize) -> Graph {
    let n = a + b + c - 1;
    let mut g = Graph::new(n);
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len - 1 {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1);
    }
    g
}

/// Grows a random cycle by ears, so the result is 2-connected by construction.
///
/// The `n - k` non-cycle vertices are spread over the ears at random; an ear
/// that receives none is a chord. A chord that cannot be placed because the
/// current graph is complete is skipped.
fn random_two_connected(n: usize, ears: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let interior_total = if ears == 0 {
        0
    } else {
        rng.random_range(0..=n - 3)
    };
    let mut interiors = vec![0usize; ears];
    for _ in 0..interior_total {
        interiors[rng.random_range(0..ears)] += 1;
    }

    let mut ids: Vec<Vertex> = (0..n).collect();
    ids.shuffle(&mut rng);
    let base_len = n - interior_total;

    let mut g = Graph::new(n);
    for i in 0..base_len {
        g.add_edge(ids[i], ids[(i + 1) % base_len]);
    }
    let mut placed: Vec<Vertex> = ids[..base_len].to_vec();
    let mut fresh = ids[base_len..].iter().copied();

    for k in interiors {
        placed.sort_unstable();
        let (a, b) = if k == 0 {
            let candidates: Vec<(Vertex, Vertex)> = placed
                .iter()
                .enumerate()
                .flat_map(|(i, &u)| placed[i + 1..].iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            if candidates.is_empty() {
                continue;
            }
            candidates[rng.random_range(0..candidates.len())]
        } else {
            let i = rng.random_range(0..placed.len());
            let mut j = rng.random_range(0..placed.len() - 1);
            if j >= i {
                j += 1;
            }
            (placed[i], placed[j])
        };
        let mut prev = a;
        for _ in 0..k {
            let x = fresh.next().expect("interior vertex budget");
            g.add_edge(prev, x);
            placed.push(x);
            prev = x;
        }
        g.add_edge(prev, b);
    }
    g
}
