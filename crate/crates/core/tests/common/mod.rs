#![allow(dead_code)]

use rc2::{generate_family, is_cycle_graph, Family, Graph};

pub struct Case {
    pub name: String,
    pub family: Family,
    pub seed: u64,
    pub graph: Graph,
}

fn case(family: Family, seed: u64) -> Case {
    let graph = generate_family(&family, seed).unwrap();
    let name = match family {
        Family::RandomTwoConnected { .. } => format!("{family}#{seed}"),
        _ => family.to_string(),
    };
    Case {
        name,
        family,
        seed,
        graph,
    }
}

/// Thetas with a+b+c <= 10, wheels W4..W9, K4..K7, K_{a,b} with
/// 2 <= a <= b <= 5 except the 4-cycle K_{2,2}, and 100 random graphs.
pub fn corpus() -> Vec<Case> {
    let mut out = Vec::new();
    for a in 2..=6 {
        for b in 2..=6 {
            for c in 2..=6 {
                if a + b + c <= 10 {
                    out.push(case(Family::Theta(a, b, c), 0));
                }
            }
        }
    }
    for n in 4..=9 {
        out.push(case(Family::Wheel(n), 0));
    }
    for n in 4..=7 {
        out.push(case(Family::Complete(n), 0));
    }
    for a in 2..=5 {
        for b in a..=5 {
            if (a, b) != (2, 2) {
                out.push(case(Family::CompleteBipartite(a, b), 0));
            }
        }
    }
    out.extend(random_corpus(100));
    out
}

/// `count` random non-cycles with 5 <= n <= 12 and one to four ears.
pub fn random_corpus(count: usize) -> Vec<Case> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let n = 5 + (seed % 8) as usize;
        let ears = 1 + (seed / 8 % 4) as usize;
        let c = case(Family::RandomTwoConnected { n, ears }, seed);
        if !is_cycle_graph(&c.graph) {
            out.push(c);
        }
        seed += 1;
    }
    out
}
