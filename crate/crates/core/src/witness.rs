//! Problem names and certificate checking.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::SimpleGraph;
use crate::oracle::is_forest_after_deleting;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Problem {
    ExactCycle,
    LongestPath,
    LongestCycle,
    Fvs,
    CyclePacking,
}

impl Problem {
    pub const ALL: [Problem; 5] = [
        Problem::ExactCycle,
        Problem::LongestPath,
        Problem::LongestCycle,
        Problem::Fvs,
        Problem::CyclePacking,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::ExactCycle => "exact-cycle",
            Problem::LongestPath => "longest-path",
            Problem::LongestCycle => "longest-cycle",
            Problem::Fvs => "fvs",
            Problem::CyclePacking => "cycle-packing",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown problem `{s}`")))
    }
}

/// Certificate for a YES answer, over vertex indices of the checked graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// Vertices in cyclic order.
    Cycle(Vec<usize>),
    /// Vertices in path order.
    Path(Vec<usize>),
    VertexSet(Vec<usize>),
    CycleFamily(Vec<Vec<usize>>),
}

impl Witness {
    /// All vertices mentioned, flattened.
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Witness::Cycle(v) | Witness::Path(v) | Witness::VertexSet(v) => v.clone(),
            Witness::CycleFamily(cs) => cs.iter().flatten().copied().collect(),
        }
    }

    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Witness {
        let m = |v: &Vec<usize>| v.iter().map(|&x| f(x)).collect::<Vec<_>>();
        match self {
            Witness::Cycle(v) => Witness::Cycle(m(v)),
            Witness::Path(v) => Witness::Path(m(v)),
            Witness::VertexSet(v) => Witness::VertexSet(m(v)),
            Witness::CycleFamily(cs) => Witness::CycleFamily(cs.iter().map(m).collect()),
        }
    }
}

fn distinct_in_range(g: &SimpleGraph, vs: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    vs.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
}

pub fn is_path(g: &SimpleGraph, p: &[usize]) -> bool {
    !p.is_empty() && distinct_in_range(g, p) && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub fn is_cycle(g: &SimpleGraph, c: &[usize]) -> bool {
    c.len() >= 3 && is_path(g, c) && g.has_edge(c[0], c[c.len() - 1])
}

/// Does `w` certify a YES answer for `problem` with parameter `k` on `g`.
pub fn verify_witness(g: &SimpleGraph, problem: Problem, k: usize, w: &Witness) -> bool {
    match (problem, w) {
        (Problem::ExactCycle, Witness::Cycle(c)) => c.len() == k && is_cycle(g, c),
        (Problem::LongestCycle, Witness::Cycle(c)) => c.len() >= k && is_cycle(g, c),
        (Problem::LongestPath, Witness::Path(p)) => p.len() >= k && is_path(g, p),
        (Problem::Fvs, Witness::VertexSet(s)) => {
            s.len() <= k && distinct_in_range(g, s) && is_forest_after_deleting(g, s)
        }
        (Problem::CyclePacking, Witness::CycleFamily(cs)) => {
            let all: Vec<usize> = cs.iter().flatten().copied().collect();
            cs.len() >= k && distinct_in_range(g, &all) && cs.iter().all(|c| is_cycle(g, c))
        }
        _ => false,
    }
}
