//! Cycle and path solvers on clique-grid instances.

pub mod exact;
pub mod longest;
pub mod profiles;
pub mod treedp;

use serde::Serialize;

use crate::cliquegrid::CliqueGridInstance;
use crate::decomp::{verify_nice, NiceTreeDecomposition, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::witness::Witness;

pub use exact::{dp_exact_cycle, good_family, profile_dp, solve_target, FamilyMember, Target};
pub use longest::{contraction_loop, longest_cycle};
pub use treedp::{cycle_tree_dp, expand_cell_nctd, CycleCaps, CycleMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Keep back-pointers and return certificates.
    pub witness: bool,
    /// Apply the state-size caps.
    pub prune: bool,
    /// Use the loose worst-case caps instead of the adaptive ones (packing).
    pub faithful_caps: bool,
    /// Only enumerate good-family members with a largest kept set.
    pub maximal_kept_only: bool,
    /// Solve independent subproblems on the rayon pool.
    pub parallel: bool,
    /// Node budget for exact treewidth searches.
    pub td_budget: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            witness: true,
            prune: true,
            faithful_caps: false,
            maximal_kept_only: true,
            parallel: true,
            td_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub windows: usize,
    pub members: usize,
    pub dp_states: u64,
    pub peak_states: usize,
    pub contractions: usize,
    /// Name of the shortcut that decided the instance, if any.
    pub shortcut: Option<String>,
}

impl SolveStats {
    pub fn absorb(&mut self, other: &SolveStats) {
        self.windows += other.windows;
        self.members += other.members;
        self.dp_states += other.dp_states;
        self.peak_states = self.peak_states.max(other.peak_states);
        self.contractions += other.contractions;
        if self.shortcut.is_none() {
            self.shortcut.clone_from(&other.shortcut);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub answer: bool,
    pub witness: Option<Witness>,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn yes(witness: Witness, stats: SolveStats) -> Self {
        SolveResult { answer: true, witness: Some(witness), stats }
    }

    pub fn no(stats: SolveStats) -> Self {
        SolveResult { answer: false, witness: None, stats }
    }
}

/// Is there a cycle on exactly `k` vertices.
pub fn exact_k_cycle(inst: &CliqueGridInstance, k: usize, opts: &SolverOptions) -> Result<SolveResult> {
    if k < 3 {
        return Err(Error::Parameter(format!("cycle length {k} is below 3")));
    }
    solve_target(inst, Target::cycle(k, k), opts)
}

/// Is there a path on at least `k` vertices.
pub fn longest_path(inst: &CliqueGridInstance, k: usize, opts: &SolverOptions) -> Result<SolveResult> {
    match k {
        0 => Ok(SolveResult::yes(Witness::Path(Vec::new()), SolveStats::default())),
        _ if k > inst.n() => Ok(SolveResult::no(SolveStats::default())),
        1 => Ok(SolveResult::yes(Witness::Path(vec![0]), SolveStats::default())),
        2 => Ok(match inst.graph().edges().next() {
            Some((a, b)) => SolveResult::yes(Witness::Path(vec![a, b]), SolveStats::default()),
            None => SolveResult::no(SolveStats::default()),
        }),
        _ => solve_target(inst, Target::path(k), opts),
    }
}

/// Is the longest path exactly `k` vertices long (a `k`-path but no
/// `(k+1)`-path).
pub fn longest_path_exact(inst: &CliqueGridInstance, k: usize, opts: &SolverOptions) -> Result<SolveResult> {
    let at_least = longest_path(inst, k, opts)?;
    if !at_least.answer {
        return Ok(at_least);
    }
    let longer = longest_path(inst, k + 1, opts)?;
    let mut stats = at_least.stats.clone();
    stats.absorb(&longer.stats);
    if longer.answer {
        Ok(SolveResult::no(stats))
    } else {
        Ok(SolveResult { answer: true, witness: at_least.witness, stats })
    }
}

/// Is there a cycle with `k ≤ |C| ≤ 2k` vertices.
pub fn near_k_cycle(inst: &CliqueGridInstance, k: usize, opts: &SolverOptions) -> Result<SolveResult> {
    if k < 3 {
        return Err(Error::Parameter(format!("cycle length {k} is below 3")));
    }
    solve_target(inst, Target::cycle(k, 2 * k), opts)
}

/// Cycle on at least `k` vertices, by dynamic programming over `nice`.
pub fn tw_longest_cycle(g: &SimpleGraph, nice: &NiceTreeDecomposition, k: usize) -> Result<bool> {
    if !verify_nice(g, nice) {
        return Err(Error::Structure("not a nice tree decomposition of the graph".into()));
    }
    let out = cycle_tree_dp(g, nice, CycleMode::Single { min_len: k.max(3) }, CycleCaps::default(), false);
    Ok(out.found)
}
