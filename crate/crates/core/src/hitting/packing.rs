//! Cycle Packing: the clique shortcut, then the packing mode of the shared
//! cycle DP over the vertex-level expansion of a cell-level decomposition.

use crate::cliquegrid::CliqueGridInstance;
use crate::cycles::treedp::TreeDpOutcome;
use crate::cycles::{cycle_tree_dp, expand_cell_nctd, CycleCaps, CycleMode, SolveResult, SolveStats, SolverOptions};
use crate::decomp::{solver_cell_nctd, verify_cell_nctd, CellNctd};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::kernel::large_clique_cell;
use crate::witness::Witness;

/// Worst-case bound on the crossing vertices a cell contributes to a simple
/// family of cycles.
pub const CROSSING_BOUND: usize = 2304;

/// State caps for `k` cycles over `nctd`. The faithful caps bound open
/// endpoints by the crossing bound per cell. The adaptive caps bound chosen
/// vertices by `3k` per cell: an induced cycle meets a clique cell in at most
/// three vertices.
pub fn packing_caps(nctd: &CellNctd, k: usize, prune: bool, faithful: bool) -> CycleCaps {
    let cells = nctd.cells_per_bag();
    match (prune, faithful) {
        (false, _) => CycleCaps::default(),
        (true, true) => CycleCaps { chosen: None, endpoints: Some(CROSSING_BOUND * cells) },
        (true, false) => CycleCaps { chosen: Some(3 * k * cells), endpoints: None },
    }
}

/// Packing DP for `k` disjoint cycles; cycles come back shortcut to induced
/// ones.
pub fn packing_dp(
    inst: &CliqueGridInstance,
    nctd: &CellNctd,
    k: usize,
    caps: CycleCaps,
    witness: bool,
) -> Result<TreeDpOutcome> {
    if !verify_cell_nctd(inst, nctd) {
        return Err(Error::Structure("cell-level decomposition is invalid".into()));
    }
    let nice = expand_cell_nctd(inst, nctd);
    let mut out = cycle_tree_dp(inst.graph(), &nice, CycleMode::Packing { k }, caps, witness);
    for c in &mut out.cycles {
        *c = shortcut_to_induced(inst.graph(), c);
    }
    Ok(out)
}

/// Replaces a cycle by an induced cycle on a subset of its vertices, cutting
/// along chords until none is left.
pub fn shortcut_to_induced(g: &SimpleGraph, cycle: &[usize]) -> Vec<usize> {
    let mut c = cycle.to_vec();
    'again: loop {
        let len = c.len();
        for i in 0..len {
            for j in i + 2..len {
                if (i, j) != (0, len - 1) && g.has_edge(c[i], c[j]) {
                    c = c[i..=j].to_vec();
                    continue 'again;
                }
            }
        }
        return c;
    }
}

/// Are there `k` vertex-disjoint cycles.
pub fn cycle_packing(inst: &CliqueGridInstance, k: usize, opts: &SolverOptions) -> Result<SolveResult> {
    let mut stats = SolveStats::default();
    if k == 0 {
        return Ok(SolveResult::yes(Witness::CycleFamily(Vec::new()), stats));
    }
    if let Some(c) = large_clique_cell(inst, 3 * k) {
        stats.shortcut = Some("large-cell".into());
        let vs = inst.cell_vertices(c);
        let family = (0..k).map(|i| vs[3 * i..3 * i + 3].to_vec()).collect();
        return Ok(SolveResult::yes(Witness::CycleFamily(family), stats));
    }
    let nctd = solver_cell_nctd(inst, opts.td_budget);
    let caps = packing_caps(&nctd, k, opts.prune, opts.faithful_caps);
    let out = packing_dp(inst, &nctd, k, caps, opts.witness)?;
    stats.dp_states = out.stats.states;
    stats.peak_states = out.stats.peak;
    if !out.found {
        return Ok(SolveResult::no(stats));
    }
    let witness = opts.witness.then_some(Witness::CycleFamily(out.cycles));
    Ok(SolveResult { answer: true, witness, stats })
}
