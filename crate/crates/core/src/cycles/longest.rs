//! Longest Cycle: kernel shortcuts, a cycle search on the cell graph, then
//! near-k checks while contracting same-cell pairs one at a time.

use std::sync::Mutex;

use rayon::prelude::*;

use super::exact::{solve_target, Target};
use super::treedp::{cycle_tree_dp, CycleCaps, CycleMode};
use super::{SolveResult, SolveStats, SolverOptions};
use crate::cliquegrid::{contract_pair, CellGraph, CliqueGridInstance};
use crate::decomp::solver_cell_nctd;
use crate::error::{Error, Result};
use crate::kernel::{biconnected_blocks, maximal_windows, turing_kernel, KernelOutput, KernelProblem, ShortcutReason};
use crate::witness::Witness;

/// A vertex cycle through the cells of a cell-graph cycle: one cross edge per
/// consecutive cell pair, joined inside each cell (a clique).
pub fn lift_cell_cycle(inst: &CliqueGridInstance, cells: &CellGraph, cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    let g = inst.graph();
    // exits[i]: (vertex leaving cell i, vertex entering cell i+1)
    let exits: Vec<(usize, usize)> = (0..len)
        .map(|i| {
            let (a, b) = (cells.cells[cycle[i]], cells.cells[cycle[(i + 1) % len]]);
            inst.cell_vertices(a)
                .iter()
                .find_map(|&u| g.neighbors(u).iter().find(|&&w| inst.cell_of(w) == b).map(|&w| (u, w)))
                .expect("adjacent cells share an edge")
        })
        .collect();
    let mut seq = Vec::new();
    for i in 0..len {
        let enter = exits[(i + len - 1) % len].1;
        let leave = exits[i].0;
        seq.push(enter);
        if leave != enter {
            seq.push(leave);
        }
    }
    seq
}

/// Pulls a cycle of `after` (the contraction of `before` under `map`) back to
/// a cycle of `before` at least as long.
pub fn lift_through_contraction(before: &CliqueGridInstance, map: &[usize], cycle: &[usize]) -> Vec<usize> {
    let mut pre: Vec<Vec<usize>> = vec![Vec::new(); map.iter().max().map_or(0, |m| m + 1)];
    for (old, &new) in map.iter().enumerate() {
        pre[new].push(old);
    }
    let g = before.graph();
    let len = cycle.len();
    let mut out = Vec::new();
    for i in 0..len {
        let y = cycle[i];
        if pre[y].len() == 1 {
            out.push(pre[y][0]);
            continue;
        }
        // Only one vertex was merged, so the neighbours have one preimage.
        let a = pre[cycle[(i + len - 1) % len]][0];
        let b = pre[cycle[(i + 1) % len]][0];
        let (p, q) = (pre[y][0], pre[y][1]);
        if g.has_edge(p, a) && g.has_edge(p, b) {
            out.push(p);
        } else if g.has_edge(q, a) && g.has_edge(q, b) {
            out.push(q);
        } else if g.has_edge(p, a) {
            out.extend([p, q]);
        } else {
            out.extend([q, p]);
        }
    }
    out
}

fn largest_block(inst: &CliqueGridInstance) -> usize {
    biconnected_blocks(inst.graph()).iter().map(Vec::len).max().unwrap_or(0)
}

pub struct LoopOutcome {
    pub found: bool,
    /// Cycle in the input's vertex indices (with witnesses on).
    pub cycle: Option<Vec<usize>>,
    pub stats: SolveStats,
}

/// Near-k check, then contraction of the first same-cell pair, until a cycle
/// with `k..=2k` vertices turns up or no pair is left. `observe` sees every
/// instance the loop examines, the input first.
pub fn contraction_loop(
    inst: &CliqueGridInstance,
    k: usize,
    opts: &SolverOptions,
    observe: &mut dyn FnMut(&CliqueGridInstance),
) -> Result<LoopOutcome> {
    let mut stats = SolveStats::default();
    let mut history: Vec<(CliqueGridInstance, Vec<usize>)> = Vec::new();
    let mut cur = inst.clone();
    loop {
        observe(&cur);
        if largest_block(&cur) < k {
            return Ok(LoopOutcome { found: false, cycle: None, stats });
        }
        let near = solve_target(&cur, Target::cycle(k, 2 * k), opts)?;
        stats.absorb(&near.stats);
        if near.answer {
            let cycle = match near.witness {
                Some(Witness::Cycle(mut c)) => {
                    for (before, map) in history.iter().rev() {
                        c = lift_through_contraction(before, map, &c);
                    }
                    Some(c)
                }
                _ => None,
            };
            return Ok(LoopOutcome { found: true, cycle, stats });
        }
        let Some((u, v)) = cur.first_contractible_pair() else {
            return Ok(LoopOutcome { found: false, cycle: None, stats });
        };
        let (next, map) = contract_pair(&cur, u, v)?;
        stats.contractions += 1;
        history.push((cur, map));
        cur = next;
    }
}

fn solve_window(inst: &CliqueGridInstance, k: usize, opts: &SolverOptions) -> Result<LoopOutcome> {
    let nctd = solver_cell_nctd(inst, opts.td_budget);
    let out = cycle_tree_dp(&nctd.cells.graph, &nctd.nice, CycleMode::Single { min_len: k }, CycleCaps::default(), opts.witness);
    let mut stats = SolveStats { dp_states: out.stats.states, peak_states: out.stats.peak, ..SolveStats::default() };
    if out.found {
        stats.shortcut = Some("cell-graph".into());
        let cycle = out.cycles.first().map(|c| lift_cell_cycle(inst, &nctd.cells, c));
        return Ok(LoopOutcome { found: true, cycle, stats });
    }
    let mut res = contraction_loop(inst, k, opts, &mut |_| {})?;
    stats.absorb(&res.stats);
    res.stats = stats;
    Ok(res)
}

/// Is there a cycle on at least `k` vertices.
pub fn longest_cycle(inst: &CliqueGridInstance, k: usize, opts: &SolverOptions) -> Result<SolveResult> {
    if k < 3 {
        return Err(Error::Parameter(format!("cycle length {k} is below 3")));
    }
    let mut stats = SolveStats::default();
    if k > inst.n() {
        return Ok(SolveResult::no(stats));
    }
    let windows = match turing_kernel(inst, k, KernelProblem::LongestCycle) {
        KernelOutput::Shortcut(ShortcutReason::LargeCell(c)) => {
            stats.shortcut = Some("large-cell".into());
            return Ok(SolveResult::yes(Witness::Cycle(inst.cell_vertices(c).to_vec()), stats));
        }
        KernelOutput::Shortcut(ShortcutReason::Stretched(cycle)) => {
            stats.shortcut = Some("stretched".into());
            return Ok(SolveResult::yes(Witness::Cycle(cycle), stats));
        }
        KernelOutput::Windows(ws) => maximal_windows(ws, inst.n()),
    };
    stats.windows = windows.len();
    let agg = Mutex::new(SolveStats::default());
    let run = |w: &crate::kernel::KernelWindow| -> Result<Option<Option<Vec<usize>>>> {
        let out = solve_window(&w.instance, k, opts)?;
        agg.lock().unwrap().absorb(&out.stats);
        Ok(out.found.then(|| out.cycle.map(|c| c.iter().map(|&v| w.to_original[v]).collect())))
    };
    let hit = if opts.parallel {
        windows
            .par_iter()
            .map(run)
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            })
            .transpose()?
            .flatten()
    } else {
        let mut hit = None;
        for w in &windows {
            if let Some(h) = run(w)? {
                hit = Some(h);
                break;
            }
        }
        hit
    };
    let inner = agg.into_inner().unwrap();
    let windows_seen = stats.windows;
    stats.absorb(&inner);
    stats.windows = windows_seen;
    Ok(match hit {
        Some(cycle) => SolveResult { answer: true, witness: cycle.map(Witness::Cycle), stats },
        None => SolveResult::no(stats),
    })
}
