//! Feedback Vertex Set through its complement, a maximum induced forest,
//! computed over a cell-level nice tree decomposition. A state keeps the
//! chosen bag vertices and which of them are already joined in the partial
//! forest.

use std::collections::HashMap;
use std::rc::Rc;

use crate::cliquegrid::CliqueGridInstance;
use crate::cycles::{SolveResult, SolveStats, SolverOptions};
use crate::decomp::{solver_cell_nctd, verify_cell_nctd, CellNctd, NiceKind};
use crate::error::{Error, Result};
use crate::graph::UnionFind;
use crate::kernel::large_clique_cell;
use crate::witness::Witness;

/// Chosen bag vertices (sorted) and their block labels, labels numbered by
/// first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct FState {
    chosen: Vec<usize>,
    block: Vec<u8>,
}

enum Tr {
    Pick(Vec<usize>, Trace),
    Join(Trace, Trace),
}

type Trace = Option<Rc<Tr>>;

type Table = HashMap<FState, (usize, Trace)>;

fn canonical(chosen: Vec<usize>, raw: Vec<usize>) -> FState {
    let mut names: Vec<usize> = Vec::new();
    let block = raw
        .iter()
        .map(|r| match names.iter().position(|x| x == r) {
            Some(i) => i as u8,
            None => {
                names.push(*r);
                (names.len() - 1) as u8
            }
        })
        .collect();
    FState { chosen, block }
}

fn offer(table: &mut Table, st: FState, val: usize, trace: Trace) {
    match table.get(&st) {
        Some((v, _)) if *v >= val => {}
        _ => {
            table.insert(st, (val, trace));
        }
    }
}

fn subsets(cell: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &v in cell {
        let grown: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.len() < max)
            .map(|s| {
                let mut t = s.clone();
                t.push(v);
                t
            })
            .collect();
        out.extend(grown);
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MifOutcome {
    pub size: usize,
    /// Vertices of one maximum induced forest (with witnesses on).
    pub forest: Option<Vec<usize>>,
    pub states: u64,
    pub peak: usize,
}

/// Maximum induced forest. With `prune`, at most two vertices per cell and
/// `2 ×` cells-per-bag per bag are ever chosen (a forest has no triangle, so
/// no answer is lost).
pub fn mif_dp(inst: &CliqueGridInstance, nctd: &CellNctd, prune: bool, witness: bool) -> Result<MifOutcome> {
    if !verify_cell_nctd(inst, nctd) {
        return Err(Error::Structure("cell-level decomposition is invalid".into()));
    }
    let g = inst.graph();
    let bag_cap = 2 * nctd.cells_per_bag();
    let mut out = MifOutcome::default();
    let mut tables: Vec<Option<Table>> = vec![None; nctd.nice.nodes.len()];
    for (x, node) in nctd.nice.nodes.iter().enumerate() {
        let table: Table = match node.kind {
            NiceKind::Leaf => {
                let mut t = Table::new();
                t.insert(FState { chosen: Vec::new(), block: Vec::new() }, (0, None));
                t
            }
            NiceKind::Introduce(c) => {
                let child = tables[node.children[0]].take().unwrap();
                let cell = inst.cell_vertices(nctd.cells.cells[c]);
                let picks = subsets(cell, if prune { 2 } else { cell.len() });
                let mut t = Table::new();
                for (st, (val, tr)) in &child {
                    for pick in &picks {
                        if prune && st.chosen.len() + pick.len() > bag_cap {
                            continue;
                        }
                        let fresh = st.block.len() + 1;
                        let mut pairs: Vec<(usize, usize)> =
                            st.chosen.iter().copied().zip(st.block.iter().map(|&b| b as usize)).collect();
                        pairs.extend(pick.iter().enumerate().map(|(i, &v)| (v, fresh + i)));
                        pairs.sort_unstable();
                        let (chosen, raw): (Vec<usize>, Vec<usize>) = pairs.into_iter().unzip();
                        let trace = if witness && !pick.is_empty() {
                            Some(Rc::new(Tr::Pick(pick.clone(), tr.clone())))
                        } else {
                            tr.clone()
                        };
                        offer(&mut t, canonical(chosen, raw), val + pick.len(), trace);
                    }
                }
                t
            }
            NiceKind::Forget(c) => {
                let child = tables[node.children[0]].take().unwrap();
                let cell = nctd.cells.cells[c];
                let mut t = Table::new();
                'states: for (st, (val, tr)) in child {
                    let m = st.chosen.len();
                    let mut uf = UnionFind::new(m + st.block.iter().map(|&b| b as usize + 1).max().unwrap_or(0));
                    for i in 0..m {
                        uf.union(i, m + st.block[i] as usize);
                    }
                    for i in 0..m {
                        let a = st.chosen[i];
                        if inst.cell_of(a) != cell {
                            continue;
                        }
                        for j in 0..m {
                            let b = st.chosen[j];
                            let both_gone = inst.cell_of(b) == cell;
                            if j == i || (both_gone && j < i) || !g.has_edge(a, b) {
                                continue;
                            }
                            if !uf.union(i, j) {
                                continue 'states;
                            }
                        }
                    }
                    let mut chosen = Vec::new();
                    let mut raw = Vec::new();
                    for i in 0..m {
                        if inst.cell_of(st.chosen[i]) != cell {
                            chosen.push(st.chosen[i]);
                            raw.push(uf.find(i));
                        }
                    }
                    offer(&mut t, canonical(chosen, raw), val, tr);
                }
                t
            }
            NiceKind::Join => {
                let left = tables[node.children[0]].take().unwrap();
                let right = tables[node.children[1]].take().unwrap();
                let mut by_set: HashMap<&[usize], Vec<(&FState, &(usize, Trace))>> = HashMap::new();
                for (st, e) in &right {
                    by_set.entry(&st.chosen).or_default().push((st, e));
                }
                let mut t = Table::new();
                for (ls, (lv, lt)) in &left {
                    let Some(partners) = by_set.get(ls.chosen.as_slice()) else { continue };
                    let m = ls.chosen.len();
                    'pairs: for &(rs, (rv, rt)) in partners {
                        let mut uf = UnionFind::new(m);
                        for side in [&ls.block, &rs.block] {
                            let mut first: HashMap<u8, usize> = HashMap::new();
                            for (i, &b) in side.iter().enumerate() {
                                if let Some(&f) = first.get(&b) {
                                    if !uf.union(f, i) {
                                        continue 'pairs;
                                    }
                                } else {
                                    first.insert(b, i);
                                }
                            }
                        }
                        let raw: Vec<usize> = (0..m).map(|i| uf.find(i)).collect();
                        let trace = if witness {
                            Some(Rc::new(Tr::Join(lt.clone(), rt.clone())))
                        } else {
                            None
                        };
                        offer(&mut t, canonical(ls.chosen.clone(), raw), lv + rv - m, trace);
                    }
                }
                t
            }
        };
        out.states += table.len() as u64;
        out.peak = out.peak.max(table.len());
        tables[x] = Some(table);
    }
    let root = tables[nctd.nice.root()].take().unwrap();
    let (size, trace) = root.into_values().max_by_key(|(v, _)| *v).unwrap_or((0, None));
    out.size = size;
    if witness {
        let mut forest = Vec::new();
        let mut stack = vec![trace];
        while let Some(t) = stack.pop() {
            match t.as_deref() {
                Some(Tr::Pick(vs, p)) => {
                    forest.extend(vs);
                    stack.push(p.clone());
                }
                Some(Tr::Join(l, r)) => {
                    stack.push(l.clone());
                    stack.push(r.clone());
                }
                None => {}
            }
        }
        forest.sort_unstable();
        forest.dedup();
        out.forest = Some(forest);
    }
    Ok(out)
}

/// Is there a feedback vertex set of at most `k` vertices.
pub fn fvs(inst: &CliqueGridInstance, k: usize, opts: &SolverOptions) -> Result<SolveResult> {
    let mut stats = SolveStats::default();
    if large_clique_cell(inst, k + 3).is_some() {
        // A clique on k + 3 vertices needs k + 1 deletions.
        stats.shortcut = Some("large-cell".into());
        return Ok(SolveResult::no(stats));
    }
    let nctd = solver_cell_nctd(inst, opts.td_budget);
    let mif = mif_dp(inst, &nctd, opts.prune, opts.witness)?;
    stats.dp_states = mif.states;
    stats.peak_states = mif.peak;
    let n = inst.n();
    if mif.size + k < n {
        return Ok(SolveResult::no(stats));
    }
    let witness = mif.forest.map(|f| {
        let mut keep = vec![false; n];
        for v in f {
            keep[v] = true;
        }
        Witness::VertexSet((0..n).filter(|&v| !keep[v]).collect())
    });
    Ok(SolveResult { answer: true, witness, stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Cell, Representation};
    use crate::graph::SimpleGraph;

    fn inst(g: SimpleGraph, cells: &[(usize, usize)]) -> CliqueGridInstance {
        let rep = Representation::fitted(cells.iter().map(|&(r, c)| Cell::new(r, c)).collect());
        CliqueGridInstance::new(g, rep).unwrap()
    }

    #[test]
    fn triangle_keeps_two() {
        let i = inst(SimpleGraph::complete(3), &[(1, 1), (1, 1), (1, 1)]);
        let nctd = solver_cell_nctd(&i, 1000);
        assert_eq!(mif_dp(&i, &nctd, true, true).unwrap().size, 2);
        assert_eq!(mif_dp(&i, &nctd, false, true).unwrap().size, 2);
    }

    #[test]
    fn cycle_across_cells() {
        // C6 threaded through six cells around a 2 × 3 block.
        let i = inst(SimpleGraph::cycle(6), &[(1, 1), (1, 2), (1, 3), (2, 3), (2, 2), (2, 1)]);
        let nctd = solver_cell_nctd(&i, 1000);
        let out = mif_dp(&i, &nctd, true, true).unwrap();
        assert_eq!(out.size, 5);
        assert_eq!(out.forest.unwrap().len(), 5);
        let opts = SolverOptions::default();
        assert!(fvs(&i, 1, &opts).unwrap().answer);
        assert!(!fvs(&i, 0, &opts).unwrap().answer);
    }
}
