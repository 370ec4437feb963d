//! Cycles and paths of bounded length: the endpoint-profile DP over column
//! window path decompositions, the good family feeding it, and the kernelized
//! pipelines for Exact k-Cycle, Longest Path and the near-k check.

use std::collections::HashMap;
use std::rc::Rc;

use rayon::prelude::*;

use super::profiles::{endpoint_families, CELL_ENDPOINT_BUDGET};
use super::{SolveResult, SolveStats, SolverOptions};
use crate::cliquegrid::CliqueGridInstance;
use crate::decomp::{build_baker_ncpd, ceil_sqrt, column_label, verify_baker_ncpd, BakerNcpd, BakerStep};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::geometry::Cell;
use crate::kernel::{large_clique_cell, maximal_windows, turing_kernel, windows, KernelOutput, KernelProblem, ShortcutReason};
use crate::witness::Witness;

/// Endpoint-union cap per `⌈√k⌉`: 5 crossings × 24 neighbouring cells × 7 cells.
pub const ENDPOINT_CAP_FACTOR: usize = 840;
/// Connecting edges allowed at one introduce step.
pub const CONNECTING_EDGE_CAP: usize = 120;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Cycle,
    Path,
}

/// Accept a cycle (or path) with `lo ≤ |V| ≤ hi` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Target {
    pub lo: usize,
    pub hi: usize,
    pub shape: Shape,
}

impl Target {
    pub fn cycle(lo: usize, hi: usize) -> Self {
        Target { lo, hi, shape: Shape::Cycle }
    }

    pub fn path(k: usize) -> Self {
        Target { lo: k, hi: k, shape: Shape::Path }
    }
}

/// One step of a group-level path decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupStep {
    /// A clique of vertices entering together.
    Introduce(Vec<usize>),
    Forget(Vec<usize>),
}

pub fn baker_steps(inst: &CliqueGridInstance, ncpd: &BakerNcpd) -> Vec<GroupStep> {
    let mut steps = Vec::new();
    for bag in &ncpd.bags {
        match bag.step {
            BakerStep::IntroduceKept => {
                steps.extend(ncpd.kept.iter().map(|&y| GroupStep::Introduce(vec![y])));
            }
            BakerStep::Introduce(c) => steps.push(GroupStep::Introduce(inst.cell_vertices(c).to_vec())),
            BakerStep::Forget(c) => steps.push(GroupStep::Forget(inst.cell_vertices(c).to_vec())),
        }
    }
    steps
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    pub states: u64,
    pub peak: usize,
}

enum Item {
    Segments {
        group: Rc<Vec<usize>>,
        family: Vec<(usize, usize)>,
        r: usize,
    },
    Cross(usize, usize),
}

struct TraceNode {
    item: Item,
    parent: Trace,
}

type Trace = Option<Rc<TraceNode>>;

fn push(trace: &Trace, item: Item, on: bool) -> Trace {
    if on {
        Some(Rc::new(TraceNode { item, parent: trace.clone() }))
    } else {
        None
    }
}

/// Pieces are `(a, b)`, `a < b`, for an open path or `(a, a)` for a lone vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct PState {
    pieces: Vec<(u32, u32)>,
    edges: u16,
}

impl PState {
    fn vertices(&self) -> usize {
        self.edges as usize + self.pieces.len()
    }

    fn endpoint_count(&self) -> usize {
        self.pieces.iter().map(|(a, b)| if a == b { 1 } else { 2 }).sum()
    }

    fn find(&self, x: u32) -> Option<usize> {
        self.pieces.iter().position(|&(a, b)| a == x || b == x)
    }
}

enum EdgeOutcome {
    Merged(PState),
    Closed(usize),
    Invalid,
}

fn add_edge(st: &PState, x: u32, y: u32) -> EdgeOutcome {
    let (Some(px), Some(py)) = (st.find(x), st.find(y)) else {
        return EdgeOutcome::Invalid;
    };
    if px == py {
        let (a, b) = st.pieces[px];
        return if a != b && ((a, b) == (x, y) || (a, b) == (y, x)) {
            EdgeOutcome::Closed(st.edges as usize + 1)
        } else {
            EdgeOutcome::Invalid
        };
    }
    let other = |(a, b): (u32, u32), z: u32| if a == z { b } else { a };
    let ox = other(st.pieces[px], x);
    let oy = other(st.pieces[py], y);
    let mut pieces: Vec<(u32, u32)> = st
        .pieces
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != px && i != py)
        .map(|(_, &p)| p)
        .collect();
    pieces.push((ox.min(oy), ox.max(oy)));
    pieces.sort_unstable();
    EdgeOutcome::Merged(PState { pieces, edges: st.edges + 1 })
}

/// Pruning switches for the endpoint-profile DP.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProfileCaps {
    pub endpoint_cap: Option<usize>,
    pub connecting_cap: Option<usize>,
}

impl ProfileCaps {
    pub fn for_k(k: usize, prune: bool) -> Self {
        if prune {
            ProfileCaps {
                endpoint_cap: Some(ENDPOINT_CAP_FACTOR * ceil_sqrt(k).max(1)),
                connecting_cap: Some(CONNECTING_EDGE_CAP),
            }
        } else {
            ProfileCaps { endpoint_cap: None, connecting_cap: None }
        }
    }
}

/// Result of one DP run: the found cycle/path (vertex sequence) if any.
pub struct DpOutcome {
    pub found: Option<Vec<usize>>,
    pub stats: DpStats,
}

struct Found {
    trace: Trace,
    last: Option<(usize, usize)>,
}

/// Endpoint-profile DP over a group path decomposition of `g` (vertices not
/// introduced by any step are treated as deleted).
pub fn profile_dp(g: &SimpleGraph, steps: &[GroupStep], target: Target, caps: ProfileCaps, witness: bool) -> DpOutcome {
    let n = g.n();
    let mut intro = vec![usize::MAX; n];
    for (i, s) in steps.iter().enumerate() {
        if let GroupStep::Introduce(w) = s {
            for &v in w {
                intro[v] = i;
            }
        }
    }
    // Sorted introduce steps of each vertex's (non-deleted) neighbours.
    let nb_steps: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut s: Vec<usize> = g.neighbors(v).iter().map(|&w| intro[w]).filter(|&i| i != usize::MAX).collect();
            s.sort_unstable();
            s
        })
        .collect();
    let future = |v: u32, step: usize| -> usize {
        let s = &nb_steps[v as usize];
        s.len() - s.partition_point(|&i| i <= step)
    };
    let slots = |(a, b): (u32, u32)| if a == b { 2 } else { 1 };
    let alive = |st: &PState, step: usize| -> bool {
        let mut deficit = 0;
        for &(a, b) in &st.pieces {
            let s = slots((a, b));
            deficit += s - s.min(future(a, step));
            if a != b {
                deficit += 1 - 1.min(future(b, step));
            }
        }
        match target.shape {
            Shape::Cycle => deficit == 0,
            Shape::Path => deficit <= 2,
        }
    };

    let mut stats = DpStats::default();
    let mut table: HashMap<PState, Trace> = HashMap::new();
    table.insert(PState { pieces: Vec::new(), edges: 0 }, None);
    let mut found: Option<Found> = None;

    'steps: for (si, step) in steps.iter().enumerate() {
        match step {
            GroupStep::Forget(w) => {
                if target.shape == Shape::Cycle {
                    table.retain(|st, _| {
                        !st.pieces.iter().any(|&(a, b)| w.contains(&(a as usize)) || w.contains(&(b as usize)))
                    });
                }
            }
            GroupStep::Introduce(w) => {
                let need = match target.shape {
                    Shape::Cycle => target.lo.max(3),
                    Shape::Path => target.lo.max(1),
                };
                if w.len() >= need && need <= target.hi {
                    let seq = w[..need].to_vec();
                    return DpOutcome { found: Some(seq), stats };
                }
                let group = Rc::new(w.clone());
                let fams = endpoint_families(w, CELL_ENDPOINT_BUDGET.min(w.len()));
                let mut next: HashMap<PState, Trace> = HashMap::new();
                for (st, trace) in &table {
                    let used = st.vertices();
                    let old_ends: Vec<u32> = st
                        .pieces
                        .iter()
                        .flat_map(|&(a, b)| if a == b { vec![a] } else { vec![a, b] })
                        .collect();
                    for fam in &fams {
                        let pairs = fam.iter().filter(|(a, b)| a != b).count();
                        let named: usize = fam.iter().map(|(a, b)| if a == b { 1 } else { 2 }).sum();
                        let free = w.len() - named;
                        if used + pairs + fam.len() > target.hi {
                            continue;
                        }
                        if let Some(cap) = caps.endpoint_cap {
                            if st.endpoint_count() + named > cap {
                                continue;
                            }
                        }
                        let mut cands = Vec::new();
                        let mut hopeless = false;
                        for &(a, b) in fam {
                            let s = if a == b { 2 } else { 1 };
                            for x in if a == b { vec![a] } else { vec![a, b] } {
                                let mut adj_old = 0;
                                for &y in &old_ends {
                                    if g.has_edge(x, y as usize) {
                                        cands.push((x as u32, y));
                                        adj_old += 1;
                                    }
                                }
                                if s > adj_old + future(x as u32, si) && target.shape == Shape::Cycle {
                                    hopeless = true;
                                }
                            }
                        }
                        if hopeless {
                            continue;
                        }
                        let r_max = if pairs > 0 { pairs + free } else { 0 };
                        for r in pairs..=r_max {
                            if used + r + fam.len() > target.hi {
                                break;
                            }
                            let mut pieces = st.pieces.clone();
                            pieces.extend(fam.iter().map(|&(a, b)| (a as u32, b as u32)));
                            pieces.sort_unstable();
                            let base = PState { pieces, edges: st.edges + r as u16 };
                            let base_trace = push(
                                trace,
                                Item::Segments { group: group.clone(), family: fam.clone(), r },
                                witness,
                            );
                            // Connecting edges one at a time: skip or use.
                            let mut layer: Vec<(PState, Trace, usize)> = vec![(base, base_trace, 0)];
                            for &(x, y) in &cands {
                                let mut grown = Vec::new();
                                for (s, t, e) in &layer {
                                    if caps.connecting_cap.is_some_and(|c| *e >= c) {
                                        continue;
                                    }
                                    match add_edge(s, x, y) {
                                        EdgeOutcome::Merged(m) => {
                                            let t2 = push(t, Item::Cross(x as usize, y as usize), witness);
                                            grown.push((m, t2, e + 1));
                                        }
                                        EdgeOutcome::Closed(len) => {
                                            if target.shape == Shape::Cycle
                                                && s.pieces.len() == 1
                                                && len >= target.lo
                                                && len <= target.hi
                                            {
                                                found = Some(Found { trace: t.clone(), last: Some((x as usize, y as usize)) });
                                                break 'steps;
                                            }
                                        }
                                        EdgeOutcome::Invalid => {}
                                    }
                                }
                                layer.extend(grown);
                                let mut seen = std::collections::HashSet::new();
                                layer.retain(|(s, _, _)| seen.insert(s.clone()));
                            }
                            for (s, t, _) in layer {
                                if target.shape == Shape::Path
                                    && s.pieces.len() == 1
                                    && s.vertices() >= target.lo
                                {
                                    found = Some(Found { trace: t, last: None });
                                    break 'steps;
                                }
                                if alive(&s, si) && !next.contains_key(&s) {
                                    stats.states += 1;
                                    next.insert(s, t);
                                }
                            }
                        }
                    }
                }
                table = next;
                stats.peak = stats.peak.max(table.len());
            }
        }
    }
    let Some(f) = found else {
        return DpOutcome { found: None, stats };
    };
    let seq = if witness {
        Some(rebuild(&f, target.shape))
    } else {
        Some(Vec::new())
    };
    DpOutcome { found: seq, stats }
}

/// Turns a trace into a vertex sequence: segment interiors are filled from
/// unnamed vertices of their cell, then the edges are walked.
fn rebuild(f: &Found, shape: Shape) -> Vec<usize> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut vertices: Vec<usize> = Vec::new();
    if let Some(e) = f.last {
        edges.push(e);
    }
    let mut cur = f.trace.clone();
    while let Some(node) = cur {
        match &node.item {
            Item::Cross(x, y) => edges.push((*x, *y)),
            Item::Segments { group, family, r } => {
                let named: Vec<usize> = family.iter().flat_map(|&(a, b)| [a, b]).collect();
                let mut spare = group.iter().copied().filter(|v| !named.contains(v));
                let pairs = family.iter().filter(|(a, b)| a != b).count();
                let mut extra = r - pairs;
                for &(a, b) in family {
                    vertices.push(a);
                    if a == b {
                        continue;
                    }
                    let mut prev = a;
                    while extra > 0 {
                        let m = spare.next().expect("feasible profile has spare vertices");
                        vertices.push(m);
                        edges.push((prev, m));
                        prev = m;
                        extra -= 1;
                    }
                    edges.push((prev, b));
                    vertices.push(b);
                }
            }
        }
        cur = node.parent.clone();
    }
    vertices.sort_unstable();
    vertices.dedup();
    let mut adj: HashMap<usize, Vec<usize>> = vertices.iter().map(|&v| (v, Vec::new())).collect();
    for &(a, b) in &edges {
        adj.get_mut(&a).unwrap().push(b);
        adj.get_mut(&b).unwrap().push(a);
    }
    let start = match shape {
        Shape::Cycle => vertices[0],
        Shape::Path => *vertices.iter().find(|v| adj[v].len() <= 1).unwrap(),
    };
    let mut seq = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let nxt = adj[&cur].iter().copied().find(|&w| w != prev && !(seq.len() > 1 && w == start));
        match nxt {
            Some(w) if !seq.contains(&w) => {
                seq.push(w);
                prev = cur;
                cur = w;
            }
            _ => break,
        }
    }
    seq
}

/// One member of the good family: delete `deleted`, keep `kept`, both from the
/// columns carrying `label`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub label: usize,
    pub deleted: Vec<usize>,
    pub kept: Vec<usize>,
}

fn subsets_up_to(items: &[usize], max: usize, exact: bool, out: &mut Vec<Vec<usize>>) {
    fn rec(items: &[usize], from: usize, max: usize, cur: &mut Vec<usize>, exact: bool, out: &mut Vec<Vec<usize>>) {
        if !exact || cur.len() == max {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in from..items.len() {
            cur.push(items[i]);
            rec(items, i + 1, max, cur, exact, out);
            cur.pop();
        }
    }
    rec(items, 0, max, &mut Vec::new(), exact, out);
}

/// The good family for pattern size `k`: for every label `ℓ < ⌈√k⌉` and every
/// `Y` of at most `⌈√k⌉` label-`ℓ` vertices, delete the rest of label `ℓ`.
/// With `maximal_only`, only the largest possible `Y` are listed; any cycle
/// kept by a smaller `Y` survives in some maximal one.
pub fn good_family(inst: &CliqueGridInstance, k: usize, maximal_only: bool) -> Result<Vec<FamilyMember>> {
    if let Some(c) = inst.cells().iter().find(|(_, vs)| vs.len() >= k.max(1)) {
        return Err(Error::Parameter(format!(
            "cell ({}, {}) holds {} ≥ k vertices",
            c.0.row,
            c.0.col,
            c.1.len()
        )));
    }
    let labels = ceil_sqrt(k).max(1);
    let mut out = Vec::new();
    for label in 0..labels {
        let lv: Vec<usize> = (0..inst.n())
            .filter(|&v| column_label(inst.cell_of(v).col, labels) == label)
            .collect();
        let mut ys = Vec::new();
        let max = labels.min(lv.len());
        subsets_up_to(&lv, max, maximal_only, &mut ys);
        for kept in ys {
            let deleted = lv.iter().copied().filter(|v| !kept.contains(v)).collect();
            out.push(FamilyMember { label, deleted, kept });
        }
    }
    Ok(out)
}

fn binom(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `⌈√k⌉ · Σ_{i ≤ ⌈√k⌉} C(m_ℓ, i)` maximised over labels.
pub fn good_family_size_bound(inst: &CliqueGridInstance, k: usize) -> u128 {
    let labels = ceil_sqrt(k).max(1);
    let m = (0..labels)
        .map(|l| (0..inst.n()).filter(|&v| column_label(inst.cell_of(v).col, labels) == l).count())
        .max()
        .unwrap_or(0);
    labels as u128 * (0..=labels).map(|i| binom(m, i)).sum::<u128>()
}

/// DP for one family member, after checking its decomposition.
pub fn dp_exact_cycle(
    inst: &CliqueGridInstance,
    member: &FamilyMember,
    ncpd: &BakerNcpd,
    k: usize,
    opts: &SolverOptions,
) -> Result<DpOutcome> {
    if !verify_baker_ncpd(inst, &member.deleted, ncpd, k) {
        return Err(Error::Structure("column-window decomposition is invalid".into()));
    }
    let steps = baker_steps(inst, ncpd);
    Ok(profile_dp(inst.graph(), &steps, Target::cycle(k, k), ProfileCaps::for_k(k, opts.prune), opts.witness))
}

/// Kernel, good family and profile DP for a cycle/path with `lo..=hi` vertices.
pub fn solve_target(inst: &CliqueGridInstance, target: Target, opts: &SolverOptions) -> Result<SolveResult> {
    let mut stats = SolveStats::default();
    let (lo, hi) = (target.lo, target.hi);
    let need = if target.shape == Shape::Cycle { lo.max(3) } else { lo.max(1) };
    if need > hi || need > inst.n() {
        return Ok(SolveResult::no(stats));
    }
    let windows = if hi == need {
        match turing_kernel(inst, need, KernelProblem::SubgraphIsomorphism) {
            KernelOutput::Shortcut(ShortcutReason::LargeCell(c)) => return Ok(large_cell_hit(inst, c, need, target.shape, stats)),
            KernelOutput::Shortcut(ShortcutReason::Stretched(_)) => unreachable!("only raised for longest cycle"),
            KernelOutput::Windows(ws) => ws,
        }
    } else {
        // A range target: shortcut on the smallest size, windows for the largest.
        if let Some(c) = large_clique_cell(inst, need) {
            return Ok(large_cell_hit(inst, c, need, target.shape, stats));
        }
        windows(inst, hi)
    };
    let windows = maximal_windows(windows, inst.n());
    stats.windows = windows.len();
    let mut work = Vec::new();
    for (wi, w) in windows.iter().enumerate() {
        for m in good_family(&w.instance, hi, opts.maximal_kept_only)? {
            work.push((wi, m));
        }
    }
    stats.members = work.len();
    let caps = ProfileCaps::for_k(hi, opts.prune);
    let run = |(wi, m): &(usize, FamilyMember)| -> Option<(Option<Vec<usize>>, DpStats)> {
        let w = &windows[*wi];
        let ncpd = build_baker_ncpd(&w.instance, &m.deleted, &m.kept, hi).expect("family member is a label split");
        let steps = baker_steps(&w.instance, &ncpd);
        let out = profile_dp(w.instance.graph(), &steps, target, caps, opts.witness);
        Some((out.found.map(|seq| seq.iter().map(|&v| w.to_original[v]).collect()), out.stats))
    };
    let results: Vec<(Option<Vec<usize>>, DpStats)> = if opts.parallel {
        // Deterministic: the first hit in work order wins.
        let hit = work.par_iter().enumerate().find_map_first(|(i, item)| {
            let (f, s) = run(item).unwrap();
            f.map(|seq| (i, seq, s))
        });
        match hit {
            Some((_, seq, s)) => vec![(Some(seq), s)],
            None => vec![],
        }
    } else {
        let mut out = Vec::new();
        for item in &work {
            let r = run(item).unwrap();
            let hit = r.0.is_some();
            out.push(r);
            if hit {
                break;
            }
        }
        out
    };
    for (_, s) in &results {
        stats.dp_states += s.states;
        stats.peak_states = stats.peak_states.max(s.peak);
    }
    match results.into_iter().find_map(|(f, _)| f) {
        Some(seq) => {
            let w = if opts.witness { Some(wrap(target.shape, seq)) } else { None };
            Ok(SolveResult { answer: true, witness: w, stats })
        }
        None => Ok(SolveResult::no(stats)),
    }
}

fn large_cell_hit(inst: &CliqueGridInstance, c: Cell, need: usize, shape: Shape, mut stats: SolveStats) -> SolveResult {
    stats.shortcut = Some("large-cell".into());
    SolveResult::yes(wrap(shape, inst.cell_vertices(c)[..need].to_vec()), stats)
}

fn wrap(shape: Shape, seq: Vec<usize>) -> Witness {
    match shape {
        Shape::Cycle => Witness::Cycle(seq),
        Shape::Path => Witness::Path(seq),
    }
}
