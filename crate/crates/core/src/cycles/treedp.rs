//! Cycle DP over nice tree decompositions: one long cycle, or many disjoint
//! cycles. Each bag vertex is out of the solution, chosen with degree 0,
//! chosen with degree 2, or an open path end that knows its partner end.
//! Edges are decided at the forget node of whichever endpoint leaves first.

use std::collections::HashMap;
use std::rc::Rc;

use crate::decomp::{CellNctd, NiceKind, NiceNode, NiceTreeDecomposition};
use crate::cliquegrid::CliqueGridInstance;
use crate::graph::SimpleGraph;

const OUT: u32 = u32::MAX;
const ISO: u32 = u32::MAX - 1;
const FULL: u32 = u32::MAX - 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleMode {
    /// One cycle on at least `min_len` vertices.
    Single { min_len: usize },
    /// `k` vertex-disjoint cycles.
    Packing { k: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CycleCaps {
    /// Most chosen vertices in one bag.
    pub chosen: Option<usize>,
    /// Most open endpoints (degree 0 or 1) in one bag.
    pub endpoints: Option<usize>,
}

/// `status[i]` belongs to the i-th vertex of the (sorted) bag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CState {
    status: Vec<u32>,
    count: u16,
}

enum TraceNode {
    Edge(usize, usize, Trace),
    Join(Trace, Trace),
}

type Trace = Option<Rc<TraceNode>>;

fn collect(trace: &Trace, out: &mut Vec<(usize, usize)>) {
    let mut stack = vec![trace.clone()];
    while let Some(t) = stack.pop() {
        if let Some(node) = t {
            match &*node {
                TraceNode::Edge(a, b, p) => {
                    out.push((*a, *b));
                    stack.push(p.clone());
                }
                TraceNode::Join(l, r) => {
                    stack.push(l.clone());
                    stack.push(r.clone());
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TreeDpStats {
    pub states: u64,
    pub peak: usize,
}

pub struct TreeDpOutcome {
    /// Cycles found (vertex sequences); empty with `found` set when witnesses
    /// were not requested.
    pub cycles: Vec<Vec<usize>>,
    pub found: bool,
    pub stats: TreeDpStats,
}

struct Engine<'a> {
    g: &'a SimpleGraph,
    mode: CycleMode,
    caps: CycleCaps,
    witness: bool,
    cap_count: u16,
}

enum Step {
    Keep(CState, Trace),
    Done(Trace),
    Drop,
}

impl Engine<'_> {
    fn within_caps(&self, st: &CState) -> bool {
        if let Some(c) = self.caps.chosen {
            if st.status.iter().filter(|&&s| s != OUT).count() > c {
                return false;
            }
        }
        if let Some(c) = self.caps.endpoints {
            if st.status.iter().filter(|&&s| s != OUT && s != FULL).count() > c {
                return false;
            }
        }
        true
    }

    fn open_pieces(st: &CState) -> usize {
        st.status.iter().filter(|&&s| s != OUT && s != FULL).count()
    }

    /// Uses edge (bag positions `i`, `j`) in `st`.
    fn use_edge(&self, bag: &[usize], st: &CState, i: usize, j: usize, trace: &Trace) -> Step {
        let (si, sj) = (st.status[i], st.status[j]);
        if si == OUT || si == FULL || sj == OUT || sj == FULL {
            return Step::Drop;
        }
        let (vi, vj) = (bag[i] as u32, bag[j] as u32);
        let t = if self.witness {
            Some(Rc::new(TraceNode::Edge(bag[i], bag[j], trace.clone())))
        } else {
            None
        };
        let pos = |v: u32| bag.binary_search(&(v as usize)).expect("partner in bag");
        let mut next = st.clone();
        if si == vj && sj == vi {
            // Closes the path between i and j into a cycle.
            next.status[i] = FULL;
            next.status[j] = FULL;
            return match self.mode {
                CycleMode::Single { min_len } => {
                    if Self::open_pieces(&next) == 0 && st.count as usize >= min_len {
                        Step::Done(t)
                    } else {
                        Step::Drop
                    }
                }
                CycleMode::Packing { .. } => {
                    next.count = (next.count + 1).min(self.cap_count);
                    Step::Keep(next, t)
                }
            };
        }
        let end_i = if si == ISO { vi } else { si };
        let end_j = if sj == ISO { vj } else { sj };
        next.status[i] = if si == ISO { vj } else { FULL };
        next.status[j] = if sj == ISO { vi } else { FULL };
        if si == ISO && sj == ISO {
            // New path i–j.
        } else {
            // The far ends of the two merged pieces become partners.
            let (a, b) = (if si == ISO { vi } else { end_i }, if sj == ISO { vj } else { end_j });
            if si != ISO {
                next.status[pos(a)] = b;
            } else {
                next.status[i] = b;
            }
            if sj != ISO {
                next.status[pos(b)] = a;
            } else {
                next.status[j] = a;
            }
        }
        Step::Keep(next, t)
    }

    fn introduce(&self, table: HashMap<CState, Trace>, bag: &[usize], v: usize) -> HashMap<CState, Trace> {
        let at = bag.binary_search(&v).unwrap();
        let mut out = HashMap::with_capacity(table.len() * 2);
        for (st, t) in table {
            for chosen in [false, true] {
                let mut s = st.clone();
                s.status.insert(at, if chosen { ISO } else { OUT });
                if chosen {
                    if let CycleMode::Single { .. } = self.mode {
                        s.count = (s.count + 1).min(self.cap_count);
                    }
                }
                if self.within_caps(&s) {
                    out.entry(s).or_insert_with(|| t.clone());
                }
            }
        }
        out
    }

    /// Decides the edges from `v` to the rest of the child bag, then drops `v`.
    fn forget(
        &self,
        table: HashMap<CState, Trace>,
        child_bag: &[usize],
        v: usize,
    ) -> Result<HashMap<CState, Trace>, Trace> {
        let p = child_bag.binary_search(&v).unwrap();
        let nbrs: Vec<usize> = (0..child_bag.len())
            .filter(|&j| j != p && self.g.has_edge(v, child_bag[j]))
            .collect();
        let mut layer: HashMap<CState, Trace> = table;
        for j in nbrs {
            let mut grown: Vec<(CState, Trace)> = Vec::new();
            for (st, t) in &layer {
                match self.use_edge(child_bag, st, p, j, t) {
                    Step::Keep(s, t2) => grown.push((s, t2)),
                    Step::Done(t2) => return Err(t2),
                    Step::Drop => {}
                }
            }
            for (s, t) in grown {
                layer.entry(s).or_insert(t);
            }
        }
        let mut out = HashMap::with_capacity(layer.len());
        for (mut st, t) in layer {
            let s = st.status[p];
            if s != OUT && s != FULL {
                continue;
            }
            st.status.remove(p);
            out.entry(st).or_insert(t);
        }
        Ok(out)
    }

    fn join(
        &self,
        left: &HashMap<CState, Trace>,
        right: &HashMap<CState, Trace>,
        bag: &[usize],
    ) -> Result<HashMap<CState, Trace>, Trace> {
        let member = |st: &CState| st.status.iter().map(|&s| s != OUT).collect::<Vec<bool>>();
        let mut by_mask: HashMap<Vec<bool>, Vec<(&CState, &Trace)>> = HashMap::new();
        for (st, t) in right {
            by_mask.entry(member(st)).or_default().push((st, t));
        }
        let deg = |s: u32| match s {
            ISO => 0,
            FULL => 2,
            _ => 1,
        };
        let mut out: HashMap<CState, Trace> = HashMap::new();
        let m = bag.len();
        for (ls, lt) in left {
            let Some(partners) = by_mask.get(&member(ls)) else { continue };
            for &(rs, rt) in partners {
                let mut degree = vec![0u8; m];
                let mut ok = true;
                let mut shared = 0u16;
                for i in 0..m {
                    if ls.status[i] == OUT {
                        continue;
                    }
                    shared += 1;
                    let d = deg(ls.status[i]) + deg(rs.status[i]);
                    if d > 2 {
                        ok = false;
                        break;
                    }
                    degree[i] = d;
                }
                if !ok {
                    continue;
                }
                // Virtual links: each open piece on either side joins its ends.
                let mut links: Vec<Vec<usize>> = vec![Vec::new(); m];
                for st in [ls, rs] {
                    for i in 0..m {
                        let s = st.status[i];
                        if s != OUT && s != ISO && s != FULL {
                            let j = bag.binary_search(&(s as usize)).unwrap();
                            if i < j {
                                links[i].push(j);
                                links[j].push(i);
                            }
                        }
                    }
                }
                let mut status = vec![OUT; m];
                let mut seen = vec![false; m];
                let mut closed = 0u16;
                for i in 0..m {
                    if ls.status[i] == OUT || seen[i] {
                        continue;
                    }
                    if degree[i] == 0 {
                        status[i] = ISO;
                        seen[i] = true;
                        continue;
                    }
                    if links[i].is_empty() {
                        status[i] = FULL;
                        seen[i] = true;
                        continue;
                    }
                    if links[i].len() == 1 {
                        // Walk to the other end of this merged piece.
                        let mut prev = i;
                        let mut cur = links[i][0];
                        seen[i] = true;
                        while links[cur].len() == 2 {
                            seen[cur] = true;
                            status[cur] = FULL;
                            let nxt = if links[cur][0] == prev { links[cur][1] } else { links[cur][0] };
                            prev = cur;
                            cur = nxt;
                        }
                        seen[cur] = true;
                        status[i] = bag[cur] as u32;
                        status[cur] = bag[i] as u32;
                    }
                }
                // Whatever is left unseen with links lies on closed loops.
                for i in 0..m {
                    if !seen[i] && ls.status[i] != OUT {
                        closed += 1;
                        let mut cur = i;
                        let mut prev = usize::MAX;
                        loop {
                            seen[cur] = true;
                            status[cur] = FULL;
                            let nxt = if links[cur][0] != prev || links[cur].len() == 1 {
                                links[cur][0]
                            } else {
                                links[cur][1]
                            };
                            prev = cur;
                            cur = nxt;
                            if seen[cur] {
                                break;
                            }
                        }
                    }
                }
                let trace = if self.witness {
                    Some(Rc::new(TraceNode::Join(lt.clone(), rt.clone())))
                } else {
                    None
                };
                let total = ls.count + rs.count;
                let count = match self.mode {
                    CycleMode::Single { .. } => {
                        if ls.count == self.cap_count || rs.count == self.cap_count {
                            self.cap_count
                        } else {
                            (total - shared).min(self.cap_count)
                        }
                    }
                    CycleMode::Packing { .. } => (total + closed).min(self.cap_count),
                };
                let st = CState { status, count };
                if let CycleMode::Single { min_len } = self.mode {
                    if closed > 0 {
                        if closed == 1 && Self::open_pieces(&st) == 0 && count as usize >= min_len {
                            return Err(trace);
                        }
                        continue;
                    }
                }
                if self.within_caps(&st) {
                    out.entry(st).or_insert(trace);
                }
            }
        }
        Ok(out)
    }
}

fn cycles_from_edges(edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut verts: Vec<usize> = adj.keys().copied().collect();
    verts.sort_unstable();
    let mut seen: std::collections::HashSet<usize> = Default::default();
    let mut cycles = Vec::new();
    for &s in &verts {
        if seen.contains(&s) {
            continue;
        }
        // Component walk; keep it only if every vertex has degree 2.
        let mut comp = vec![s];
        let mut stack = vec![s];
        seen.insert(s);
        while let Some(x) = stack.pop() {
            for &y in &adj[&x] {
                if seen.insert(y) {
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        if comp.iter().any(|v| adj[v].len() != 2) {
            continue;
        }
        let mut cyc = vec![s];
        let mut prev = s;
        let mut cur = adj[&s][0];
        while cur != s {
            cyc.push(cur);
            let nxt = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
            prev = cur;
            cur = nxt;
        }
        cycles.push(cyc);
    }
    cycles
}

/// Runs the cycle DP bottom-up over `nice` (a nice decomposition of `g`).
pub fn cycle_tree_dp(
    g: &SimpleGraph,
    nice: &NiceTreeDecomposition,
    mode: CycleMode,
    caps: CycleCaps,
    witness: bool,
) -> TreeDpOutcome {
    let cap_count = match mode {
        CycleMode::Single { min_len } => min_len,
        CycleMode::Packing { k } => k,
    } as u16;
    let eng = Engine { g, mode, caps, witness, cap_count };
    let mut stats = TreeDpStats::default();
    let finish = |trace: Trace, stats: TreeDpStats| {
        let mut edges = Vec::new();
        collect(&trace, &mut edges);
        TreeDpOutcome { cycles: cycles_from_edges(&edges), found: true, stats }
    };
    if let CycleMode::Packing { k: 0 } = mode {
        return TreeDpOutcome { cycles: Vec::new(), found: true, stats };
    }
    let mut tables: Vec<Option<HashMap<CState, Trace>>> = vec![None; nice.nodes.len()];
    for (x, node) in nice.nodes.iter().enumerate() {
        let NiceNode { kind, bag, children } = node;
        let result = match *kind {
            NiceKind::Leaf => {
                let mut t = HashMap::new();
                t.insert(CState { status: Vec::new(), count: 0 }, None);
                Ok(t)
            }
            NiceKind::Introduce(v) => Ok(eng.introduce(tables[children[0]].take().unwrap(), bag, v)),
            NiceKind::Forget(v) => {
                let child_bag = &nice.nodes[children[0]].bag;
                eng.forget(tables[children[0]].take().unwrap(), child_bag, v)
            }
            NiceKind::Join => {
                let l = tables[children[0]].take().unwrap();
                let r = tables[children[1]].take().unwrap();
                eng.join(&l, &r, bag)
            }
        };
        match result {
            Err(trace) => return finish(trace, stats),
            Ok(table) => {
                stats.states += table.len() as u64;
                stats.peak = stats.peak.max(table.len());
                if let CycleMode::Packing { k } = mode {
                    if let Some((_, t)) = table.iter().find(|(s, _)| s.count as usize >= k) {
                        let t = t.clone();
                        let mut out = finish(t, stats);
                        out.cycles.truncate(k);
                        return out;
                    }
                }
                tables[x] = Some(table);
            }
        }
    }
    TreeDpOutcome { cycles: Vec::new(), found: false, stats }
}

/// Vertex-level nice decomposition from a cell-level one: each cell introduce
/// or forget becomes a chain over the cell's vertices.
pub fn expand_cell_nctd(inst: &CliqueGridInstance, nctd: &CellNctd) -> NiceTreeDecomposition {
    let mut nodes: Vec<NiceNode> = Vec::new();
    let mut top = vec![0usize; nctd.nice.nodes.len()];
    for (x, node) in nctd.nice.nodes.iter().enumerate() {
        let kids: Vec<usize> = node.children.iter().map(|&c| top[c]).collect();
        match node.kind {
            NiceKind::Leaf => {
                nodes.push(NiceNode { kind: NiceKind::Leaf, bag: Vec::new(), children: Vec::new() });
            }
            NiceKind::Join => {
                let bag = nodes[kids[0]].bag.clone();
                nodes.push(NiceNode { kind: NiceKind::Join, bag, children: kids });
            }
            NiceKind::Introduce(c) => {
                let mut cur = kids[0];
                for &v in inst.cell_vertices(nctd.cells.cells[c]) {
                    let mut bag = nodes[cur].bag.clone();
                    let at = bag.binary_search(&v).unwrap_err();
                    bag.insert(at, v);
                    nodes.push(NiceNode { kind: NiceKind::Introduce(v), bag, children: vec![cur] });
                    cur = nodes.len() - 1;
                }
            }
            NiceKind::Forget(c) => {
                let mut cur = kids[0];
                for &v in inst.cell_vertices(nctd.cells.cells[c]) {
                    let mut bag = nodes[cur].bag.clone();
                    bag.retain(|&w| w != v);
                    nodes.push(NiceNode { kind: NiceKind::Forget(v), bag, children: vec![cur] });
                    cur = nodes.len() - 1;
                }
            }
        }
        top[x] = nodes.len() - 1;
    }
    NiceTreeDecomposition { n: inst.n(), nodes }
}
