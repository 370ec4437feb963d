//! Clique-grid instances: a graph with a verified cell representation.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{
    build_geometric_graph, compute_representation, verify_representation, Cell, GeometricModel,
    PointCloud, Representation,
};
use crate::graph::SimpleGraph;

/// Worst-case backbone vertices per cell (one per neighbouring cell).
pub const BACKBONE_CELL_BOUND: usize = 24;
/// Worst-case backbone degree: `25 · 24 − 1`.
pub const BACKBONE_DEGREE_BOUND: usize = 599;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueGridInstance {
    graph: SimpleGraph,
    rep: Representation,
    cells: BTreeMap<Cell, Vec<usize>>,
}

impl CliqueGridInstance {
    pub fn new(graph: SimpleGraph, rep: Representation) -> Result<Self> {
        if !verify_representation(&graph, &rep) {
            return Err(Error::Input("representation violates the clique-grid conditions".into()));
        }
        Ok(Self::new_unchecked(graph, rep))
    }

    pub(crate) fn new_unchecked(graph: SimpleGraph, rep: Representation) -> Self {
        let mut cells: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
        for (v, &c) in rep.cell_of.iter().enumerate() {
            cells.entry(c).or_default().push(v);
        }
        CliqueGridInstance { graph, rep, cells }
    }

    pub fn from_cloud(cloud: &PointCloud, model: GeometricModel) -> Result<Self> {
        let graph = build_geometric_graph(cloud, model)?;
        let rep = compute_representation(cloud, model)?;
        CliqueGridInstance::new(graph, rep)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn cell_of(&self, v: usize) -> Cell {
        self.rep.cell_of[v]
    }

    /// Nonempty cells with their (sorted) vertices, in cell order.
    pub fn cells(&self) -> &BTreeMap<Cell, Vec<usize>> {
        &self.cells
    }

    pub fn cell_vertices(&self, c: Cell) -> &[usize] {
        self.cells.get(&c).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn max_cell_size(&self) -> usize {
        self.cells.values().map(Vec::len).max().unwrap_or(0)
    }

    /// Induced sub-instance on `vertices` (kept in the given order) with the same
    /// cell coordinates. Returns the new → old map alongside.
    pub fn restrict(&self, vertices: &[usize]) -> (CliqueGridInstance, Vec<usize>) {
        let (g, map) = self.graph.induced(vertices);
        let cells: Vec<Cell> = vertices.iter().map(|&v| self.rep.cell_of[v]).collect();
        let rep = Representation::new(cells, self.rep.rows, self.rep.cols);
        (CliqueGridInstance::new_unchecked(g, rep), map)
    }

    /// Unordered pairs of distinct cells joined by at least one edge.
    pub fn adjacent_cell_pairs(&self) -> Vec<(Cell, Cell)> {
        let mut pairs: Vec<(Cell, Cell)> = self
            .graph
            .edges()
            .filter_map(|(u, v)| {
                let (a, b) = (self.cell_of(u), self.cell_of(v));
                match a.cmp(&b) {
                    std::cmp::Ordering::Less => Some((a, b)),
                    std::cmp::Ordering::Greater => Some((b, a)),
                    std::cmp::Ordering::Equal => None,
                }
            })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    /// First pair `(u, v)`, `u < v`, of distinct vertices sharing a cell.
    pub fn first_contractible_pair(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for members in self.cells.values() {
            if members.len() >= 2 {
                let cand = (members[0], members[1]);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        best
    }
}

/// Does the vertex subset `keep` induce a backbone: every adjacent cell pair of
/// the instance keeps a witnessing edge inside `keep`.
pub fn is_backbone(inst: &CliqueGridInstance, keep: &[usize]) -> bool {
    let mut mask = vec![false; inst.n()];
    for &v in keep {
        mask[v] = true;
    }
    let mut witnessed: HashMap<(Cell, Cell), bool> = inst
        .adjacent_cell_pairs()
        .into_iter()
        .map(|p| (p, false))
        .collect();
    for (u, v) in inst.graph.edges() {
        if mask[u] && mask[v] {
            let (a, b) = (inst.cell_of(u), inst.cell_of(v));
            if a != b {
                witnessed.insert((a.min(b), a.max(b)), true);
            }
        }
    }
    witnessed.values().all(|&w| w)
}

/// Greedy minimal backbone: try deleting vertices in ascending order, keeping a
/// deletion whenever every adjacent cell pair stays witnessed.
pub fn minimal_backbone(inst: &CliqueGridInstance) -> Vec<usize> {
    let g = inst.graph();
    let n = g.n();
    let key = |u: usize, v: usize| {
        let (a, b) = (inst.cell_of(u), inst.cell_of(v));
        (a.min(b), a.max(b))
    };
    let mut witnesses: HashMap<(Cell, Cell), usize> = HashMap::new();
    for (u, v) in g.edges() {
        if inst.cell_of(u) != inst.cell_of(v) {
            *witnesses.entry(key(u, v)).or_default() += 1;
        }
    }
    let mut alive = vec![true; n];
    for v in 0..n {
        let mut lost: HashMap<(Cell, Cell), usize> = HashMap::new();
        for &w in g.neighbors(v) {
            if alive[w] && inst.cell_of(w) != inst.cell_of(v) {
                *lost.entry(key(v, w)).or_default() += 1;
            }
        }
        if lost.iter().all(|(p, &c)| witnesses[p] > c) {
            alive[v] = false;
            for (p, c) in lost {
                *witnesses.get_mut(&p).unwrap() -= c;
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// Quotient graph: one vertex per nonempty cell, an edge per adjacent cell pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellGraph {
    pub graph: SimpleGraph,
    /// Cell of each cell-vertex, in cell order.
    pub cells: Vec<Cell>,
    pub index: HashMap<Cell, usize>,
}

impl CellGraph {
    pub fn vertex_of(&self, c: Cell) -> Option<usize> {
        self.index.get(&c).copied()
    }
}

pub fn cell_graph(inst: &CliqueGridInstance) -> CellGraph {
    let cells: Vec<Cell> = inst.cells().keys().copied().collect();
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let edges: Vec<(usize, usize)> = inst
        .adjacent_cell_pairs()
        .into_iter()
        .map(|(a, b)| (index[&a], index[&b]))
        .collect();
    let graph = SimpleGraph::from_edges(cells.len(), &edges).expect("cell graph edges are valid");
    CellGraph { graph, cells, index }
}

/// Contracts the contractible pair `{u, v}`. The merged vertex takes the smaller
/// index and keeps the shared cell; the returned map sends old → new vertices.
pub fn contract_pair(
    inst: &CliqueGridInstance,
    u: usize,
    v: usize,
) -> Result<(CliqueGridInstance, Vec<usize>)> {
    let n = inst.n();
    if u == v || u >= n || v >= n || inst.cell_of(u) != inst.cell_of(v) {
        return Err(Error::NotContractible(u, v));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let map: Vec<usize> = (0..n)
        .map(|w| match w.cmp(&gone) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => w - 1,
        })
        .collect();
    let edges: Vec<(usize, usize)> = inst
        .graph
        .edges()
        .map(|(a, b)| (map[a], map[b]))
        .filter(|(a, b)| a != b)
        .collect();
    let graph = SimpleGraph::from_edges(n - 1, &edges)?;
    let cells: Vec<Cell> = (0..n)
        .filter(|&w| w != gone)
        .map(|w| inst.cell_of(w))
        .collect();
    let rep = Representation::new(cells, inst.rep.rows, inst.rep.cols);
    Ok((CliqueGridInstance::new_unchecked(graph, rep), map))
}

/// Backbone audit text: per-cell counts and degree against the fixed bounds.
pub fn backbone_report(inst: &CliqueGridInstance, backbone: &[usize]) -> String {
    let (h, map) = inst.graph().induced(backbone);
    let mut per_cell: BTreeMap<Cell, usize> = BTreeMap::new();
    for &v in &map {
        *per_cell.entry(inst.cell_of(v)).or_default() += 1;
    }
    let max_cell = per_cell.values().copied().max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "backbone_vertices={}", backbone.len());
    let _ = writeln!(out, "backbone_edges={}", h.m());
    let _ = writeln!(out, "max_per_cell={} bound={}", max_cell, BACKBONE_CELL_BOUND);
    let _ = writeln!(out, "max_degree={} bound={}", h.max_degree(), BACKBONE_DEGREE_BOUND);
    let ok = max_cell <= BACKBONE_CELL_BOUND && h.max_degree() <= BACKBONE_DEGREE_BOUND;
    let _ = writeln!(out, "audit={}", if ok { "ok" } else { "violated" });
    for &v in &map {
        let c = inst.cell_of(v);
        let _ = writeln!(out, "vertex {} {} {}", v + 1, c.row, c.col);
    }
    out
}
