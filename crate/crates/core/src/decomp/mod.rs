//! Tree and path decompositions: plain, nice, cell-level, and the column-window
//! path decompositions used by the Exact k-Cycle pipeline.

mod pace;
pub mod treewidth;

use std::collections::BTreeSet;

use crate::cliquegrid::{cell_graph, CellGraph, CliqueGridInstance};
use crate::error::{Error, Result};
use crate::geometry::Cell;
use crate::graph::{SimpleGraph, UnionFind};

pub use pace::parse_pace;
pub use treewidth::{
    best_effort_decomposition, exact_treewidth, heuristic_decomposition, Treewidth,
    DEFAULT_NODE_BUDGET,
};

/// Tree decomposition over vertices `0..n`. Tree edges are kept exactly as
/// given so that `.td` text round-trips unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub n: usize,
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(n: usize, bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition { n, bags, edges }
    }

    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest bag size minus one (0 for decompositions with only empty bags).
    pub fn width(&self) -> usize {
        self.max_bag().saturating_sub(1)
    }

    /// Contracts every tree edge whose one bag contains the other, keeping the
    /// larger bag. Validity and width are unchanged.
    pub fn compressed(&self) -> TreeDecomposition {
        let m = self.bags.len();
        let mut uf = UnionFind::new(m);
        let mut bag: Vec<Vec<usize>> = self.bags.clone();
        for &(a, b) in &self.edges {
            let (ra, rb) = (uf.find(a), uf.find(b));
            if ra == rb {
                continue;
            }
            let sub = |x: &[usize], y: &[usize]| x.iter().all(|v| y.contains(v));
            let keep = if sub(&bag[ra], &bag[rb]) {
                bag[rb].clone()
            } else if sub(&bag[rb], &bag[ra]) {
                bag[ra].clone()
            } else {
                continue;
            };
            uf.union(ra, rb);
            let r = uf.find(ra);
            bag[r] = keep;
        }
        let mut index = vec![usize::MAX; m];
        let mut bags = Vec::new();
        for x in 0..m {
            let r = uf.find(x);
            if index[r] == usize::MAX {
                index[r] = bags.len();
                bags.push(bag[r].clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (index[uf.find(a)], index[uf.find(b)]))
            .filter(|(a, b)| a != b)
            .collect();
        TreeDecomposition::new(self.n, bags, edges)
    }

    /// PACE `.td` text with 1-indexed bags and vertices.
    pub fn to_pace(&self) -> String {
        let mut out = format!("s td {} {} {}\n", self.bags.len(), self.max_bag(), self.n);
        for (i, bag) in self.bags.iter().enumerate() {
            out.push_str(&format!("b {}", i + 1));
            for &v in bag {
                out.push_str(&format!(" {}", v + 1));
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        out
    }
}

/// Is the bag graph a tree (empty is allowed only for the empty graph).
fn is_tree(nodes: usize, edges: &[(usize, usize)]) -> bool {
    if nodes == 0 {
        return edges.is_empty();
    }
    if edges.len() != nodes - 1 {
        return false;
    }
    let mut uf = UnionFind::new(nodes);
    edges
        .iter()
        .all(|&(a, b)| a < nodes && b < nodes && uf.union(a, b))
}

/// Checks the three tree-decomposition conditions exhaustively.
pub fn verify_tree_decomposition(g: &SimpleGraph, td: &TreeDecomposition) -> bool {
    let n = g.n();
    if td.n != n || !is_tree(td.bags.len(), &td.edges) {
        return false;
    }
    if td.bags.is_empty() {
        return n == 0;
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return false;
            }
            holders[v].push(i);
        }
    }
    if holders.iter().any(Vec::is_empty) {
        return false;
    }
    let sets: Vec<BTreeSet<usize>> = td.bags.iter().map(|b| b.iter().copied().collect()).collect();
    for (u, v) in g.edges() {
        if !sets.iter().any(|s| s.contains(&u) && s.contains(&v)) {
            return false;
        }
    }
    // Occurrence connectivity: the bags holding v induce a subtree, i.e. the
    // tree edges inside that set number exactly |set| - 1.
    for v in 0..n {
        let inside = td
            .edges
            .iter()
            .filter(|&&(a, b)| sets[a].contains(&v) && sets[b].contains(&v))
            .count();
        if inside + 1 != holders[v].len() {
            return false;
        }
    }
    true
}

/// Checks the path-decomposition conditions for a bag sequence.
pub fn verify_path_decomposition(g: &SimpleGraph, bags: &[Vec<usize>]) -> bool {
    let edges: Vec<(usize, usize)> = (1..bags.len()).map(|i| (i - 1, i)).collect();
    let td = TreeDecomposition::new(g.n(), bags.to_vec(), edges);
    verify_tree_decomposition(g, &td)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Nice tree decomposition; every child index is smaller than its parent's and
/// the last node is the root, so a forward scan is a valid bottom-up order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub n: usize,
    pub nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|x| x.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|x| x.bag.clone()).collect();
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, x)| x.children.iter().map(move |&c| (c, i)))
            .collect();
        TreeDecomposition::new(self.n, bags, edges)
    }
}

struct NiceBuilder {
    nodes: Vec<NiceNode>,
}

impl NiceBuilder {
    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Walks from node `x` (bag `from`) to a node with bag `to`: forgets first,
    /// then introduces, both in ascending vertex order.
    fn transition(&mut self, mut x: usize, to: &[usize]) -> usize {
        let from = self.nodes[x].bag.clone();
        let mut bag = from.clone();
        for &v in from.iter().filter(|v| to.binary_search(v).is_err()) {
            bag.retain(|&w| w != v);
            x = self.push(NiceKind::Forget(v), bag.clone(), vec![x]);
        }
        for &v in to.iter().filter(|v| from.binary_search(v).is_err()) {
            let at = bag.binary_search(&v).unwrap_err();
            bag.insert(at, v);
            x = self.push(NiceKind::Introduce(v), bag.clone(), vec![x]);
        }
        x
    }

    fn build(&mut self, children: &[Vec<usize>], bags: &[Vec<usize>], x: usize) -> usize {
        let mut tops = Vec::new();
        for &c in &children[x] {
            let sub = self.build(children, bags, c);
            tops.push(self.transition(sub, &bags[x]));
        }
        if tops.is_empty() {
            let leaf = self.push(NiceKind::Leaf, Vec::new(), Vec::new());
            return self.transition(leaf, &bags[x]);
        }
        let mut acc = tops[0];
        for &t in &tops[1..] {
            acc = self.push(NiceKind::Join, bags[x].clone(), vec![acc, t]);
        }
        acc
    }
}

/// Converts a valid tree decomposition into a nice one of the same width with
/// empty leaf and root bags.
pub fn make_nice(td: &TreeDecomposition) -> NiceTreeDecomposition {
    let mut b = NiceBuilder { nodes: Vec::new() };
    if td.bags.is_empty() {
        b.push(NiceKind::Leaf, Vec::new(), Vec::new());
        return NiceTreeDecomposition { n: td.n, nodes: b.nodes };
    }
    let k = td.bags.len();
    let mut adj = vec![Vec::new(); k];
    for &(a, c) in &td.edges {
        adj[a].push(c);
        adj[c].push(a);
    }
    let mut children = vec![Vec::new(); k];
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                children[x].push(y);
                stack.push(y);
            }
        }
    }
    let bags: Vec<Vec<usize>> = td
        .bags
        .iter()
        .map(|bag| {
            let mut s = bag.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let top = b.build(&children, &bags, 0);
    b.transition(top, &[]);
    NiceTreeDecomposition { n: td.n, nodes: b.nodes }
}

/// Checks the tree-decomposition conditions plus every node's kind relation.
pub fn verify_nice(g: &SimpleGraph, nice: &NiceTreeDecomposition) -> bool {
    if nice.nodes.is_empty() || !nice.nodes[nice.root()].bag.is_empty() {
        return false;
    }
    let mut parents = vec![0usize; nice.nodes.len()];
    for (i, x) in nice.nodes.iter().enumerate() {
        if x.bag.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        for &c in &x.children {
            if c >= i {
                return false;
            }
            parents[c] += 1;
        }
        let ok = match x.kind {
            NiceKind::Leaf => x.children.is_empty() && x.bag.is_empty(),
            NiceKind::Join => {
                x.children.len() == 2 && x.children.iter().all(|&c| nice.nodes[c].bag == x.bag)
            }
            NiceKind::Introduce(v) => {
                x.children.len() == 1 && {
                    let child = &nice.nodes[x.children[0]].bag;
                    !child.contains(&v) && with(child, v) == x.bag
                }
            }
            NiceKind::Forget(v) => {
                x.children.len() == 1 && {
                    let child = &nice.nodes[x.children[0]].bag;
                    !x.bag.contains(&v) && with(&x.bag, v) == *child
                }
            }
        };
        if !ok {
            return false;
        }
    }
    let root = nice.root();
    if parents[root] != 0 || parents[..root].iter().any(|&p| p != 1) {
        return false;
    }
    verify_tree_decomposition(g, &nice.to_tree_decomposition())
}

fn with(bag: &[usize], v: usize) -> Vec<usize> {
    let mut b = bag.to_vec();
    b.push(v);
    b.sort_unstable();
    b
}

/// Nice tree decomposition whose bags are unions of whole cells: a nice
/// decomposition of the cell graph, read at cell granularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellNctd {
    pub cells: CellGraph,
    pub nice: NiceTreeDecomposition,
}

impl CellNctd {
    pub fn cells_of_bag(&self, node: usize) -> Vec<Cell> {
        self.nice.nodes[node].bag.iter().map(|&c| self.cells.cells[c]).collect()
    }

    /// Sorted vertex bag: all vertices of the node's cells.
    pub fn vertex_bag(&self, inst: &CliqueGridInstance, node: usize) -> Vec<usize> {
        let mut bag: Vec<usize> = self
            .cells_of_bag(node)
            .into_iter()
            .flat_map(|c| inst.cell_vertices(c).iter().copied())
            .collect();
        bag.sort_unstable();
        bag
    }

    /// Most cells in any bag.
    pub fn cells_per_bag(&self) -> usize {
        self.nice.width() + 1
    }

    pub fn lifted(&self, inst: &CliqueGridInstance) -> TreeDecomposition {
        let mut td = self.nice.to_tree_decomposition();
        td.n = inst.n();
        td.bags = (0..self.nice.nodes.len()).map(|i| self.vertex_bag(inst, i)).collect();
        td
    }
}

/// Cell-level nice decomposition from an exact (budgeted) treewidth search on
/// the cell graph; `Exceeded` means the cell graph has treewidth above `cap`.
pub fn build_cell_nctd(
    inst: &CliqueGridInstance,
    cap: Option<usize>,
    budget: u64,
) -> Result<Treewidth<CellNctd>> {
    let cells = cell_graph(inst);
    Ok(match exact_treewidth(&cells.graph, cap, budget)? {
        Treewidth::Within(td) => Treewidth::Within(CellNctd {
            nice: make_nice(&td),
            cells,
        }),
        Treewidth::Exceeded => Treewidth::Exceeded,
    })
}

/// Cell-level decomposition for the solvers: exact when the search fits the
/// budget, min-fill otherwise.
pub fn solver_cell_nctd(inst: &CliqueGridInstance, budget: u64) -> CellNctd {
    let cells = cell_graph(inst);
    let td = best_effort_decomposition(&cells.graph, budget);
    CellNctd {
        nice: make_nice(&td),
        cells,
    }
}

pub fn verify_cell_nctd(inst: &CliqueGridInstance, nctd: &CellNctd) -> bool {
    nctd.cells == cell_graph(inst)
        && verify_nice(&nctd.cells.graph, &nctd.nice)
        && verify_tree_decomposition(inst.graph(), &nctd.lifted(inst))
}

/// `⌈√k⌉` for `k ≥ 0`.
pub fn ceil_sqrt(k: usize) -> usize {
    let mut r = (k as f64).sqrt() as usize;
    while r * r < k {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= k {
        r -= 1;
    }
    r
}

/// Label of a column: its two-column block index modulo `⌈√k⌉`.
pub fn column_label(col: usize, labels: usize) -> usize {
    col.div_ceil(2) % labels
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BakerStep {
    /// Introduce the kept vertex set `Y` (first step only).
    IntroduceKept,
    Introduce(Cell),
    Forget(Cell),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BakerBag {
    pub step: BakerStep,
    /// Full cells present after the step, sorted.
    pub cells: Vec<Cell>,
}

/// Path decomposition of `G ∖ S` for one label: every bag holds `Y` plus a
/// few full cells of one column window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BakerNcpd {
    pub label: usize,
    pub kept: Vec<usize>,
    pub bags: Vec<BakerBag>,
}

impl BakerNcpd {
    pub fn max_cells(&self) -> usize {
        self.bags.iter().map(|b| b.cells.len()).max().unwrap_or(0)
    }

    /// Vertex bags over the original vertex indices.
    pub fn vertex_bags(&self, inst: &CliqueGridInstance) -> Vec<Vec<usize>> {
        self.bags
            .iter()
            .map(|b| {
                let mut bag = self.kept.clone();
                for &c in &b.cells {
                    bag.extend_from_slice(inst.cell_vertices(c));
                }
                bag.sort_unstable();
                bag
            })
            .collect()
    }
}

/// Vertices lying in label-`label` columns.
pub fn label_vertices(inst: &CliqueGridInstance, label: usize, labels: usize) -> Vec<usize> {
    (0..inst.n())
        .filter(|&v| column_label(inst.cell_of(v).col, labels) == label)
        .collect()
}

/// Column-window path decomposition of `G ∖ S` where `S ∪ Y` is the label
/// vertex set. Windows are maximal runs of unlabeled columns; each is swept
/// row by row keeping three consecutive rows.
pub fn build_baker_ncpd(
    inst: &CliqueGridInstance,
    deleted: &[usize],
    kept: &[usize],
    k: usize,
) -> Result<BakerNcpd> {
    let labels = ceil_sqrt(k).max(1);
    if kept.len() > labels {
        return Err(Error::Construction(format!(
            "kept set has {} vertices, more than {labels}",
            kept.len()
        )));
    }
    let mut both: Vec<usize> = deleted.iter().chain(kept).copied().collect();
    both.sort_unstable();
    let total = both.len();
    both.dedup();
    if both.len() != total {
        return Err(Error::Construction("deleted and kept sets overlap".into()));
    }
    let label = match both.first() {
        Some(&v) => column_label(inst.cell_of(v).col, labels),
        None => (0..labels)
            .find(|&l| label_vertices(inst, l, labels).is_empty())
            .ok_or_else(|| Error::Construction("empty S ∪ Y is not a label class".into()))?,
    };
    if both != label_vertices(inst, label, labels) {
        return Err(Error::Construction(format!(
            "S ∪ Y is not the vertex set of label {label}"
        )));
    }
    let mut kept_sorted = kept.to_vec();
    kept_sorted.sort_unstable();
    let rep = inst.rep();
    let mut bags = vec![BakerBag {
        step: BakerStep::IntroduceKept,
        cells: Vec::new(),
    }];
    let mut col = 1;
    while col <= rep.cols {
        if column_label(col, labels) == label {
            col += 1;
            continue;
        }
        let start = col;
        while col <= rep.cols && column_label(col, labels) != label {
            col += 1;
        }
        sweep_window(inst, start, col, &mut bags);
    }
    Ok(BakerNcpd {
        label,
        kept: kept_sorted,
        bags,
    })
}

fn sweep_window(inst: &CliqueGridInstance, lo: usize, hi: usize, bags: &mut Vec<BakerBag>) {
    let rows = inst.rep().rows;
    let row_cells = |r: usize| -> Vec<Cell> {
        (lo..hi)
            .map(|c| Cell::new(r, c))
            .filter(|&c| !inst.cell_vertices(c).is_empty())
            .collect()
    };
    let mut current: Vec<Cell> = Vec::new();
    let mut push = |step: BakerStep, current: &mut Vec<Cell>| {
        match step {
            BakerStep::Introduce(c) => current.push(c),
            BakerStep::Forget(c) => current.retain(|&x| x != c),
            BakerStep::IntroduceKept => {}
        }
        let mut cells = current.clone();
        cells.sort_unstable();
        bags.push(BakerBag { step, cells });
    };
    for r in 1..=rows.min(3) {
        for c in row_cells(r) {
            push(BakerStep::Introduce(c), &mut current);
        }
    }
    for r in 1..=rows {
        for c in row_cells(r) {
            push(BakerStep::Forget(c), &mut current);
        }
        if r + 3 <= rows {
            for c in row_cells(r + 3) {
                push(BakerStep::Introduce(c), &mut current);
            }
        }
    }
}

/// Validity of a Baker decomposition for `G ∖ deleted`, with `Y` in every bag,
/// `|Y| ≤ ⌈√k⌉` and at most `6⌈√k⌉` full cells per bag.
pub fn verify_baker_ncpd(
    inst: &CliqueGridInstance,
    deleted: &[usize],
    ncpd: &BakerNcpd,
    k: usize,
) -> bool {
    let root = ceil_sqrt(k).max(1);
    if ncpd.kept.len() > root || ncpd.max_cells() > 6 * root {
        return false;
    }
    let mut removed = vec![false; inst.n()];
    for &v in deleted {
        removed[v] = true;
    }
    if ncpd.kept.iter().any(|&v| removed[v]) {
        return false;
    }
    let keep: Vec<usize> = (0..inst.n()).filter(|&v| !removed[v]).collect();
    let mut index = vec![usize::MAX; inst.n()];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let (h, _) = inst.graph().induced(&keep);
    let mut bags = Vec::with_capacity(ncpd.bags.len());
    for bag in ncpd.vertex_bags(inst) {
        let mut mapped = Vec::with_capacity(bag.len());
        for v in bag {
            if index[v] == usize::MAX {
                return false;
            }
            mapped.push(index[v]);
        }
        bags.push(mapped);
    }
    let kept_everywhere = bags
        .iter()
        .all(|b| ncpd.kept.iter().all(|&y| b.contains(&index[y])));
    kept_everywhere && verify_path_decomposition(&h, &bags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Representation;

    #[test]
    fn verifier_basics() {
        let k2 = SimpleGraph::complete(2);
        assert!(verify_tree_decomposition(&k2, &TreeDecomposition::new(2, vec![vec![0, 1]], vec![])));
        assert!(!verify_tree_decomposition(
            &k2,
            &TreeDecomposition::new(2, vec![vec![0], vec![1]], vec![(0, 1)])
        ));
        let p3 = SimpleGraph::path(3);
        let broken = TreeDecomposition::new(3, vec![vec![0, 1], vec![2], vec![1, 2]], vec![(0, 1), (1, 2)]);
        assert!(!verify_tree_decomposition(&p3, &broken));
    }

    #[test]
    fn nice_of_single_bag_triangle() {
        let td = TreeDecomposition::new(3, vec![vec![0, 1, 2]], vec![]);
        let nice = make_nice(&td);
        let kinds: Vec<NiceKind> = nice.nodes.iter().map(|x| x.kind).collect();
        assert_eq!(
            kinds,
            vec![
                NiceKind::Leaf,
                NiceKind::Introduce(0),
                NiceKind::Introduce(1),
                NiceKind::Introduce(2),
                NiceKind::Forget(0),
                NiceKind::Forget(1),
                NiceKind::Forget(2),
            ]
        );
        assert!(verify_nice(&SimpleGraph::complete(3), &nice));
    }

    #[test]
    fn nice_preserves_width_with_joins() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let td = TreeDecomposition::new(
            5,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![3, 4]],
            vec![(0, 1), (0, 2), (2, 3)],
        );
        assert!(verify_tree_decomposition(&g, &td));
        let nice = make_nice(&td);
        assert!(verify_nice(&g, &nice));
        assert_eq!(nice.width(), 1);
        assert!(nice.nodes.iter().any(|x| x.kind == NiceKind::Join));
    }

    #[test]
    fn one_cell_nctd() {
        let inst = CliqueGridInstance::new(
            SimpleGraph::complete(3),
            Representation::fitted(vec![Cell::new(1, 1); 3]),
        )
        .unwrap();
        let nctd = build_cell_nctd(&inst, None, 1000).unwrap().within().unwrap();
        assert_eq!(nctd.nice.nodes.len(), 3);
        assert!(verify_cell_nctd(&inst, &nctd));
        assert_eq!(nctd.vertex_bag(&inst, 1), vec![0, 1, 2]);
    }

    #[test]
    fn ceil_sqrt_values() {
        let got: Vec<usize> = (0..=10).map(ceil_sqrt).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4]);
    }

    #[test]
    fn baker_single_window_row_triples() {
        // Column 3 only (label 0 for k = 4 is blocks 2, 4, ...; column 3 is block 2).
        // Use columns 1..2 (block 1, label 1) so label 0 holds nothing.
        let cells: Vec<Cell> = (1..=4).map(|r| Cell::new(r, 1)).collect();
        let g = SimpleGraph::path(4);
        let inst = CliqueGridInstance::new(g, Representation::new(cells, 4, 2)).unwrap();
        let ncpd = build_baker_ncpd(&inst, &[], &[], 4).unwrap();
        assert_eq!(ncpd.label, 0);
        assert!(verify_baker_ncpd(&inst, &[], &ncpd, 4));
        assert_eq!(ncpd.max_cells(), 3);
        let with_row1 = &ncpd.bags[3];
        assert_eq!(with_row1.cells, vec![Cell::new(1, 1), Cell::new(2, 1), Cell::new(3, 1)]);
    }

    #[test]
    fn baker_rejects_wrong_label_sets() {
        let inst = CliqueGridInstance::new(
            SimpleGraph::path(2),
            Representation::new(vec![Cell::new(1, 1), Cell::new(1, 3)], 1, 3),
        )
        .unwrap();
        // k = 4: labels 0..2, column 3 has label 0, column 1 label 1.
        assert!(build_baker_ncpd(&inst, &[0], &[], 4).is_ok());
        assert!(build_baker_ncpd(&inst, &[], &[], 4).is_err());
        let ncpd = build_baker_ncpd(&inst, &[], &[1], 4).unwrap();
        assert!(verify_baker_ncpd(&inst, &[], &ncpd, 4));
        assert!(ncpd.vertex_bags(&inst).iter().all(|b| b.contains(&1)));
    }
}
