//! Treewidth by branch and bound over elimination orderings.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Default number of search nodes explored before giving up.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000;

/// Outcome of a capped treewidth query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Treewidth<T> {
    Within(T),
    /// The treewidth is strictly larger than the requested cap.
    Exceeded,
}

impl<T> Treewidth<T> {
    pub fn within(self) -> Option<T> {
        match self {
            Treewidth::Within(t) => Some(t),
            Treewidth::Exceeded => None,
        }
    }
}

/// Eliminates vertices in `order` and returns the induced decomposition.
pub fn decomposition_from_order(g: &SimpleGraph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut b = FixedBitSet::with_capacity(n);
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect();
    let mut bags = Vec::with_capacity(n);
    let mut higher_of = Vec::with_capacity(n);
    for &v in order {
        let higher: Vec<usize> = adj[v].ones().filter(|&w| pos[w] > pos[v]).collect();
        for (i, &a) in higher.iter().enumerate() {
            for &b in &higher[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut bag = higher.clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        higher_of.push(higher);
    }
    // Bag i hangs below the bag of its earliest-eliminated higher neighbour;
    // roots of separate components are chained so the result is one tree.
    let mut edges = Vec::new();
    let mut last_root: Option<usize> = None;
    for (i, higher) in higher_of.iter().enumerate() {
        match higher.iter().map(|&w| pos[w]).min() {
            Some(p) => edges.push((i, p)),
            None => {
                if let Some(r) = last_root {
                    edges.push((r, i));
                }
                last_root = Some(i);
            }
        }
    }
    TreeDecomposition::new(n, bags, edges).compressed()
}

/// Width of the greedy min-fill ordering together with the ordering.
pub fn min_fill_order(g: &SimpleGraph) -> (usize, Vec<usize>) {
    let n = g.n();
    let mut adj: Vec<FixedBitSet> = bitsets(g);
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in alive.ones() {
            let nb: Vec<usize> = adj[v].ones().collect();
            let mut fill = 0;
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if !adj[a].contains(b) {
                        fill += 1;
                    }
                }
            }
            let key = (fill, nb.len(), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let (_, deg, v) = best.expect("alive vertex exists");
        width = width.max(deg);
        eliminate(&mut adj, &mut alive, v);
        order.push(v);
    }
    (width, order)
}

/// Heuristic decomposition (min-fill); always succeeds.
pub fn heuristic_decomposition(g: &SimpleGraph) -> TreeDecomposition {
    let (_, order) = min_fill_order(g);
    decomposition_from_order(g, &order)
}

fn bitsets(g: &SimpleGraph) -> Vec<FixedBitSet> {
    let n = g.n();
    (0..n)
        .map(|v| {
            let mut b = FixedBitSet::with_capacity(n);
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect()
}

fn eliminate(adj: &mut [FixedBitSet], alive: &mut FixedBitSet, v: usize) {
    let nb: Vec<usize> = adj[v].ones().collect();
    for &a in &nb {
        adj[a].set(v, false);
        for &b in &nb {
            if a != b {
                adj[a].insert(b);
            }
        }
    }
    adj[v].clear();
    alive.set(v, false);
}

/// Minor-min-width lower bound: repeatedly contract a minimum-degree vertex into
/// its minimum-degree neighbour.
fn minor_min_width(adj: &[FixedBitSet], alive: &FixedBitSet) -> usize {
    let mut adj = adj.to_vec();
    let mut alive = alive.clone();
    let mut lb = 0;
    while alive.count_ones(..) > 1 {
        let v = alive
            .ones()
            .min_by_key(|&v| (adj[v].count_ones(..), v))
            .unwrap();
        let d = adj[v].count_ones(..);
        lb = lb.max(d);
        if d == 0 {
            alive.set(v, false);
            continue;
        }
        let u = adj[v]
            .ones()
            .min_by_key(|&u| (adj[u].count_ones(..), u))
            .unwrap();
        let nb: Vec<usize> = adj[v].ones().filter(|&w| w != u).collect();
        for w in nb {
            adj[w].set(v, false);
            adj[w].insert(u);
            adj[u].insert(w);
        }
        adj[u].set(v, false);
        adj[v].clear();
        alive.set(v, false);
    }
    lb
}

struct Search {
    adj: Vec<FixedBitSet>,
    alive: FixedBitSet,
    order: Vec<usize>,
    best: usize,
    best_order: Option<Vec<usize>>,
    seen: HashMap<FixedBitSet, usize>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| self.adj[a].contains(b)))
    }

    /// A vertex that may be eliminated first without loss: simplicial, or
    /// almost simplicial with degree at most `lb`.
    fn safe_vertex(&self, lb: usize) -> Option<usize> {
        for v in self.alive.ones() {
            let nb: Vec<usize> = self.adj[v].ones().collect();
            if self.is_clique(&nb) {
                return Some(v);
            }
            if nb.len() <= lb {
                for skip in 0..nb.len() {
                    let rest: Vec<usize> = nb
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &w)| w)
                        .collect();
                    if self.is_clique(&rest) {
                        return Some(v);
                    }
                }
            }
        }
        None
    }

    fn run(&mut self, width: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Timeout(self.budget));
        }
        let remaining = self.alive.count_ones(..);
        if remaining == 0 || remaining <= width + 1 {
            if width < self.best {
                self.best = width;
                let mut order = self.order.clone();
                order.extend(self.alive.ones());
                self.best_order = Some(order);
            }
            return Ok(());
        }
        let lb = width.max(minor_min_width(&self.adj, &self.alive));
        if lb >= self.best {
            return Ok(());
        }
        if let Some(&w) = self.seen.get(&self.alive) {
            if w <= width {
                return Ok(());
            }
        }
        self.seen.insert(self.alive.clone(), width);

        let candidates: Vec<usize> = match self.safe_vertex(lb) {
            Some(v) => vec![v],
            None => {
                let mut c: Vec<usize> = self.alive.ones().collect();
                c.sort_by_key(|&v| (self.adj[v].count_ones(..), v));
                c
            }
        };
        for v in candidates {
            let deg = self.adj[v].count_ones(..);
            let w = width.max(deg);
            if w >= self.best {
                continue;
            }
            let saved_adj = self.adj.clone();
            eliminate(&mut self.adj, &mut self.alive, v);
            self.order.push(v);
            let r = self.run(w);
            self.order.pop();
            self.adj = saved_adj;
            self.alive.insert(v);
            r?;
        }
        Ok(())
    }
}

/// Exact treewidth of a connected graph, searching for an ordering of width
/// at most `limit`. Returns `None` when no such ordering exists.
fn exact_order_connected(
    g: &SimpleGraph,
    limit: usize,
    budget: u64,
) -> Result<Option<(usize, Vec<usize>)>> {
    let (hw, horder) = min_fill_order(g);
    let mut s = Search {
        adj: bitsets(g),
        alive: {
            let mut a = FixedBitSet::with_capacity(g.n());
            a.insert_range(..);
            a
        },
        order: Vec::new(),
        best: hw.min(limit + 1),
        best_order: (hw <= limit).then_some(horder),
        seen: HashMap::new(),
        nodes: 0,
        budget,
    };
    s.run(0)?;
    Ok(s.best_order.map(|o| (s.best, o)))
}

/// Optimal tree decomposition if the treewidth is at most `cap` (`None` means
/// no cap). The search budget counts explored branch nodes per component.
pub fn exact_treewidth(
    g: &SimpleGraph,
    cap: Option<usize>,
    budget: u64,
) -> Result<Treewidth<TreeDecomposition>> {
    let limit = cap.unwrap_or(usize::MAX - 1);
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let (h, map) = g.induced(&comp);
        match exact_order_connected(&h, limit, budget)? {
            Some((_, o)) => order.extend(o.into_iter().map(|v| map[v])),
            None => return Ok(Treewidth::Exceeded),
        }
    }
    Ok(Treewidth::Within(decomposition_from_order(g, &order)))
}

/// Exact decomposition when the search finishes within budget, otherwise the
/// min-fill heuristic. Never fails.
pub fn best_effort_decomposition(g: &SimpleGraph, budget: u64) -> TreeDecomposition {
    match exact_treewidth(g, None, budget) {
        Ok(Treewidth::Within(td)) => td,
        _ => heuristic_decomposition(g),
    }
}
