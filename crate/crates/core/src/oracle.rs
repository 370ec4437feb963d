//! Brute-force reference solvers. They are exact within their budgets and fail
//! with [`Error::Budget`] instead of guessing.

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, UnionFind};

/// Largest component the subset DP for paths and cycles will take on.
pub const HELD_KARP_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    /// Search nodes / enumerated objects before failing.
    pub max_objects: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 64,
            max_objects: 200_000_000,
        }
    }
}

struct Counter {
    used: u64,
    limit: u64,
}

impl Counter {
    fn new(budget: &OracleBudget) -> Self {
        Counter { used: 0, limit: budget.max_objects }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Budget(format!("more than {} search nodes", self.limit)))
        } else {
            Ok(())
        }
    }
}

fn check_size(g: &SimpleGraph, budget: &OracleBudget) -> Result<()> {
    let limit = budget.max_vertices.min(64);
    if g.n() > limit {
        return Err(Error::Budget(format!(
            "{} vertices exceed the oracle limit {limit}",
            g.n()
        )));
    }
    Ok(())
}

fn masks(g: &SimpleGraph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect()
}

/// A cycle on exactly `k` vertices, found by DFS from each possible smallest
/// vertex.
pub fn find_exact_cycle(g: &SimpleGraph, k: usize, budget: &OracleBudget) -> Result<Option<Vec<usize>>> {
    check_size(g, budget)?;
    if k < 3 || k > g.n() {
        return Ok(None);
    }
    let mut counter = Counter::new(budget);
    let mut on_path = vec![false; g.n()];
    for s in 0..g.n() {
        let mut path = vec![s];
        on_path[s] = true;
        let found = cycle_dfs(g, k, s, &mut path, &mut on_path, &mut counter)?;
        on_path[s] = false;
        if found {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

fn cycle_dfs(
    g: &SimpleGraph,
    k: usize,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    counter: &mut Counter,
) -> Result<bool> {
    counter.tick()?;
    let last = *path.last().unwrap();
    if path.len() == k {
        return Ok(g.has_edge(last, s));
    }
    for &w in g.neighbors(last) {
        if w > s && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            if cycle_dfs(g, k, s, path, on_path, counter)? {
                return Ok(true);
            }
            path.pop();
            on_path[w] = false;
        }
    }
    Ok(false)
}

pub fn brute_exact_cycle(g: &SimpleGraph, k: usize, budget: &OracleBudget) -> Result<bool> {
    Ok(find_exact_cycle(g, k, budget)?.is_some())
}

/// `ends[mask]`: endpoints of Hamiltonian paths of `G[mask]` that start at the
/// smallest vertex of `mask` (`rooted`) or anywhere (not rooted).
fn path_table(adj: &[u64], rooted: bool) -> Vec<u32> {
    let n = adj.len();
    let mut ends = vec![0u32; 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        if mask.count_ones() == 1 {
            ends[mask] = 1 << low;
            continue;
        }
        let mut e = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if rooted && v == low {
                continue;
            }
            if ends[mask & !(1 << v)] as u64 & adj[v] != 0 {
                e |= 1 << v;
            }
        }
        ends[mask] = e;
    }
    ends
}

fn component_adj(g: &SimpleGraph, comp: &[usize]) -> Vec<u64> {
    let (h, _) = g.induced(comp);
    masks(&h)
}

/// Number of vertices of a longest path (0 for the empty graph).
pub fn brute_longest_path(g: &SimpleGraph, budget: &OracleBudget) -> Result<usize> {
    check_size(g, budget)?;
    let mut best = 0;
    for comp in g.components() {
        if comp.len() > HELD_KARP_LIMIT {
            return Err(Error::Budget(format!("component of {} vertices", comp.len())));
        }
        let ends = path_table(&component_adj(g, &comp), false);
        for (mask, &e) in ends.iter().enumerate() {
            if e != 0 {
                best = best.max(mask.count_ones() as usize);
            }
        }
    }
    Ok(best)
}

/// Number of vertices of a longest cycle (0 for forests).
pub fn brute_longest_cycle(g: &SimpleGraph, budget: &OracleBudget) -> Result<usize> {
    check_size(g, budget)?;
    let mut best = 0;
    for comp in g.components() {
        if comp.len() > HELD_KARP_LIMIT {
            return Err(Error::Budget(format!("component of {} vertices", comp.len())));
        }
        let adj = component_adj(g, &comp);
        let ends = path_table(&adj, true);
        for (mask, &e) in ends.iter().enumerate() {
            let size = mask.count_ones() as usize;
            if size >= 3 && (e as u64) & adj[mask.trailing_zeros() as usize] != 0 {
                best = best.max(size);
            }
        }
    }
    Ok(best)
}

/// Is there a path on at least `k` vertices. Small components use the subset
/// DP, larger ones a depth-first search for a `k`-vertex path.
pub fn has_path_at_least(g: &SimpleGraph, k: usize, budget: &OracleBudget) -> Result<bool> {
    check_size(g, budget)?;
    if k == 0 {
        return Ok(true);
    }
    let mut counter = Counter::new(budget);
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        if comp.len() <= HELD_KARP_LIMIT {
            let ends = path_table(&component_adj(g, &comp), false);
            if ends
                .iter()
                .enumerate()
                .any(|(mask, &e)| e != 0 && mask.count_ones() as usize >= k)
            {
                return Ok(true);
            }
        } else {
            let (h, _) = g.induced(&comp);
            let mut on = vec![false; h.n()];
            for s in 0..h.n() {
                on[s] = true;
                let hit = long_path_dfs(&h, k, s, 1, &mut on, &mut counter)?;
                on[s] = false;
                if hit {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn long_path_dfs(
    g: &SimpleGraph,
    k: usize,
    v: usize,
    len: usize,
    on: &mut [bool],
    counter: &mut Counter,
) -> Result<bool> {
    counter.tick()?;
    if len >= k {
        return Ok(true);
    }
    for &w in g.neighbors(v) {
        if !on[w] {
            on[w] = true;
            let hit = long_path_dfs(g, k, w, len + 1, on, counter)?;
            on[w] = false;
            if hit {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Is there a cycle on at least `k` vertices. Same strategy split as
/// [`has_path_at_least`].
pub fn has_cycle_at_least(g: &SimpleGraph, k: usize, budget: &OracleBudget) -> Result<bool> {
    check_size(g, budget)?;
    let k = k.max(3);
    let mut counter = Counter::new(budget);
    for comp in g.components() {
        if comp.len() < k {
            continue;
        }
        let (h, _) = g.induced(&comp);
        if comp.len() <= HELD_KARP_LIMIT {
            let adj = masks(&h);
            let ends = path_table(&adj, true);
            let hit = ends.iter().enumerate().any(|(mask, &e)| {
                mask.count_ones() as usize >= k && (e as u64) & adj[mask.trailing_zeros() as usize] != 0
            });
            if hit {
                return Ok(true);
            }
        } else {
            let mut on = vec![false; h.n()];
            for s in 0..h.n() {
                on[s] = true;
                let hit = long_cycle_dfs(&h, k, s, s, 1, &mut on, &mut counter)?;
                on[s] = false;
                if hit {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn long_cycle_dfs(
    g: &SimpleGraph,
    k: usize,
    s: usize,
    v: usize,
    len: usize,
    on: &mut [bool],
    counter: &mut Counter,
) -> Result<bool> {
    counter.tick()?;
    if len >= k && g.has_edge(v, s) {
        return Ok(true);
    }
    // The cycle must come back to `s` through vertices still reachable from
    // `v`, and has at most `len + |reachable|` vertices.
    let reach = reachable_above(g, s, v, on);
    let back = g.neighbors(s).iter().any(|&w| reach[w]);
    if !back || len + reach.iter().filter(|&&r| r).count() < k {
        return Ok(false);
    }
    for &w in g.neighbors(v) {
        if w > s && !on[w] {
            on[w] = true;
            let hit = long_cycle_dfs(g, k, s, w, len + 1, on, counter)?;
            on[w] = false;
            if hit {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Vertices above `s`, off the current path, reachable from `v` through such
/// vertices.
fn reachable_above(g: &SimpleGraph, s: usize, v: usize, on: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            if w > s && !on[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// A feedback vertex set of size at most `k`, trying all subsets by size.
pub fn find_fvs(g: &SimpleGraph, k: usize, budget: &OracleBudget) -> Result<Option<Vec<usize>>> {
    check_size(g, budget)?;
    let n = g.n();
    let mut counter = Counter::new(budget);
    for size in 0..=k.min(n) {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            counter.tick()?;
            let mut keep = vec![true; n];
            for &v in &subset {
                keep[v] = false;
            }
            if g.is_forest_on(&keep) {
                return Ok(Some(subset));
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    Ok(None)
}

pub fn brute_fvs(g: &SimpleGraph, k: usize, budget: &OracleBudget) -> Result<bool> {
    Ok(find_fvs(g, k, budget)?.is_some())
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Maximum induced forest size by include/exclude branching.
pub fn brute_max_induced_forest(g: &SimpleGraph, budget: &OracleBudget) -> Result<usize> {
    check_size(g, budget)?;
    let mut counter = Counter::new(budget);
    let mut best = 0;
    let mut chosen = vec![false; g.n()];
    forest_branch(g, 0, 0, &mut chosen, &mut best, &mut counter)?;
    Ok(best)
}

fn forest_branch(
    g: &SimpleGraph,
    v: usize,
    size: usize,
    chosen: &mut [bool],
    best: &mut usize,
    counter: &mut Counter,
) -> Result<()> {
    counter.tick()?;
    if size + (g.n() - v) <= *best {
        return Ok(());
    }
    if v == g.n() {
        *best = size;
        return Ok(());
    }
    chosen[v] = true;
    if g.is_forest_on(chosen) {
        forest_branch(g, v + 1, size + 1, chosen, best, counter)?;
    }
    chosen[v] = false;
    forest_branch(g, v + 1, size, chosen, best, counter)
}

/// Every induced cycle, as a vertex sequence starting at its smallest vertex.
pub fn induced_cycles(g: &SimpleGraph, budget: &OracleBudget) -> Result<Vec<Vec<usize>>> {
    check_size(g, budget)?;
    let mut counter = Counter::new(budget);
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        induced_dfs(g, s, &mut path, &mut out, &mut counter)?;
    }
    Ok(out)
}

fn induced_dfs(
    g: &SimpleGraph,
    s: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    counter: &mut Counter,
) -> Result<()> {
    counter.tick()?;
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        // No chord from w back into the path interior.
        let len = path.len();
        if len >= 2 && path[1..len - 1].iter().any(|&u| g.has_edge(u, w)) {
            continue;
        }
        path.push(w);
        if len >= 2 && g.has_edge(w, s) {
            if path[1] < w {
                out.push(path.clone());
            }
        } else {
            induced_dfs(g, s, path, out, counter)?;
        }
        path.pop();
    }
    Ok(())
}

/// Every simple cycle (one rotation/direction each), not necessarily induced.
pub fn all_cycles(g: &SimpleGraph, budget: &OracleBudget) -> Result<Vec<Vec<usize>>> {
    check_size(g, budget)?;
    let mut counter = Counter::new(budget);
    let mut out = Vec::new();
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        let mut path = vec![s];
        on[s] = true;
        all_dfs(g, s, &mut path, &mut on, &mut out, &mut counter)?;
        on[s] = false;
    }
    Ok(out)
}

fn all_dfs(
    g: &SimpleGraph,
    s: usize,
    path: &mut Vec<usize>,
    on: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    counter: &mut Counter,
) -> Result<()> {
    counter.tick()?;
    let last = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(last, s) && path[1] < last {
        out.push(path.clone());
    }
    for &w in g.neighbors(last) {
        if w > s && !on[w] {
            on[w] = true;
            path.push(w);
            all_dfs(g, s, path, on, out, counter)?;
            path.pop();
            on[w] = false;
        }
    }
    Ok(())
}

/// `k` pairwise vertex-disjoint cycles chosen from `cycles`.
pub fn pack_cycles(cycles: &[Vec<usize>], k: usize, budget: &OracleBudget) -> Result<Option<Vec<Vec<usize>>>> {
    let mut counter = Counter::new(budget);
    let sets: Vec<u64> = cycles
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let mut order: Vec<usize> = (0..cycles.len()).collect();
    order.sort_by_key(|&i| (sets[i].count_ones(), i));
    let mut chosen = Vec::new();
    if pack_rec(&sets, &order, 0, 0, k, &mut chosen, &mut counter)? {
        Ok(Some(chosen.iter().map(|&i| cycles[i].clone()).collect()))
    } else {
        Ok(None)
    }
}

fn pack_rec(
    sets: &[u64],
    order: &[usize],
    from: usize,
    used: u64,
    k: usize,
    chosen: &mut Vec<usize>,
    counter: &mut Counter,
) -> Result<bool> {
    counter.tick()?;
    if chosen.len() == k {
        return Ok(true);
    }
    for (pos, &i) in order.iter().enumerate().skip(from) {
        if sets[i] & used == 0 {
            chosen.push(i);
            if pack_rec(sets, order, pos + 1, used | sets[i], k, chosen, counter)? {
                return Ok(true);
            }
            chosen.pop();
        }
    }
    Ok(false)
}

/// `k` vertex-disjoint cycles, searched among induced cycles only.
pub fn find_cycle_packing(g: &SimpleGraph, k: usize, budget: &OracleBudget) -> Result<Option<Vec<Vec<usize>>>> {
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let cycles = induced_cycles(g, budget)?;
    pack_cycles(&cycles, k, budget)
}

pub fn brute_cycle_packing(g: &SimpleGraph, k: usize, budget: &OracleBudget) -> Result<bool> {
    Ok(find_cycle_packing(g, k, budget)?.is_some())
}

/// Exact treewidth by the subset recurrence over elimination prefixes.
pub fn brute_treewidth(g: &SimpleGraph) -> Result<usize> {
    let n = g.n();
    if n > 16 {
        return Err(Error::Budget(format!("{n} vertices exceed the treewidth oracle limit 16")));
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    // q(S, v): vertices outside S ∪ {v} reachable from v through S.
    let q = |s: u64, v: usize| -> u32 {
        let mut seen = 1u64 << v;
        let mut stack = vec![v];
        let mut outside = 0u64;
        while let Some(x) = stack.pop() {
            let mut nb = adj[x] & !seen;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << w;
                if s & (1 << w) != 0 {
                    stack.push(w);
                } else {
                    outside |= 1 << w;
                }
            }
        }
        outside.count_ones()
    };
    let full = (1usize << n) - 1;
    let mut tw = vec![u32::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u32::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            best = best.min(tw[prev].max(q(prev as u64, v)));
        }
        tw[s] = best;
    }
    Ok(tw[full] as usize)
}

/// Does deleting `deleted` leave a forest.
pub fn is_forest_after_deleting(g: &SimpleGraph, deleted: &[usize]) -> bool {
    let mut keep = vec![true; g.n()];
    for &v in deleted {
        keep[v] = false;
    }
    let mut uf = UnionFind::new(g.n());
    g.edges().all(|(u, v)| !(keep[u] && keep[v]) || uf.union(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn exact_cycle_on_k4() {
        let k4 = SimpleGraph::complete(4);
        assert!(brute_exact_cycle(&k4, 3, &b()).unwrap());
        assert!(brute_exact_cycle(&k4, 4, &b()).unwrap());
        assert!(!brute_exact_cycle(&k4, 5, &b()).unwrap());
    }

    #[test]
    fn held_karp_basics() {
        let p4 = SimpleGraph::path(4);
        assert_eq!(brute_longest_path(&p4, &b()).unwrap(), 4);
        assert_eq!(brute_longest_cycle(&p4, &b()).unwrap(), 0);
        assert_eq!(brute_longest_cycle(&SimpleGraph::cycle(5), &b()).unwrap(), 5);
        assert_eq!(brute_longest_path(&SimpleGraph::new(1), &b()).unwrap(), 1);
    }

    #[test]
    fn fvs_basics() {
        assert!(brute_fvs(&SimpleGraph::path(6), 0, &b()).unwrap());
        assert!(!brute_fvs(&SimpleGraph::complete(4), 1, &b()).unwrap());
        assert!(brute_fvs(&SimpleGraph::complete(4), 2, &b()).unwrap());
        assert_eq!(brute_max_induced_forest(&SimpleGraph::complete(3), &b()).unwrap(), 2);
    }

    #[test]
    fn packing_basics() {
        let two = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(brute_cycle_packing(&two, 2, &b()).unwrap());
        assert!(!brute_cycle_packing(&SimpleGraph::cycle(6), 2, &b()).unwrap());
        assert_eq!(induced_cycles(&SimpleGraph::complete(4), &b()).unwrap().len(), 4);
        assert_eq!(all_cycles(&SimpleGraph::complete(4), &b()).unwrap().len(), 7);
    }

    #[test]
    fn treewidth_basics() {
        assert_eq!(brute_treewidth(&SimpleGraph::path(6)).unwrap(), 1);
        assert_eq!(brute_treewidth(&SimpleGraph::complete(5)).unwrap(), 4);
        assert_eq!(brute_treewidth(&SimpleGraph::grid(3, 3)).unwrap(), 3);
    }

    #[test]
    fn budgets_fail_loudly() {
        let tight = OracleBudget { max_vertices: 3, max_objects: 10 };
        assert!(matches!(brute_exact_cycle(&SimpleGraph::complete(4), 3, &tight), Err(Error::Budget(_))));
        let few = OracleBudget { max_vertices: 64, max_objects: 2 };
        assert!(matches!(brute_fvs(&SimpleGraph::complete(6), 3, &few), Err(Error::Budget(_))));
    }
}
