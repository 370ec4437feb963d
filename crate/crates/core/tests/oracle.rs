//! The oracles checked against independent, slower computations.

use gridcycles::graph::SimpleGraph;
use gridcycles::oracle::*;
use gridcycles::witness::is_cycle;
use proptest::prelude::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    let es: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a % n, b % n)).filter(|(a, b)| a != b).collect();
    SimpleGraph::from_edges(n, &es).unwrap()
}

fn permutations(items: &mut [usize], k: usize, out: &mut Vec<Vec<usize>>) {
    fn rec(items: &[usize], k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                cur.push(items[i]);
                rec(items, k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut used = vec![false; items.len()];
    rec(items, k, &mut Vec::new(), &mut used, out);
}

/// Longest path and cycle by listing every vertex sequence.
fn by_permutation(g: &SimpleGraph) -> (usize, usize) {
    let mut all: Vec<usize> = (0..g.n()).collect();
    let (mut path, mut cycle) = (0, 0);
    for k in 1..=g.n() {
        let mut seqs = Vec::new();
        permutations(&mut all, k, &mut seqs);
        for s in seqs {
            if s.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                path = path.max(k);
                if k >= 3 && g.has_edge(s[0], s[k - 1]) {
                    cycle = cycle.max(k);
                }
            }
        }
    }
    (path, cycle)
}

fn trace_cubed_over_six(g: &SimpleGraph) -> usize {
    let n = g.n();
    let a: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| g.has_edge(i, j) as u64).collect()).collect();
    let mut t = 0;
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                t += a[i][j] * a[j][l] * a[l][i];
            }
        }
    }
    (t / 6) as usize
}

fn min_fvs_by_mask(g: &SimpleGraph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|m| {
            let keep: Vec<bool> = (0..n).map(|v| m >> v & 1 == 0).collect();
            g.is_forest_on(&keep)
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

#[test]
fn named_graphs() {
    let b = OracleBudget::default();
    assert_eq!(brute_longest_cycle(&SimpleGraph::complete(6), &b).unwrap(), 6);
    assert_eq!(brute_longest_cycle(&SimpleGraph::path(6), &b).unwrap(), 0);
    assert_eq!(brute_longest_path(&SimpleGraph::grid(3, 3), &b).unwrap(), 9);
    assert_eq!(brute_longest_cycle(&SimpleGraph::grid(3, 3), &b).unwrap(), 8);
    assert!(brute_fvs(&SimpleGraph::complete(5), 3, &b).unwrap());
    assert!(!brute_fvs(&SimpleGraph::complete(5), 2, &b).unwrap());
    assert!(!brute_cycle_packing(&SimpleGraph::complete(5), 2, &b).unwrap());
    assert!(brute_cycle_packing(&SimpleGraph::complete(6), 2, &b).unwrap());
    assert_eq!(brute_treewidth(&SimpleGraph::grid(4, 4)).unwrap(), 4);
}

#[test]
fn budgets_fail_loudly() {
    let small = OracleBudget { max_vertices: 5, max_objects: 1_000 };
    assert!(matches!(brute_exact_cycle(&SimpleGraph::complete(6), 6, &small), Err(gridcycles::Error::Budget(_))));
    let tiny = OracleBudget { max_vertices: 64, max_objects: 10 };
    assert!(matches!(find_fvs(&SimpleGraph::complete(12), 9, &tiny), Err(gridcycles::Error::Budget(_))));
}

#[test]
fn long_cycle_search_beyond_the_subset_dp() {
    // One component of 30 vertices: the ring forces the search path.
    let g = SimpleGraph::cycle(30);
    let b = OracleBudget::default();
    assert!(has_cycle_at_least(&g, 30, &b).unwrap());
    assert!(!has_cycle_at_least(&g, 31, &b).unwrap());
    assert!(has_path_at_least(&g, 30, &b).unwrap());
    assert!(!has_path_at_least(&SimpleGraph::path(30), 31, &b).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triangles_match_the_trace(n in 3usize..10, edges in prop::collection::vec((0usize..10, 0usize..10), 0..30)) {
        let g = graph(n, &edges);
        let b = OracleBudget::default();
        let tri = all_cycles(&g, &b).unwrap().iter().filter(|c| c.len() == 3).count();
        prop_assert_eq!(tri, trace_cubed_over_six(&g));
        prop_assert_eq!(brute_exact_cycle(&g, 3, &b).unwrap(), tri > 0);
    }

    #[test]
    fn subset_dp_matches_permutations(n in 1usize..8, edges in prop::collection::vec((0usize..8, 0usize..8), 0..18)) {
        let g = graph(n, &edges);
        let b = OracleBudget::default();
        let (path, cycle) = by_permutation(&g);
        prop_assert_eq!(brute_longest_path(&g, &b).unwrap(), path);
        prop_assert_eq!(brute_longest_cycle(&g, &b).unwrap(), cycle);
        for k in 0..=n + 1 {
            prop_assert_eq!(has_path_at_least(&g, k, &b).unwrap(), path >= k);
            prop_assert_eq!(has_cycle_at_least(&g, k, &b).unwrap(), cycle >= k.max(3));
            if k >= 3 {
                if let Some(c) = find_exact_cycle(&g, k, &b).unwrap() {
                    prop_assert!(is_cycle(&g, &c) && c.len() == k);
                }
            }
        }
    }

    #[test]
    fn fvs_and_forest_are_dual(n in 1usize..12, edges in prop::collection::vec((0usize..12, 0usize..12), 0..30)) {
        let g = graph(n, &edges);
        let b = OracleBudget::default();
        let opt = min_fvs_by_mask(&g);
        prop_assert_eq!(brute_max_induced_forest(&g, &b).unwrap(), n - opt);
        prop_assert!(brute_fvs(&g, opt, &b).unwrap());
        if opt > 0 {
            prop_assert!(!brute_fvs(&g, opt - 1, &b).unwrap());
        }
        let s = find_fvs(&g, opt, &b).unwrap().unwrap();
        prop_assert!(is_forest_after_deleting(&g, &s));
    }

    #[test]
    fn induced_packing_matches_general(n in 3usize..10, edges in prop::collection::vec((0usize..10, 0usize..10), 0..24)) {
        let g = graph(n, &edges);
        let b = OracleBudget::default();
        let every = all_cycles(&g, &b).unwrap();
        let induced = induced_cycles(&g, &b).unwrap();
        prop_assert!(induced.iter().all(|c| is_cycle(&g, c)));
        for k in 0..=n / 3 + 1 {
            prop_assert_eq!(
                pack_cycles(&every, k, &b).unwrap().is_some(),
                brute_cycle_packing(&g, k, &b).unwrap()
            );
        }
    }
}
