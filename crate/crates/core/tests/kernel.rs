mod common;

use common::{mixed_instance, ring_cloud};
use gridcycles::cliquegrid::CliqueGridInstance;
use gridcycles::geometry::{GeometricModel, PointCloud};
use gridcycles::kernel::*;
use gridcycles::oracle::{has_cycle_at_least, OracleBudget};
use gridcycles::witness::is_cycle;

fn spans(w: &KernelWindow, k: usize) -> bool {
    w.instance.cells().keys().all(|c| c.row <= 2 * k && c.col <= 2 * k)
}

#[test]
fn windows_cover_and_stay_small() {
    for seed in 0..40 {
        let inst = mixed_instance(80, seed);
        let k = 3 + seed as usize % 4;
        let ws = windows(&inst, k);
        let mut covered = vec![false; inst.n()];
        for w in &ws {
            assert!(spans(w, k));
            for (i, &v) in w.to_original.iter().enumerate() {
                covered[v] = true;
                let (a, b) = (w.instance.cell_of(i), inst.cell_of(v));
                assert_eq!((a.row + w.origin.row - 1, a.col + w.origin.col - 1), (b.row, b.col));
            }
            for (a, b) in w.instance.graph().edges() {
                assert!(inst.graph().has_edge(w.to_original[a], w.to_original[b]));
            }
            if inst.max_cell_size() < k {
                assert!(w.instance.n() <= window_vertex_bound(k));
            }
        }
        assert!(covered.iter().all(|&c| c));
        let kept = maximal_windows(ws.clone(), inst.n());
        for w in &ws {
            assert!(kept.iter().any(|m| w.to_original.iter().all(|v| m.to_original.contains(v))));
        }
    }
}

#[test]
fn large_cell_is_a_shortcut() {
    let c = PointCloud::from_coords(&[(0.5, 0.5); 5]);
    let inst = CliqueGridInstance::from_cloud(&c, GeometricModel::Disk).unwrap();
    assert!(matches!(turing_kernel(&inst, 5, KernelProblem::LongestCycle), KernelOutput::Shortcut(ShortcutReason::LargeCell(_))));
    assert!(matches!(turing_kernel(&inst, 6, KernelProblem::LongestCycle), KernelOutput::Windows(_)));
}

#[test]
fn stretched_ring_is_found() {
    let inst = CliqueGridInstance::from_cloud(&ring_cloud(40, &[]), GeometricModel::Disk).unwrap();
    let cycle = find_stretched_cycle(&inst, 4).expect("a 40-ring spans far more than 8 cells");
    assert!(is_cycle(inst.graph(), &cycle));
    assert!(cycle.len() >= 4);
    assert!(!detect_stretched(&inst, 40));
    let report = kernel_report(&turing_kernel(&inst, 4, KernelProblem::LongestCycle), 4);
    assert!(report.contains("reason=stretched"));
}

#[test]
fn blocks_partition_the_edges() {
    for seed in 0..20 {
        let inst = mixed_instance(40, seed);
        let g = inst.graph();
        let blocks = biconnected_blocks(g);
        for (u, v) in g.edges() {
            assert_eq!(blocks.iter().filter(|b| b.contains(&u) && b.contains(&v)).count(), 1);
        }
    }
}

#[test]
fn windows_decide_long_cycles() {
    let budget = OracleBudget::default();
    for seed in 0..60 {
        let inst = mixed_instance(36, seed);
        let k = 3 + seed as usize % 6;
        let truth = has_cycle_at_least(inst.graph(), k, &budget).unwrap();
        let got = match turing_kernel(&inst, k, KernelProblem::LongestCycle) {
            KernelOutput::Shortcut(_) => true,
            KernelOutput::Windows(ws) => maximal_windows(ws, inst.n())
                .iter()
                .any(|w| has_cycle_at_least(w.instance.graph(), k, &budget).unwrap()),
        };
        assert_eq!(got, truth, "seed {seed} k {k}");
    }
}
