mod common;

use common::*;
use gridcycles::cliquegrid::CliqueGridInstance;
use gridcycles::cycles::SolverOptions;
use gridcycles::decomp::{solver_cell_nctd, DEFAULT_NODE_BUDGET};
use gridcycles::geometry::GeometricModel;
use gridcycles::hitting::*;
use gridcycles::oracle::*;
use gridcycles::witness::{is_cycle, verify_witness, Problem};

fn opts() -> SolverOptions {
    SolverOptions::default()
}

#[test]
fn fvs_matches_the_oracle() {
    let b = OracleBudget::default();
    for seed in 0..60 {
        let inst = mixed_instance(6 + seed as usize % 15, seed + 7000);
        for k in 0..=5 {
            let r = fvs(&inst, k, &opts()).unwrap();
            assert_eq!(r.answer, brute_fvs(inst.graph(), k, &b).unwrap(), "seed {seed} k {k}");
            if r.answer {
                assert!(verify_witness(inst.graph(), Problem::Fvs, k, r.witness.as_ref().unwrap()));
            }
        }
    }
}

#[test]
fn forest_and_hitting_set_are_dual() {
    let b = OracleBudget::default();
    for seed in 0..40 {
        let inst = mixed_instance(8 + seed as usize % 12, seed + 8000);
        let nctd = solver_cell_nctd(&inst, DEFAULT_NODE_BUDGET);
        let pruned = mif_dp(&inst, &nctd, true, true).unwrap();
        let full = mif_dp(&inst, &nctd, false, false).unwrap();
        assert_eq!(pruned.size, full.size);
        assert_eq!(pruned.size, brute_max_induced_forest(inst.graph(), &b).unwrap());
        let forest = pruned.forest.unwrap();
        assert_eq!(forest.len(), pruned.size);
        let deleted: Vec<usize> = (0..inst.n()).filter(|v| !forest.contains(v)).collect();
        assert!(is_forest_after_deleting(inst.graph(), &deleted));
        let opt = inst.n() - pruned.size;
        assert!(fvs(&inst, opt, &opts()).unwrap().answer);
        if opt > 0 {
            assert!(!fvs(&inst, opt - 1, &opts()).unwrap().answer);
        }
    }
}

#[test]
fn packing_matches_the_oracle() {
    let b = OracleBudget::default();
    let faithful = SolverOptions { faithful_caps: true, ..opts() };
    let plain = SolverOptions { prune: false, ..opts() };
    for seed in 0..50 {
        let inst = mixed_instance(6 + seed as usize % 12, seed + 9000);
        for k in 0..=3 {
            let r = cycle_packing(&inst, k, &opts()).unwrap();
            assert_eq!(r.answer, brute_cycle_packing(inst.graph(), k, &b).unwrap(), "seed {seed} k {k}");
            if r.answer {
                assert!(verify_witness(inst.graph(), Problem::CyclePacking, k, r.witness.as_ref().unwrap()));
            }
            assert_eq!(r.answer, cycle_packing(&inst, k, &faithful).unwrap().answer);
            assert_eq!(r.answer, cycle_packing(&inst, k, &plain).unwrap().answer);
        }
    }
}

#[test]
fn packing_witnesses_are_induced() {
    for seed in 0..30 {
        let inst = mixed_instance(13, seed + 9500);
        if let Some(gridcycles::witness::Witness::CycleFamily(fam)) = cycle_packing(&inst, 2, &opts()).unwrap().witness {
            for c in fam {
                assert_eq!(shortcut_to_induced(inst.graph(), &c), c);
            }
        }
    }
}

#[test]
fn crossing_families_become_simple() {
    for seed in 0..20 {
        let m = 6 + seed as usize % 4;
        let inst = CliqueGridInstance::from_cloud(&two_cell_cloud(m, seed), GeometricModel::Disk).unwrap();
        // Three 4-cycles a b a' b', each crossing the cell pair twice.
        let fam: Vec<Vec<usize>> = (0..3).map(|i| vec![4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3]).collect();
        assert!(fam.iter().all(|c| is_cycle(inst.graph(), c)));
        assert!(!is_simple(&inst, &fam));
        let (out, steps) = normalize_family(&inst, &fam);
        assert!(steps >= 1);
        assert!(is_simple(&inst, &out));
        assert_eq!(out.len(), 3);
    }
}

#[test]
fn solver_families_become_simple() {
    let mut checked = 0;
    for seed in 0..60 {
        let inst = mixed_instance(14, seed + 9700);
        if let Some(gridcycles::witness::Witness::CycleFamily(fam)) = cycle_packing(&inst, 3, &opts()).unwrap().witness {
            let (out, _) = normalize_family(&inst, &fam);
            assert!(is_simple(&inst, &out));
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn caps_follow_the_mode() {
    let inst = mixed_instance(20, 1);
    let nctd = solver_cell_nctd(&inst, DEFAULT_NODE_BUDGET);
    let cells = nctd.cells_per_bag();
    assert_eq!(packing_caps(&nctd, 2, false, true), Default::default());
    assert_eq!(packing_caps(&nctd, 2, true, true).endpoints, Some(CROSSING_BOUND * cells));
    assert_eq!(packing_caps(&nctd, 2, true, false).chosen, Some(6 * cells));
}
