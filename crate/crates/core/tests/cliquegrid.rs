mod common;

use common::mixed_instance;
use gridcycles::cliquegrid::*;
use gridcycles::geometry::{Cell, GeometricModel, PointCloud};
use gridcycles::oracle::{brute_treewidth, has_cycle_at_least, OracleBudget};
use proptest::prelude::*;

#[test]
fn five_clique_cell_has_empty_backbone() {
    let c = PointCloud::from_coords(&[(0.1, 0.1); 5]);
    let inst = CliqueGridInstance::from_cloud(&c, GeometricModel::Disk).unwrap();
    assert!(minimal_backbone(&inst).is_empty());
}

#[test]
fn lone_witness_edge_is_kept() {
    let c = PointCloud::from_coords(&[(0.0, 0.0), (0.0, 1.5)]);
    let inst = CliqueGridInstance::from_cloud(&c, GeometricModel::Disk).unwrap();
    assert_eq!(minimal_backbone(&inst), vec![0, 1]);
}

#[test]
fn backbone_of_a_dense_instance() {
    let inst = mixed_instance(300, 6);
    let h = minimal_backbone(&inst);
    assert!(is_backbone(&inst, &h));
    for i in 0..h.len() {
        let mut less = h.clone();
        less.remove(i);
        assert!(!is_backbone(&inst, &less));
    }
    let (sub, _) = inst.graph().induced(&h);
    assert!(sub.max_degree() <= BACKBONE_DEGREE_BOUND);
    let mut per_cell = std::collections::HashMap::new();
    for &v in &h {
        *per_cell.entry(inst.cell_of(v)).or_insert(0) += 1;
    }
    assert!(per_cell.values().all(|&c| c <= BACKBONE_CELL_BOUND));
}

#[test]
fn cell_graph_of_a_row() {
    let c = PointCloud::from_coords(&[(0.0, 0.0), (0.0, 1.5), (0.0, 3.0)]);
    let inst = CliqueGridInstance::from_cloud(&c, GeometricModel::Disk).unwrap();
    let cg = cell_graph(&inst);
    assert_eq!(cg.cells, vec![Cell::new(1, 1), Cell::new(1, 2), Cell::new(1, 3)]);
    assert_eq!(cg.graph.m(), 2);
}

#[test]
fn contracting_a_triangle_cell() {
    let c = PointCloud::from_coords(&[(0.2, 0.2); 3]);
    let inst = CliqueGridInstance::from_cloud(&c, GeometricModel::Disk).unwrap();
    let (k2, map) = contract_pair(&inst, 0, 2).unwrap();
    assert_eq!(k2.n(), 2);
    assert_eq!(k2.graph().m(), 1);
    assert_eq!(map, vec![0, 1, 0]);
    assert!(matches!(contract_pair(&k2, 0, 0), Err(gridcycles::Error::NotContractible(0, 0))));
}

#[test]
fn cell_graph_treewidth_below_backbone_treewidth() {
    let mut checked = 0;
    for seed in 0..200 {
        let inst = mixed_instance(14, seed);
        let h = minimal_backbone(&inst);
        if h.len() > 12 {
            continue;
        }
        let (sub, _) = inst.graph().induced(&h);
        let cg = cell_graph(&inst);
        assert!(brute_treewidth(&cg.graph).unwrap() <= brute_treewidth(&sub).unwrap());
        checked += 1;
    }
    assert!(checked > 20);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn contraction_keeps_cell_graph_and_never_creates_long_cycles(seed in 0u64..10_000, k in 3usize..7) {
        let inst = mixed_instance(16, seed);
        if let Some((u, v)) = inst.first_contractible_pair() {
            let (small, _) = contract_pair(&inst, u, v).unwrap();
            prop_assert!(gridcycles::geometry::verify_representation(small.graph(), small.rep()));
            prop_assert_eq!(cell_graph(&inst), cell_graph(&small));
            let b = OracleBudget::default();
            let before = has_cycle_at_least(inst.graph(), k, &b).unwrap();
            let after = has_cycle_at_least(small.graph(), k, &b).unwrap();
            prop_assert!(before || !after);
        }
    }
}
