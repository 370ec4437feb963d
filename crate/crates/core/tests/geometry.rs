mod common;

use gridcycles::gen::uniform_cloud;
use gridcycles::geometry::*;
use gridcycles::graph::SimpleGraph;
use proptest::prelude::*;

#[test]
fn boundary_cases_are_edges() {
    let disk = PointCloud::from_coords(&[(0.0, 0.0), (2.0, 0.0)]);
    assert_eq!(build_geometric_graph(&disk, GeometricModel::Disk).unwrap().m(), 1);
    let far = PointCloud::from_coords(&[(0.0, 0.0), (2.5, 0.0)]);
    assert_eq!(build_geometric_graph(&far, GeometricModel::Disk).unwrap().m(), 0);
    let sq = PointCloud::from_coords(&[(0.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
    assert_eq!(build_geometric_graph(&sq, GeometricModel::Square).unwrap(), SimpleGraph::complete(3));
    let gap = PointCloud::from_coords(&[(0.0, 0.0), (1.0, 1.0000001)]);
    assert_eq!(build_geometric_graph(&gap, GeometricModel::Square).unwrap().m(), 0);
}

#[test]
fn sqrt_two_step_changes_column() {
    let c = PointCloud::from_coords(&[(0.0, 0.0), (0.0, 2f64.sqrt())]);
    let rep = compute_representation(&c, GeometricModel::Disk).unwrap();
    assert_eq!(rep.cell(0), Cell::new(1, 1));
    assert_eq!(rep.cell(1), Cell::new(1, 2));
}

#[test]
fn fifty_square_points_verify() {
    let c = uniform_cloud(50, 10.0, 10.0, 3);
    let g = build_geometric_graph(&c, GeometricModel::Square).unwrap();
    let rep = compute_representation(&c, GeometricModel::Square).unwrap();
    assert!(verify_representation(&g, &rep));
}

#[test]
fn verifier_catches_far_edges() {
    let g = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
    let rep = Representation::fitted(vec![Cell::new(1, 1), Cell::new(1, 4)]);
    assert!(!verify_representation(&g, &rep));
    let apart = Representation::fitted(vec![Cell::new(1, 1), Cell::new(1, 1)]);
    assert!(!verify_representation(&SimpleGraph::new(2), &apart));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn representations_always_verify(
        pts in prop::collection::vec((-20.0f64..20.0, -20.0f64..20.0), 1..120),
        square in any::<bool>(),
    ) {
        let model = if square { GeometricModel::Square } else { GeometricModel::Disk };
        let c = PointCloud::from_coords(&pts);
        let g = build_geometric_graph(&c, model).unwrap();
        let rep = compute_representation(&c, model).unwrap();
        prop_assert!(verify_representation(&g, &rep));
    }

    #[test]
    fn translation_keeps_the_graph(
        pts in prop::collection::vec((0.0f64..15.0, 0.0f64..15.0), 1..60),
        dx in -100.0f64..100.0,
        dy in -100.0f64..100.0,
    ) {
        // Shifts by multiples of 1/4 are exact in binary floating point.
        let (dx, dy) = ((dx * 4.0).round() / 4.0, (dy * 4.0).round() / 4.0);
        let c = PointCloud::from_coords(&pts);
        let moved = c.translated(dx, dy);
        for model in [GeometricModel::Disk, GeometricModel::Square] {
            let g = build_geometric_graph(&c, model).unwrap();
            prop_assert_eq!(&g, &build_geometric_graph(&moved, model).unwrap());
            let rep = compute_representation(&moved, model).unwrap();
            prop_assert!(verify_representation(&g, &rep));
        }
    }

    #[test]
    fn disk_edges_are_symmetric(pts in prop::collection::vec((0.0f64..6.0, 0.0f64..6.0), 2..30)) {
        let c = PointCloud::from_coords(&pts);
        let g = build_geometric_graph(&c, GeometricModel::Disk).unwrap();
        for (i, p) in c.points.iter().enumerate() {
            for (j, q) in c.points.iter().enumerate() {
                if i != j {
                    let d2 = (p.x - q.x).powi(2) + (p.y - q.y).powi(2);
                    prop_assert_eq!(g.has_edge(i, j), d2 <= 4.0);
                }
            }
        }
    }
}

#[test]
fn point_files_round_trip() {
    let c = uniform_cloud(30, 4.0, 4.0, 9);
    assert_eq!(PointCloud::parse(&c.to_text()).unwrap(), c);
    assert!(PointCloud::parse("1 2 3\n").is_err());
    assert_eq!(PointCloud::parse("# header\n1 2\n").unwrap().len(), 1);
}
