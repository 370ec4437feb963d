//! Seeded random point clouds. All randomness comes from a ChaCha8 stream
//! keyed by one `u64`, so a seed reproduces a cloud on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Point, PointCloud};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points uniform in `[0, width] × [0, height]`.
pub fn uniform_cloud(n: usize, width: f64, height: f64, seed: u64) -> PointCloud {
    let mut r = rng(seed);
    uniform_cloud_with(&mut r, n, width, height)
}

pub fn uniform_cloud_with(r: &mut impl Rng, n: usize, width: f64, height: f64) -> PointCloud {
    let points = (0..n)
        .map(|_| Point::new(r.gen_range(0.0..=width), r.gen_range(0.0..=height)))
        .collect();
    PointCloud::new(points)
}

/// Side of the square box that gives `n` points roughly `avg_degree`
/// expected neighbours under the disk model (area `4π` per neighbourhood).
pub fn side_for_degree(n: usize, avg_degree: f64) -> f64 {
    let area = n.max(1) as f64 * 4.0 * std::f64::consts::PI / avg_degree.max(0.1);
    area.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_reproduce() {
        assert_eq!(uniform_cloud(20, 5.0, 5.0, 7), uniform_cloud(20, 5.0, 5.0, 7));
        assert_ne!(uniform_cloud(20, 5.0, 5.0, 7), uniform_cloud(20, 5.0, 5.0, 8));
        assert!(uniform_cloud(0, 5.0, 5.0, 1).is_empty());
    }

    #[test]
    fn points_stay_in_the_box() {
        let c = uniform_cloud(200, 3.0, 2.0, 11);
        assert!(c.points.iter().all(|p| (0.0..=3.0).contains(&p.x) && (0.0..=2.0).contains(&p.y)));
    }
}
