//! Instance generators and proof-replaying normalizers shared by the
//! integration tests and the acceptance run.

#![allow(dead_code)]

use std::collections::HashMap;

use gridcycles::cliquegrid::CliqueGridInstance;
use gridcycles::gen::{side_for_degree, uniform_cloud};
use gridcycles::geometry::{Cell, GeometricModel, Point, PointCloud};
use gridcycles::graph::SimpleGraph;

pub fn model_for(seed: u64) -> GeometricModel {
    if seed.is_multiple_of(2) {
        GeometricModel::Disk
    } else {
        GeometricModel::Square
    }
}

/// A cloud of `n` points whose expected degree cycles through sparse, medium
/// and dense settings with the seed.
pub fn mixed_cloud(n: usize, seed: u64) -> (PointCloud, GeometricModel) {
    let model = model_for(seed);
    let degree = [1.5, 3.0, 5.0, 8.0][(seed / 2 % 4) as usize];
    // Squares of side 1 cover a quarter of a radius-2 neighbourhood's area.
    let scale = if model == GeometricModel::Square { 0.5 } else { 1.0 };
    let side = side_for_degree(n, degree) * scale;
    (uniform_cloud(n, side, side, seed), model)
}

pub fn mixed_instance(n: usize, seed: u64) -> CliqueGridInstance {
    let (cloud, model) = mixed_cloud(n, seed);
    CliqueGridInstance::from_cloud(&cloud, model).unwrap()
}

/// `L` points on a circle with consecutive gaps just under 2, so the disk
/// graph is the cycle `C_L`; `doubled` points get a coincident twin.
pub fn ring_cloud(len: usize, doubled: &[usize]) -> PointCloud {
    let r = 1.9 / (2.0 * (std::f64::consts::PI / len as f64).sin());
    let mut pts: Vec<Point> = (0..len)
        .map(|i| {
            let a = 2.0 * std::f64::consts::PI * i as f64 / len as f64;
            Point::new(r * a.cos(), r * a.sin())
        })
        .collect();
    for &d in doubled {
        pts.push(pts[d]);
    }
    PointCloud::new(pts)
}

fn pair_key(a: Cell, b: Cell) -> (Cell, Cell) {
    (a.min(b), a.max(b))
}

/// Cross-cell edges of a cycle, per unordered cell pair.
pub fn crossing_counts(inst: &CliqueGridInstance, cycle: &[usize]) -> HashMap<(Cell, Cell), usize> {
    let mut out = HashMap::new();
    let len = cycle.len();
    for i in 0..len {
        let (a, b) = (inst.cell_of(cycle[i]), inst.cell_of(cycle[(i + 1) % len]));
        if a != b {
            *out.entry(pair_key(a, b)).or_insert(0) += 1;
        }
    }
    out
}

pub fn cross_total(inst: &CliqueGridInstance, cycle: &[usize]) -> usize {
    crossing_counts(inst, cycle).values().sum()
}

/// One rerouting step: when some cell pair carries at least six cycle edges,
/// pick two of them, oriented along the cycle, that leave the same cell and
/// share no vertex, and swap them for the two in-cell edges. Returns `None`
/// when every pair carries at most five.
pub fn reroute_once(inst: &CliqueGridInstance, cycle: &[usize]) -> Option<Vec<usize>> {
    let len = cycle.len();
    let counts = crossing_counts(inst, cycle);
    let pair = counts.iter().filter(|(_, &c)| c >= 6).map(|(k, _)| *k).min()?;
    // Positions i with edge (cycle[i], cycle[i+1]) between the two cells.
    let pos: Vec<usize> = (0..len)
        .filter(|&i| {
            let (a, b) = (inst.cell_of(cycle[i]), inst.cell_of(cycle[(i + 1) % len]));
            a != b && pair_key(a, b) == pair
        })
        .collect();
    for (x, &r) in pos.iter().enumerate() {
        for &s in &pos[x + 1..] {
            let shares = |p: usize, q: usize| {
                let e = [cycle[p], cycle[(p + 1) % len]];
                let f = [cycle[q], cycle[(q + 1) % len]];
                e.iter().any(|v| f.contains(v))
            };
            if shares(r, s) || inst.cell_of(cycle[r]) != inst.cell_of(cycle[s]) {
                continue;
            }
            // cycle = u_r v_r Q1 u_s v_s Q2  →  u_r u_s Q1ʳ v_r v_s Q2
            let ur = cycle[r];
            let vr = cycle[(r + 1) % len];
            let us = cycle[s];
            let q1: Vec<usize> = (r + 2..s).map(|i| cycle[i % len]).collect();
            let rest: Vec<usize> = (s + 1..r + len).map(|i| cycle[i % len]).collect();
            let mut out = vec![ur, us];
            out.extend(q1.iter().rev());
            out.push(vr);
            out.extend(rest);
            return Some(out);
        }
    }
    panic!("six edges between two cells always contain a usable pair");
}

/// Applies [`reroute_once`] until no cell pair carries six edges, checking
/// that the vertex set is kept, the result stays a cycle and the number of
/// crossing edges drops at every step. Returns the final cycle and the number
/// of steps.
pub fn normalize_crossings(inst: &CliqueGridInstance, cycle: &[usize]) -> (Vec<usize>, usize) {
    let g = inst.graph();
    let mut cur = cycle.to_vec();
    let mut steps = 0;
    let mut cross = cross_total(inst, &cur);
    while let Some(next) = reroute_once(inst, &cur) {
        assert!(gridcycles::witness::is_cycle(g, &next), "rerouted sequence is not a cycle");
        let mut a = cur.clone();
        let mut b = next.clone();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b, "rerouting changed the vertex set");
        let c = cross_total(inst, &next);
        assert!(c < cross, "crossing count did not drop");
        cross = c;
        cur = next;
        steps += 1;
    }
    (cur, steps)
}

/// `C` crosses the ordered pair `(a, b)`: edges `{u, w}`, `{v, r}` of `C` with
/// `u, v` in `a` and distinct `w, r` in `b`.
fn crosses_ordered(inst: &CliqueGridInstance, c: &[usize], a: Cell, b: Cell) -> bool {
    let len = c.len();
    let mut ends_in_b = Vec::new();
    for i in 0..len {
        let (x, y) = (c[i], c[(i + 1) % len]);
        for (p, q) in [(x, y), (y, x)] {
            if inst.cell_of(p) == a && inst.cell_of(q) == b {
                ends_in_b.push(q);
            }
        }
    }
    ends_in_b.sort_unstable();
    ends_in_b.dedup();
    ends_in_b.len() >= 2
}

fn crosses_pair(inst: &CliqueGridInstance, c: &[usize], a: Cell, b: Cell) -> bool {
    crosses_ordered(inst, c, a, b) || crosses_ordered(inst, c, b, a)
}

/// `C` crosses `(a, b, d)`: an edge `a`–`b` and an edge `b`–`d`.
fn crosses_triple_ordered(inst: &CliqueGridInstance, c: &[usize], a: Cell, b: Cell, d: Cell) -> bool {
    let len = c.len();
    let has = |x: Cell, y: Cell| {
        (0..len).any(|i| {
            let (p, q) = (inst.cell_of(c[i]), inst.cell_of(c[(i + 1) % len]));
            (p, q) == (x, y) || (q, p) == (x, y)
        })
    };
    has(a, b) && has(b, d)
}

fn crosses_triple(inst: &CliqueGridInstance, c: &[usize], t: [Cell; 3]) -> bool {
    let [a, b, d] = t;
    [(a, b, d), (a, d, b), (b, a, d), (b, d, a), (d, a, b), (d, b, a)]
        .iter()
        .any(|&(x, y, z)| crosses_triple_ordered(inst, c, x, y, z))
}

pub fn family_cross(inst: &CliqueGridInstance, fam: &[Vec<usize>]) -> usize {
    fam.iter().map(|c| cross_total(inst, c)).sum()
}

fn cells_touched(inst: &CliqueGridInstance, fam: &[Vec<usize>]) -> Vec<Cell> {
    let mut cells: Vec<Cell> = fam.iter().flatten().map(|&v| inst.cell_of(v)).collect();
    cells.sort_unstable();
    cells.dedup();
    cells
}

fn in_cell(inst: &CliqueGridInstance, cycles: &[&Vec<usize>], c: Cell) -> Vec<usize> {
    let mut v: Vec<usize> = cycles.iter().flat_map(|x| x.iter().copied()).filter(|&v| inst.cell_of(v) == c).collect();
    v.sort_unstable();
    v
}

/// A family violating simplicity, as the indices of three offending cycles and
/// the cells involved.
fn violation(inst: &CliqueGridInstance, fam: &[Vec<usize>]) -> Option<(Vec<usize>, Vec<Cell>)> {
    let cells = cells_touched(inst, fam);
    for (i, &a) in cells.iter().enumerate() {
        for &b in &cells[i + 1..] {
            let hit: Vec<usize> = (0..fam.len()).filter(|&x| crosses_pair(inst, &fam[x], a, b)).collect();
            if hit.len() >= 3 {
                return Some((hit[..3].to_vec(), vec![a, b]));
            }
        }
    }
    for (i, &a) in cells.iter().enumerate() {
        for (j, &b) in cells.iter().enumerate().skip(i + 1) {
            for &d in &cells[j + 1..] {
                let hit: Vec<usize> = (0..fam.len()).filter(|&x| crosses_triple(inst, &fam[x], [a, b, d])).collect();
                if hit.len() >= 3 {
                    return Some((hit[..3].to_vec(), vec![a, b, d]));
                }
            }
        }
    }
    None
}

/// One replacement step towards a simple family; `None` once simple.
pub fn simplify_once(inst: &CliqueGridInstance, fam: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let (idx, cells) = violation(inst, fam)?;
    let tri = |vs: &[usize], skip: usize| vs[3 * skip..3 * skip + 3].to_vec();
    let mut replaced: Vec<usize> = Vec::new();
    let mut fresh: Vec<Vec<usize>> = Vec::new();
    if cells.len() == 2 {
        let (a, b) = (cells[0], cells[1]);
        let mut done = false;
        'pairs: for x in 0..3 {
            for y in x + 1..3 {
                let two = [&fam[idx[x]], &fam[idx[y]]];
                let (va, vb) = (in_cell(inst, &two, a), in_cell(inst, &two, b));
                if va.len() >= 3 && vb.len() >= 3 {
                    replaced = vec![idx[x], idx[y]];
                    fresh = vec![tri(&va, 0), tri(&vb, 0)];
                    done = true;
                    break 'pairs;
                }
            }
        }
        if !done {
            let three = [&fam[idx[0]], &fam[idx[1]], &fam[idx[2]]];
            let (va, vb) = (in_cell(inst, &three, a), in_cell(inst, &three, b));
            replaced = idx.clone();
            fresh = if va.len() == 3 && vb.len() >= 6 {
                vec![tri(&va, 0), tri(&vb, 0), tri(&vb, 1)]
            } else if vb.len() == 3 && va.len() >= 6 {
                vec![tri(&vb, 0), tri(&va, 0), tri(&va, 1)]
            } else {
                panic!("no replacement rule applies to three cycles crossing a cell pair");
            };
        }
    } else {
        let three = [&fam[idx[0]], &fam[idx[1]], &fam[idx[2]]];
        replaced = idx.clone();
        fresh = cells.iter().map(|&c| tri(&in_cell(inst, &three, c), 0)).collect();
    }
    let mut out: Vec<Vec<usize>> = fam
        .iter()
        .enumerate()
        .filter(|(i, _)| !replaced.contains(i))
        .map(|(_, c)| c.clone())
        .collect();
    out.extend(fresh);
    Some(out)
}

/// Replays the simple-set replacement rules until the family is simple,
/// checking disjointness, cycle-ness and a strictly dropping crossing count.
pub fn normalize_family(inst: &CliqueGridInstance, fam: &[Vec<usize>]) -> (Vec<Vec<usize>>, usize) {
    let g: &SimpleGraph = inst.graph();
    let mut cur = fam.to_vec();
    let mut cross = family_cross(inst, &cur);
    let mut steps = 0;
    while let Some(next) = simplify_once(inst, &cur) {
        assert_eq!(next.len(), cur.len());
        assert!(gridcycles::witness::verify_witness(
            g,
            gridcycles::witness::Problem::CyclePacking,
            next.len(),
            &gridcycles::witness::Witness::CycleFamily(next.clone())
        ));
        let c = family_cross(inst, &next);
        assert!(c < cross, "crossing count did not drop");
        cross = c;
        cur = next;
        steps += 1;
    }
    (cur, steps)
}

pub fn is_simple(inst: &CliqueGridInstance, fam: &[Vec<usize>]) -> bool {
    violation(inst, fam).is_none()
}

/// `2m` points in two side-by-side disk cells, alternating between them, so
/// the graph is `K_2m` and the cycle `0, 1, …, 2m−1` crosses at every edge.
pub fn two_cell_cloud(m: usize, seed: u64) -> PointCloud {
    use rand::Rng;
    let mut r = gridcycles::gen::rng(seed);
    let pts = (0..2 * m)
        .map(|i| {
            // Point 0 pins the left edge at x = 0.
            let x = if i == 0 { 0.0 } else if i % 2 == 0 { r.gen_range(0.0..0.1) } else { r.gen_range(1.5..1.9) };
            Point::new(x, r.gen_range(0.0..0.4))
        })
        .collect();
    PointCloud::new(pts)
}
