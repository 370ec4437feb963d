//! Unit disk / unit square intersection graphs and their grid representations.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

/// Ordered list of plane points; vertex `i` of every derived graph is point `i`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PointCloud {
    pub points: Vec<Point>,
}

impl PointCloud {
    pub fn new(points: Vec<Point>) -> Self {
        PointCloud { points }
    }

    pub fn from_coords(coords: &[(f64, f64)]) -> Self {
        PointCloud::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        for (i, p) in self.points.iter().enumerate() {
            if !p.x.is_finite() || !p.y.is_finite() {
                return Err(Error::Input(format!("point {i} has a non-finite coordinate")));
            }
        }
        Ok(())
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Self {
        PointCloud::new(
            self.points
                .iter()
                .map(|p| Point::new(p.x + dx, p.y + dy))
                .collect(),
        )
    }

    /// Parses the point-file format: one `x y` pair per line, `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let mut coord = |name: &str| -> Result<f64> {
                let tok = parts.next().ok_or_else(|| Error::Parse {
                    line: idx + 1,
                    msg: format!("missing {name} coordinate"),
                })?;
                let val: f64 = tok.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("bad number {tok:?}"),
                })?;
                if !val.is_finite() {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("non-finite coordinate {tok:?}"),
                    });
                }
                Ok(val)
            };
            let x = coord("x")?;
            let y = coord("y")?;
            if parts.next().is_some() {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: "trailing tokens".into(),
                });
            }
            points.push(Point::new(x, y));
        }
        Ok(PointCloud::new(points))
    }

    /// Writes the point-file format. Shortest round-trip float formatting, so
    /// `parse(to_text())` reproduces the cloud exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let _ = writeln!(out, "{} {}", p.x, p.y);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeometricModel {
    /// Radius-1 disks centred at the points.
    Disk,
    /// Axis-parallel unit squares centred at the points.
    Square,
}

impl GeometricModel {
    /// Grid pitch used by the representation.
    fn pitch(self) -> f64 {
        match self {
            GeometricModel::Disk => std::f64::consts::SQRT_2,
            GeometricModel::Square => 1.0,
        }
    }

    fn adjacent(self, a: Point, b: Point) -> bool {
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        match self {
            GeometricModel::Disk => dx * dx + dy * dy <= 4.0,
            GeometricModel::Square => dx.abs() <= 1.0 && dy.abs() <= 1.0,
        }
    }
}

/// A grid cell `(row, col)`, both 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Both coordinate gaps at most 2.
    pub fn is_near(self, other: Cell) -> bool {
        self.row.abs_diff(other.row) <= 2 && self.col.abs_diff(other.col) <= 2
    }
}

/// A cell assignment for every vertex, over a `rows × cols` grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub cell_of: Vec<Cell>,
    pub rows: usize,
    pub cols: usize,
}

impl Representation {
    pub fn new(cell_of: Vec<Cell>, rows: usize, cols: usize) -> Self {
        Representation { cell_of, rows, cols }
    }

    /// Smallest grid covering the given cells.
    pub fn fitted(cell_of: Vec<Cell>) -> Self {
        let rows = cell_of.iter().map(|c| c.row).max().unwrap_or(1);
        let cols = cell_of.iter().map(|c| c.col).max().unwrap_or(1);
        Representation { cell_of, rows, cols }
    }

    pub fn cell(&self, v: usize) -> Cell {
        self.cell_of[v]
    }

    /// Text export: header `cells t t'`, then `vertex i j` (vertex 1-indexed).
    pub fn to_text(&self) -> String {
        let mut out = format!("cells {} {}\n", self.rows, self.cols);
        for (v, c) in self.cell_of.iter().enumerate() {
            let _ = writeln!(out, "{} {} {}", v + 1, c.row, c.col);
        }
        out
    }
}

pub fn build_geometric_graph(cloud: &PointCloud, model: GeometricModel) -> Result<SimpleGraph> {
    if cloud.is_empty() {
        return Err(Error::Input("empty point cloud".into()));
    }
    cloud.validate()?;
    let pts = &cloud.points;
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if model.adjacent(pts[i], pts[j]) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::from_edges(pts.len(), &edges)
}

/// Axis extent rule: `t = t̂ + 1` when `t̂` is integral, `⌈t̂⌉` otherwise.
fn grid_extent(scaled_max: f64) -> usize {
    if scaled_max == scaled_max.ceil() {
        scaled_max as usize + 1
    } else {
        scaled_max.ceil() as usize
    }
}

pub fn compute_representation(cloud: &PointCloud, model: GeometricModel) -> Result<Representation> {
    if cloud.is_empty() {
        return Err(Error::Input("empty point cloud".into()));
    }
    cloud.validate()?;
    let pitch = model.pitch();
    let x_min = cloud.points.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let y_min = cloud.points.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
    let scaled: Vec<(f64, f64)> = cloud
        .points
        .iter()
        .map(|p| ((p.x - x_min) / pitch, (p.y - y_min) / pitch))
        .collect();
    let sx = scaled.iter().map(|s| s.0).fold(0.0, f64::max);
    let sy = scaled.iter().map(|s| s.1).fold(0.0, f64::max);
    let cell_of: Vec<Cell> = scaled
        .iter()
        .map(|&(a, b)| Cell::new((a + 1.0).floor() as usize, (b + 1.0).floor() as usize))
        .collect();
    let rows = grid_extent(sx).max(cell_of.iter().map(|c| c.row).max().unwrap_or(1));
    let cols = grid_extent(sy).max(cell_of.iter().map(|c| c.col).max().unwrap_or(1));
    Ok(Representation::new(cell_of, rows, cols))
}

/// Exhaustive check of the clique and locality conditions.
pub fn verify_representation(g: &SimpleGraph, rep: &Representation) -> bool {
    let n = g.n();
    if rep.cell_of.len() != n {
        return false;
    }
    if rep
        .cell_of
        .iter()
        .any(|c| c.row == 0 || c.col == 0 || c.row > rep.rows || c.col > rep.cols)
    {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            let (cu, cv) = (rep.cell_of[u], rep.cell_of[v]);
            let adjacent = g.has_edge(u, v);
            if cu == cv && !adjacent {
                return false;
            }
            if adjacent && !cu.is_near(cv) {
                return false;
            }
        }
    }
    true
}

/// PACE `.gr` export: `p tw n m` header, 1-indexed edge lines.
pub fn graph_to_gr(g: &SimpleGraph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses a PACE `.gr` file (`c` comment lines allowed).
pub fn graph_from_gr(text: &str) -> Result<SimpleGraph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: &str| Error::Parse {
            line: idx + 1,
            msg: msg.to_string(),
        };
        if toks[0] == "p" {
            if toks.len() != 4 || toks[1] != "tw" {
                return Err(bad("malformed header"));
            }
            n = Some(toks[2].parse::<usize>().map_err(|_| bad("bad vertex count"))?);
            continue;
        }
        let nv = n.ok_or_else(|| bad("edge before header"))?;
        if toks.len() != 2 {
            return Err(bad("edge lines need two endpoints"));
        }
        let u: usize = toks[0].parse().map_err(|_| bad("bad endpoint"))?;
        let v: usize = toks[1].parse().map_err(|_| bad("bad endpoint"))?;
        if u == 0 || v == 0 || u > nv || v > nv {
            return Err(bad("endpoint out of range"));
        }
        edges.push((u - 1, v - 1));
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    SimpleGraph::from_edges(n, &edges)
}
