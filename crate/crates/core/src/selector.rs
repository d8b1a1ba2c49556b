//! Lattice-based selection and colouring of disks.
//!
//! Every solver positions a lattice, keeps at most one disk per lattice
//! point and gives it that point's colour. Lattice points of one colour are
//! at least 4 apart and a unit disk holds at most one lattice point, so
//! same-coloured selected disks never overlap.

use std::f64::consts::PI;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::arrangement::{max_distinct_translate_depth, translate_to_cell};
use crate::bounds;
use crate::error::{Error, Result};
use crate::geom::{circle_polygon_intersection_area, delta_closed_form, Circle, Point};
use crate::lattice::{
    alpha_k, loeschian_decompose, AnyLattice, Lattice, LoeschianColouring, SquareLattice,
    TriColouring, TriLattice,
};
use crate::spatial::BucketGrid;
use crate::union_area::{exact_union_area, DiskSet};

/// Center distance below `2r − DISJOINT_TOL` counts as an overlap, so
/// tangent disks are disjoint.
pub const DISJOINT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// 3 colours, lattice at the deepest arrangement point.
    Basic3,
    /// 3 colours, lattice offset maximizing captured hexagon area.
    Weighted3,
    /// 1 colour, side-4 lattice.
    Rado1,
    /// 2 colours, side `2√2` square lattice.
    Square2,
    /// k colours from a Löschian sublattice colouring.
    KColour(i64),
}

impl Method {
    pub fn colours(&self) -> usize {
        match self {
            Method::Basic3 | Method::Weighted3 => 3,
            Method::Rado1 => 1,
            Method::Square2 => 2,
            Method::KColour(k) => *k as usize,
        }
    }

    /// Ratio `A_C / A` the method provably reaches.
    pub fn guarantee(&self) -> f64 {
        match self {
            // the weighted search always evaluates the basic offset
            Method::Basic3 | Method::Weighted3 => 3f64.sqrt() / 8.0 * delta_closed_form(),
            Method::Rado1 => PI / (8.0 * 3f64.sqrt()),
            Method::Square2 => delta_square_cached() / 8.0,
            Method::KColour(k) => bounds::kcolour_guarantee(*k).unwrap_or(0.0),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Basic3 => write!(f, "basic3"),
            Method::Weighted3 => write!(f, "weighted3"),
            Method::Rado1 => write!(f, "rado1"),
            Method::Square2 => write!(f, "square2"),
            Method::KColour(k) => write!(f, "kcolour{k}"),
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic3" => Ok(Method::Basic3),
            "weighted3" => Ok(Method::Weighted3),
            "rado1" => Ok(Method::Rado1),
            "square2" => Ok(Method::Square2),
            _ => s
                .strip_prefix("kcolour")
                .and_then(|k| k.parse().ok())
                .map(Method::KColour)
                .ok_or_else(|| Error::invalid(format!("unknown method {s:?}"))),
        }
    }
}

fn delta_square_cached() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    *CELL.get_or_init(bounds::delta_square)
}

/// Per-disk colours (`None` = not selected) plus the lattice that produced
/// them.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    pub labels: Vec<Option<usize>>,
    pub k: usize,
    pub method: Method,
    pub lattice: AnyLattice,
}

impl Assignment {
    pub fn selected_count(&self) -> usize {
        self.labels.iter().filter(|l| l.is_some()).count()
    }

    pub fn selected_indices(&self) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&i| self.labels[i].is_some())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageReport {
    /// `A`: union area of all disks.
    pub union_area: f64,
    /// `A_C`: union area of the selected disks.
    pub selected_area: f64,
    /// `A_C / A`, and 1 for an empty instance.
    pub ratio: f64,
    pub guarantee: f64,
    pub lattice_points_hit: usize,
    /// Sum over hit lattice points of the best selected disk's area inside
    /// the point's Voronoi cell. A lower bound on `selected_area`.
    pub cell_accounting: f64,
    pub offset: Point,
}

/// Candidate offsets searched by the weighted solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingSpec {
    /// `grid × grid` cell-midpoint offsets over the fundamental cell.
    pub grid: usize,
    /// Crossings of the circles translated into the fundamental cell.
    pub include_vertices: bool,
    /// Offsets putting a lattice point on a disk center.
    pub include_centers: bool,
}

impl Default for SamplingSpec {
    fn default() -> Self {
        SamplingSpec {
            grid: 256,
            include_vertices: true,
            include_centers: true,
        }
    }
}

/// Result of keeping one disk per covered lattice point.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSelection {
    pub labels: Vec<Option<usize>>,
    /// Sum of the chosen disks' areas inside their points' Voronoi cells.
    pub weight: f64,
    pub hits: usize,
}

/// For each lattice point inside the union, the containing disk with the
/// largest area inside the point's Voronoi cell (lowest index on ties),
/// coloured by the point.
pub fn select_at<L: Lattice>(disks: &DiskSet, lattice: &L) -> LatticeSelection {
    let mut hits: Vec<((i64, i64), usize, f64)> = Vec::new();
    for (idx, circle) in disks.circles().enumerate() {
        let (i, j) = lattice.nearest(circle.center);
        if circle.contains(lattice.point(i, j)) {
            let area = circle_polygon_intersection_area(&circle, &lattice.voronoi_cell(i, j));
            hits.push(((i, j), idx, area));
        }
    }
    hits.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut labels = vec![None; disks.len()];
    let mut weight = 0.0;
    let mut count = 0;
    let mut k = 0;
    while k < hits.len() {
        let (ij, mut best_idx, mut best_area) = hits[k];
        let mut m = k + 1;
        while m < hits.len() && hits[m].0 == ij {
            if hits[m].2 > best_area + 1e-12 {
                best_idx = hits[m].1;
                best_area = hits[m].2;
            }
            m += 1;
        }
        labels[best_idx] = Some(lattice.colour(ij.0, ij.1));
        weight += best_area;
        count += 1;
        k = m;
    }
    LatticeSelection {
        labels,
        weight,
        hits: count,
    }
}

fn require_unit(disks: &DiskSet) -> Result<()> {
    if disks.radius() != 1.0 {
        return Err(Error::invalid(format!(
            "solvers need unit disks, got radius {}",
            disks.radius()
        )));
    }
    Ok(())
}

/// Offset putting a lattice point at the deepest point of the arrangement
/// of the disks translated into the cell of `base`.
fn deepest_offset<L: Lattice>(disks: &DiskSet, base: &L) -> Point {
    let translated = translate_to_cell(disks, base);
    match max_distinct_translate_depth(&translated) {
        Ok(w) => w.point,
        Err(_) => base.offset(),
    }
}

fn solve_positioned(
    disks: &DiskSet,
    base: AnyLattice,
    method: Method,
) -> Result<(Assignment, CoverageReport)> {
    require_unit(disks)?;
    let lattice = if disks.is_empty() {
        base
    } else {
        base.with_offset(deepest_offset(disks, &base))
    };
    let sel = select_at(disks, &lattice);
    let assignment = Assignment {
        labels: sel.labels,
        k: method.colours(),
        method,
        lattice,
    };
    let report = report(disks, &assignment);
    Ok((assignment, report))
}

/// 3 colours: lattice of side `4/√3` placed where it hits the most disks.
pub fn solve_basic_3colour(disks: &DiskSet) -> Result<(Assignment, CoverageReport)> {
    let base = AnyLattice::Tri(TriLattice::three_colour(Point::ORIGIN));
    solve_positioned(disks, base, Method::Basic3)
}

/// 1 colour: lattice of side 4 placed where it hits the most disks.
pub fn solve_rado_1colour(disks: &DiskSet) -> Result<(Assignment, CoverageReport)> {
    let base = AnyLattice::Tri(TriLattice::rado(Point::ORIGIN));
    solve_positioned(disks, base, Method::Rado1)
}

/// 2 colours: checkerboard square lattice of side `2√2` placed where it
/// hits the most disks.
pub fn solve_square_2colour(disks: &DiskSet) -> Result<(Assignment, CoverageReport)> {
    let base = AnyLattice::Square(SquareLattice::two_colour(Point::ORIGIN));
    solve_positioned(disks, base, Method::Square2)
}

/// 3 colours: among sampled offsets, the one maximizing the summed area
/// the chosen disks capture inside their lattice points' hexagons. Ties go
/// to the lexicographically smallest offset.
pub fn solve_weighted_3colour(
    disks: &DiskSet,
    spec: &SamplingSpec,
) -> Result<(Assignment, CoverageReport)> {
    require_unit(disks)?;
    if spec.grid == 0 {
        return Err(Error::invalid("sampling grid must be at least 1"));
    }
    let base = TriLattice::three_colour(Point::ORIGIN);
    if disks.is_empty() {
        let assignment = Assignment {
            labels: Vec::new(),
            k: 3,
            method: Method::Weighted3,
            lattice: AnyLattice::Tri(base),
        };
        let report = report(disks, &assignment);
        return Ok((assignment, report));
    }

    let candidates = candidate_offsets(disks, &base, spec);
    let (offset, _) = candidates
        .par_iter()
        .map(|&q| (q, select_at(disks, &base.with_offset(q)).weight))
        .reduce_with(|a, b| {
            if b.1 > a.1 || (b.1 == a.1 && b.0.lex_cmp(&a.0).is_lt()) {
                b
            } else {
                a
            }
        })
        .expect("basic offset is always a candidate");

    let lattice = base.with_offset(offset);
    let sel = select_at(disks, &lattice);
    let assignment = Assignment {
        labels: sel.labels,
        k: 3,
        method: Method::Weighted3,
        lattice: AnyLattice::Tri(lattice),
    };
    let report = report(disks, &assignment);
    Ok((assignment, report))
}

fn candidate_offsets(disks: &DiskSet, base: &TriLattice, spec: &SamplingSpec) -> Vec<Point> {
    let (u, v) = base.basis();
    let translated = translate_to_cell(disks, base);
    let mut out = vec![max_distinct_translate_depth(&translated)
        .map(|w| w.point)
        .unwrap_or(Point::ORIGIN)];
    if spec.include_centers {
        out.extend(disks.centers().iter().map(|&c| base.wrap_to_cell(c).0));
    }
    let g = spec.grid as f64;
    for a in 0..spec.grid {
        for b in 0..spec.grid {
            out.push(u * ((a as f64 + 0.5) / g) + v * ((b as f64 + 0.5) / g));
        }
    }
    if spec.include_vertices {
        let circles: Vec<Circle> = translated.iter().map(|t| t.circle).collect();
        let grid = BucketGrid::new(circles.iter().map(|c| c.center), 2.0 * disks.radius());
        for (i, c) in circles.iter().enumerate() {
            for j in grid.near(c.center).into_iter().filter(|&j| j > i) {
                if let Some((p, q)) = c.boundary_intersections(&circles[j]) {
                    out.push(p);
                    out.push(q);
                }
            }
        }
    }
    out
}

/// `k` colours via the Löschian sublattice colouring of a triangular
/// lattice scaled so same-coloured cells are 2 apart. Each disk falls in
/// the Voronoi cell holding its center; per cell the disk nearest the
/// lattice point is kept (lowest index on ties). `k = 1` uses the 1-colour
/// solver since the scaled lattice does not exist there.
pub fn solve_kcolour(disks: &DiskSet, k: i64) -> Result<(Assignment, CoverageReport)> {
    require_unit(disks)?;
    if loeschian_decompose(k)?.is_none() {
        return Err(Error::NotLoeschian(k));
    }
    if k == 1 {
        return solve_rado_1colour(disks);
    }
    let colouring = TriColouring::Loeschian(LoeschianColouring::new(k)?);
    let lattice = TriLattice::new(alpha_k(k), Point::ORIGIN, colouring)?;

    let mut cells: Vec<((i64, i64), f64, usize)> = disks
        .centers()
        .iter()
        .enumerate()
        .map(|(idx, &c)| {
            let ij = lattice.nearest(c);
            (ij, c.dist(lattice.point(ij.0, ij.1)), idx)
        })
        .collect();
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut labels = vec![None; disks.len()];
    for (n, &(ij, _, idx)) in cells.iter().enumerate() {
        if n == 0 || cells[n - 1].0 != ij {
            labels[idx] = Some(lattice.colour(ij.0, ij.1));
        }
    }
    let assignment = Assignment {
        labels,
        k: k as usize,
        method: Method::KColour(k),
        lattice: AnyLattice::Tri(lattice),
    };
    let report = report(disks, &assignment);
    Ok((assignment, report))
}

/// First same-coloured overlapping pair `(colour, i, j, distance)`, if any.
pub fn find_overlap(
    disks: &DiskSet,
    labels: &[Option<usize>],
) -> Option<(usize, usize, usize, f64)> {
    let min_dist = 2.0 * disks.radius() - DISJOINT_TOL;
    let grid = BucketGrid::new(disks.centers().iter().copied(), 2.0 * disks.radius());
    for (i, &li) in labels.iter().enumerate() {
        let Some(ci) = li else { continue };
        let p = disks.centers()[i];
        for j in grid.near(p).into_iter().filter(|&j| j > i) {
            if labels[j] == Some(ci) {
                let d = p.dist(disks.centers()[j]);
                if d < min_dist {
                    return Some((ci, i, j, d));
                }
            }
        }
    }
    None
}

/// Checks an assignment against its instance and recomputes its report.
pub fn verify(disks: &DiskSet, assignment: &Assignment) -> Result<CoverageReport> {
    if assignment.labels.len() != disks.len() {
        return Err(Error::invalid(format!(
            "assignment has {} labels for {} disks",
            assignment.labels.len(),
            disks.len()
        )));
    }
    if let Some((i, c)) = assignment
        .labels
        .iter()
        .enumerate()
        .find_map(|(i, l)| l.filter(|&c| c >= assignment.k).map(|c| (i, c)))
    {
        return Err(Error::invalid(format!(
            "disk {i} has colour {c}, but only {} colours are allowed",
            assignment.k
        )));
    }
    if let Some((colour, first, second, distance)) = find_overlap(disks, &assignment.labels) {
        return Err(Error::Overlap {
            colour,
            first,
            second,
            distance,
        });
    }
    Ok(report(disks, assignment))
}

fn report(disks: &DiskSet, assignment: &Assignment) -> CoverageReport {
    let lattice = &assignment.lattice;
    let selected = assignment.selected_indices();
    let union_area = exact_union_area(disks);
    let selected_area = exact_union_area(&disks.subset(selected.iter().copied()));

    let mut per_point: Vec<((i64, i64), f64)> = selected
        .iter()
        .map(|&idx| {
            let circle = disks.circle(idx);
            let (i, j) = lattice.nearest(circle.center);
            let area = circle_polygon_intersection_area(&circle, &lattice.voronoi_cell(i, j));
            ((i, j), area)
        })
        .collect();
    per_point.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.total_cmp(&a.1)));
    per_point.dedup_by_key(|e| e.0);

    let ratio = if disks.is_empty() {
        1.0
    } else if union_area > 0.0 {
        (selected_area / union_area).min(1.0)
    } else {
        0.0
    };
    CoverageReport {
        union_area,
        selected_area,
        ratio,
        guarantee: assignment.method.guarantee(),
        lattice_points_hit: per_point.len(),
        cell_accounting: per_point.iter().map(|e| e.1).sum(),
        offset: lattice.offset(),
    }
}
