//! Union area of equal-radius disks: exact boundary integration, a seeded
//! Monte Carlo estimate, and radius scaling.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{Circle, Point, EPS};
use crate::lattice::BBox;
use crate::prng::SplitMix64;
use crate::spatial::BucketGrid;

/// A set of disks sharing one radius (1 unless stated otherwise).
/// Duplicate centers are allowed; they do not change the union.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskSet {
    radius: f64,
    centers: Vec<Point>,
}

impl DiskSet {
    pub fn new(radius: f64, centers: Vec<Point>) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::invalid(format!(
                "radius must be finite and > 0, got {radius}"
            )));
        }
        if let Some(i) = centers.iter().position(|p| !p.is_finite()) {
            return Err(Error::invalid(format!("center {i} is not finite")));
        }
        Ok(DiskSet { radius, centers })
    }

    pub fn unit(centers: Vec<Point>) -> Result<Self> {
        DiskSet::new(1.0, centers)
    }

    pub fn empty() -> Self {
        DiskSet {
            radius: 1.0,
            centers: Vec::new(),
        }
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    pub fn circle(&self, i: usize) -> Circle {
        Circle {
            center: self.centers[i],
            radius: self.radius,
        }
    }

    pub fn circles(&self) -> impl Iterator<Item = Circle> + '_ {
        self.centers.iter().map(move |&center| Circle {
            center,
            radius: self.radius,
        })
    }

    /// Subset by index, keeping the radius.
    pub fn subset(&self, indices: impl IntoIterator<Item = usize>) -> DiskSet {
        DiskSet {
            radius: self.radius,
            centers: indices.into_iter().map(|i| self.centers[i]).collect(),
        }
    }

    pub fn with_radius(&self, radius: f64) -> Result<DiskSet> {
        DiskSet::new(radius, self.centers.clone())
    }

    pub fn push(&mut self, center: Point) -> Result<()> {
        if !center.is_finite() {
            return Err(Error::invalid("center is not finite"));
        }
        self.centers.push(center);
        Ok(())
    }

    /// Bounding box of the union, or `None` when empty.
    pub fn bbox(&self) -> Option<BBox> {
        let first = *self.centers.first()?;
        let (mut lo, mut hi) = (first, first);
        for p in &self.centers {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        Some(BBox::new(lo, hi).expanded(self.radius))
    }
}

/// Exact area of the union.
///
/// Each distinct circle keeps the arcs of its boundary not strictly inside
/// any other disk; the union area is the Green's-theorem line integral over
/// those arcs, so a disk inside another contributes nothing. An arc from
/// φ₁ to φ₂ on circle (c, R) contributes
/// `(R²(φ₂−φ₁) + R(c_x(sin φ₂ − sin φ₁) − c_y(cos φ₂ − cos φ₁))) / 2`.
pub fn exact_union_area(disks: &DiskSet) -> f64 {
    if disks.is_empty() {
        return 0.0;
    }
    let r = disks.radius;
    let mut centers = disks.centers.clone();
    centers.sort_by(|a, b| a.lex_cmp(b));
    centers.dedup();
    let grid = BucketGrid::new(centers.iter().copied(), 2.0 * r);
    let parts: Vec<f64> = (0..centers.len())
        .into_par_iter()
        .map(|i| boundary_contribution(i, &centers, r, &grid))
        .collect();
    parts.iter().sum()
}

fn boundary_contribution(i: usize, centers: &[Point], r: f64, grid: &BucketGrid) -> f64 {
    let c = centers[i];
    let others: Vec<Point> = grid
        .near(c)
        .into_iter()
        .filter(|&j| j != i && centers[j].dist(c) < 2.0 * r)
        .map(|j| centers[j])
        .collect();

    let mut cuts: Vec<f64> = Vec::with_capacity(2 * others.len());
    for &o in &others {
        let d = o.dist(c);
        let phi = (o.y - c.y).atan2(o.x - c.x);
        let half = (d / (2.0 * r)).clamp(-1.0, 1.0).acos();
        cuts.push(normalize_angle(phi - half));
        cuts.push(normalize_angle(phi + half));
    }
    if cuts.is_empty() {
        return arc_integral(c, r, 0.0, TAU);
    }
    cuts.sort_by(f64::total_cmp);

    let strictly_inside_other = |p: Point| others.iter().any(|&o| o.dist(p) < r - EPS);
    let mut total = 0.0;
    for k in 0..cuts.len() {
        let a = cuts[k];
        let b = if k + 1 < cuts.len() {
            cuts[k + 1]
        } else {
            cuts[0] + TAU
        };
        if b - a <= 0.0 {
            continue;
        }
        let mid = c + Point::polar(0.5 * (a + b), r);
        if !strictly_inside_other(mid) {
            total += arc_integral(c, r, a, b);
        }
    }
    total
}

fn normalize_angle(a: f64) -> f64 {
    let x = a.rem_euclid(TAU);
    if x >= TAU {
        0.0
    } else {
        x
    }
}

fn arc_integral(c: Point, r: f64, a: f64, b: f64) -> f64 {
    0.5 * (r * r * (b - a) + r * (c.x * (b.sin() - a.sin()) - c.y * (b.cos() - a.cos())))
}

/// Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: u64,
    pub hits: u64,
}

const MC_CHUNK: u64 = 1 << 16;

/// Uniform sampling over the union's bounding box.
///
/// Sample `s` uses draws `2s` (x) and `2s + 1` (y) of `SplitMix64::new(seed)`,
/// so the estimate is identical however the work is split across threads.
pub fn monte_carlo_union_area(disks: &DiskSet, samples: u64, seed: u64) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::invalid("samples must be >= 1"));
    }
    let Some(bbox) = disks.bbox() else {
        return Ok(McEstimate {
            estimate: 0.0,
            std_error: 0.0,
            samples,
            hits: 0,
        });
    };
    let r = disks.radius;
    let r2 = r * r;
    let grid = BucketGrid::new(disks.centers.iter().copied(), r);
    let centers = &disks.centers;
    let chunks = samples.div_ceil(MC_CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * MC_CHUNK;
            let end = (start + MC_CHUNK).min(samples);
            let mut rng = SplitMix64::at(seed, 2 * start);
            let mut hits = 0u64;
            for _ in start..end {
                let x = rng.uniform(bbox.min.x, bbox.max.x);
                let y = rng.uniform(bbox.min.y, bbox.max.y);
                let p = Point::new(x, y);
                if grid.any_near(p, |j| centers[j].dist2(p) <= r2) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    let box_area = bbox.width() * bbox.height();
    let frac = hits as f64 / samples as f64;
    Ok(McEstimate {
        estimate: box_area * frac,
        std_error: box_area * (frac * (1.0 - frac) / samples as f64).sqrt(),
        samples,
        hits,
    })
}

/// Union area after scaling every radius by `r ∈ [0, 1]`, centers fixed.
pub fn scaled_union_area(disks: &DiskSet, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::invalid(format!("scale must lie in [0, 1], got {r}")));
    }
    if r == 0.0 || disks.is_empty() {
        return Ok(0.0);
    }
    Ok(exact_union_area(&disks.with_radius(disks.radius * r)?))
}

/// Area of `n` disjoint disks of this radius, an upper bound on the union.
pub fn disjoint_area_bound(disks: &DiskSet) -> f64 {
    disks.len() as f64 * PI * disks.radius * disks.radius
}
