//! Positioned, coloured point lattices.
//!
//! A lattice is `offset + i·u + j·v` for integers `i, j`. Both lattice kinds
//! keep `u` on the +x axis; only the offset moves. The fundamental cell is
//! the half-open parallelogram `offset + s·u + t·v`, `s, t ∈ [0, 1)`.

use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Point, RegularHexagon, EPS};

/// Side of the 3-coloured triangular lattice: `4√3/3`.
pub fn three_colour_side() -> f64 {
    4.0 * 3f64.sqrt() / 3.0
}

/// Side of the 1-colour triangular lattice.
pub const RADO_SIDE: f64 = 4.0;

/// Side of the 2-coloured square lattice: `2√2`.
pub fn square_side() -> f64 {
    2.0 * std::f64::consts::SQRT_2
}

/// Axis-aligned box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub min: Point,
    pub max: Point,
}

impl BBox {
    pub fn new(min: Point, max: Point) -> Self {
        BBox { min, max }
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn expanded(&self, by: f64) -> BBox {
        BBox {
            min: Point::new(self.min.x - by, self.min.y - by),
            max: Point::new(self.max.x + by, self.max.y + by),
        }
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticePoint {
    pub i: i64,
    pub j: i64,
    pub position: Point,
    pub colour: usize,
}

/// Shared behaviour of the triangular and square lattices.
pub trait Lattice {
    fn side(&self) -> f64;
    fn offset(&self) -> Point;
    /// Basis `(u, v)` with `u = (side, 0)`.
    fn basis(&self) -> (Point, Point);
    fn colour_count(&self) -> usize;
    fn colour(&self, i: i64, j: i64) -> usize;
    /// Voronoi cell of the lattice point `(i, j)`.
    fn voronoi_cell(&self, i: i64, j: i64) -> ConvexPolygon;

    fn point(&self, i: i64, j: i64) -> Point {
        let (u, v) = self.basis();
        self.offset() + u * i as f64 + v * j as f64
    }

    /// Area of the fundamental cell.
    fn cell_area(&self) -> f64 {
        let (u, v) = self.basis();
        u.cross(v)
    }

    /// Closed fundamental-cell parallelogram.
    fn fundamental_cell(&self) -> ConvexPolygon {
        let (u, v) = self.basis();
        let o = self.offset();
        ConvexPolygon::new(vec![o, o + u, o + u + v, o + v]).expect("basis is non-degenerate")
    }

    /// Reduces `p` to `cell_point + i·u + j·v` with `cell_point` in the
    /// half-open fundamental cell.
    fn wrap_to_cell(&self, p: Point) -> (Point, (i64, i64)) {
        let (s, t) = self.lattice_coords(p);
        let (i, fs) = split_integer(s);
        let (j, ft) = split_integer(t);
        let (u, v) = self.basis();
        (self.offset() + u * fs + v * ft, (i, j))
    }

    /// Real coordinates `(s, t)` with `p = offset + s·u + t·v`.
    fn lattice_coords(&self, p: Point) -> (f64, f64) {
        let (u, v) = self.basis();
        let d = p - self.offset();
        let t = d.y / v.y;
        let s = (d.x - t * v.x) / u.x;
        (s, t)
    }

    /// Lattice point nearest to `p`; ties go to the lexicographically
    /// smallest `(i, j)`.
    fn nearest(&self, p: Point) -> (i64, i64) {
        let (s, t) = self.lattice_coords(p);
        let (i0, j0) = (s.floor() as i64, t.floor() as i64);
        let mut best = (i0, j0);
        let mut best_d = f64::INFINITY;
        for (i, j) in [(i0, j0), (i0, j0 + 1), (i0 + 1, j0), (i0 + 1, j0 + 1)] {
            let d = self.point(i, j).dist(p);
            if d < best_d - EPS || ((d - best_d).abs() <= EPS && (i, j) < best) {
                best = (i, j);
                best_d = d;
            }
        }
        best
    }

    /// All lattice points inside `bbox` (closed), with colours.
    fn points_in_box(&self, bbox: &BBox) -> Vec<LatticePoint> {
        let (u, v) = self.basis();
        let o = self.offset();
        let j_lo = ((bbox.min.y - o.y) / v.y).ceil() as i64;
        let j_hi = ((bbox.max.y - o.y) / v.y).floor() as i64;
        let mut out = Vec::new();
        for j in j_lo..=j_hi {
            let row_x = o.x + j as f64 * v.x;
            let i_lo = ((bbox.min.x - row_x) / u.x).ceil() as i64;
            let i_hi = ((bbox.max.x - row_x) / u.x).floor() as i64;
            for i in i_lo..=i_hi {
                let position = self.point(i, j);
                if bbox.contains(position) {
                    out.push(LatticePoint {
                        i,
                        j,
                        position,
                        colour: self.colour(i, j),
                    });
                }
            }
        }
        out
    }
}

fn split_integer(x: f64) -> (i64, f64) {
    let r = x.round();
    if (x - r).abs() <= 1e-12 * x.abs().max(1.0) {
        return (r as i64, 0.0);
    }
    let f = x.floor();
    (f as i64, x - f)
}

/// How the points of a triangular lattice are coloured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TriColouring {
    /// Every point gets colour 0.
    Mono,
    /// `(i − j) mod 3`.
    Three,
    Loeschian(LoeschianColouring),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriLattice {
    side: f64,
    offset: Point,
    colouring: TriColouring,
}

impl TriLattice {
    pub fn new(side: f64, offset: Point, colouring: TriColouring) -> Result<Self> {
        if !(side.is_finite() && side > 0.0) {
            return Err(Error::invalid(format!(
                "lattice side must be > 0, got {side}"
            )));
        }
        if !offset.is_finite() {
            return Err(Error::invalid("lattice offset must be finite"));
        }
        Ok(TriLattice {
            side,
            offset,
            colouring,
        })
    }

    /// 3-coloured lattice of side `4√3/3`.
    pub fn three_colour(offset: Point) -> Self {
        TriLattice {
            side: three_colour_side(),
            offset,
            colouring: TriColouring::Three,
        }
    }

    /// Single-colour lattice of side 4.
    pub fn rado(offset: Point) -> Self {
        TriLattice {
            side: RADO_SIDE,
            offset,
            colouring: TriColouring::Mono,
        }
    }

    pub fn colouring(&self) -> TriColouring {
        self.colouring
    }

    pub fn with_offset(&self, offset: Point) -> Self {
        TriLattice { offset, ..*self }
    }

    /// Area of one lattice triangle.
    pub fn triangle_area(&self) -> f64 {
        3f64.sqrt() / 4.0 * self.side * self.side
    }

    pub fn voronoi_hexagon(&self, i: i64, j: i64) -> RegularHexagon {
        RegularHexagon {
            center: self.point(i, j),
            side: self.side / 3f64.sqrt(),
        }
    }

    /// Voronoi hexagon of the lattice point nearest to `p`.
    pub fn voronoi_cell_at(&self, p: Point) -> RegularHexagon {
        let (i, j) = self.nearest(p);
        self.voronoi_hexagon(i, j)
    }
}

impl Lattice for TriLattice {
    fn side(&self) -> f64 {
        self.side
    }

    fn offset(&self) -> Point {
        self.offset
    }

    fn basis(&self) -> (Point, Point) {
        let s = self.side;
        (
            Point::new(s, 0.0),
            Point::new(0.5 * s, 0.5 * s * 3f64.sqrt()),
        )
    }

    fn colour_count(&self) -> usize {
        match self.colouring {
            TriColouring::Mono => 1,
            TriColouring::Three => 3,
            TriColouring::Loeschian(c) => c.k() as usize,
        }
    }

    fn colour(&self, i: i64, j: i64) -> usize {
        match self.colouring {
            TriColouring::Mono => 0,
            TriColouring::Three => (i - j).rem_euclid(3) as usize,
            TriColouring::Loeschian(c) => c.colour(i, j),
        }
    }

    fn voronoi_cell(&self, i: i64, j: i64) -> ConvexPolygon {
        self.voronoi_hexagon(i, j).to_polygon()
    }
}

/// Checkerboard-coloured square lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareLattice {
    side: f64,
    offset: Point,
}

impl SquareLattice {
    pub fn new(side: f64, offset: Point) -> Result<Self> {
        if !(side.is_finite() && side > 0.0) {
            return Err(Error::invalid(format!(
                "lattice side must be > 0, got {side}"
            )));
        }
        if !offset.is_finite() {
            return Err(Error::invalid("lattice offset must be finite"));
        }
        Ok(SquareLattice { side, offset })
    }

    /// Side `2√2`, so same-coloured points are 4 apart.
    pub fn two_colour(offset: Point) -> Self {
        SquareLattice {
            side: square_side(),
            offset,
        }
    }

    pub fn with_offset(&self, offset: Point) -> Self {
        SquareLattice { offset, ..*self }
    }
}

impl Lattice for SquareLattice {
    fn side(&self) -> f64 {
        self.side
    }

    fn offset(&self) -> Point {
        self.offset
    }

    fn basis(&self) -> (Point, Point) {
        (Point::new(self.side, 0.0), Point::new(0.0, self.side))
    }

    fn colour_count(&self) -> usize {
        2
    }

    fn colour(&self, i: i64, j: i64) -> usize {
        (i + j).rem_euclid(2) as usize
    }

    fn voronoi_cell(&self, i: i64, j: i64) -> ConvexPolygon {
        let c = self.point(i, j);
        let h = 0.5 * self.side;
        ConvexPolygon::new(vec![
            c + Point::new(-h, -h),
            c + Point::new(h, -h),
            c + Point::new(h, h),
            c + Point::new(-h, h),
        ])
        .expect("square is non-degenerate")
    }
}

/// Either lattice kind, for code that stores or renders "the lattice used".
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnyLattice {
    Tri(TriLattice),
    Square(SquareLattice),
}

impl AnyLattice {
    pub fn with_offset(&self, offset: Point) -> Self {
        match self {
            AnyLattice::Tri(l) => AnyLattice::Tri(l.with_offset(offset)),
            AnyLattice::Square(l) => AnyLattice::Square(l.with_offset(offset)),
        }
    }
}

impl Lattice for AnyLattice {
    fn side(&self) -> f64 {
        match self {
            AnyLattice::Tri(l) => l.side(),
            AnyLattice::Square(l) => l.side(),
        }
    }

    fn offset(&self) -> Point {
        match self {
            AnyLattice::Tri(l) => l.offset(),
            AnyLattice::Square(l) => l.offset(),
        }
    }

    fn basis(&self) -> (Point, Point) {
        match self {
            AnyLattice::Tri(l) => l.basis(),
            AnyLattice::Square(l) => l.basis(),
        }
    }

    fn colour_count(&self) -> usize {
        match self {
            AnyLattice::Tri(l) => l.colour_count(),
            AnyLattice::Square(l) => l.colour_count(),
        }
    }

    fn colour(&self, i: i64, j: i64) -> usize {
        match self {
            AnyLattice::Tri(l) => l.colour(i, j),
            AnyLattice::Square(l) => l.colour(i, j),
        }
    }

    fn voronoi_cell(&self, i: i64, j: i64) -> ConvexPolygon {
        match self {
            AnyLattice::Tri(l) => l.voronoi_cell(i, j),
            AnyLattice::Square(l) => l.voronoi_cell(i, j),
        }
    }
}

/// Smallest `(a, b)` (by `a`, then `b`) with `a, b ≥ 0` and
/// `a² + ab + b² = k`, or `None` when `k` is not Loeschian.
pub fn loeschian_decompose(k: i64) -> Result<Option<(u32, u32)>> {
    if k <= 0 {
        return Err(Error::invalid(format!("k must be >= 1, got {k}")));
    }
    let mut a: i64 = 0;
    while a * a <= k {
        let mut b: i64 = 0;
        loop {
            let q = a * a + a * b + b * b;
            if q == k {
                return Ok(Some((a as u32, b as u32)));
            }
            if q > k {
                break;
            }
            b += 1;
        }
        a += 1;
    }
    Ok(None)
}

/// Colouring of the unit triangular lattice by the cosets of the sublattice
/// spanned by `(a, b)` and its 60° rotation `(−b, a + b)`.
///
/// Colours are canonical residues from the Hermite normal form
/// `[[h11, h12], [0, h22]]` of the sublattice, so `colour(i, j)` is O(1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoeschianColouring {
    k: i64,
    a: i64,
    b: i64,
    h11: i64,
    h12: i64,
    h22: i64,
}

impl LoeschianColouring {
    pub fn new(k: i64) -> Result<Self> {
        let (a, b) = loeschian_decompose(k)?.ok_or(Error::NotLoeschian(k))?;
        let (a, b) = (a as i64, b as i64);
        // first column of the generator rows (a, b), (−b, a+b)
        let (g, s, t) = ext_gcd(a, -b);
        let h11 = g;
        let h22 = k / g;
        let h12 = (s * b + t * (a + b)).rem_euclid(h22);
        Ok(LoeschianColouring {
            k,
            a,
            b,
            h11,
            h12,
            h22,
        })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn generators(&self) -> ((i64, i64), (i64, i64)) {
        ((self.a, self.b), (-self.b, self.a + self.b))
    }

    pub fn colour(&self, i: i64, j: i64) -> usize {
        let q = i.div_euclid(self.h11);
        let i_red = i.rem_euclid(self.h11);
        let j_red = (j - q * self.h12).rem_euclid(self.h22);
        (i_red * self.h22 + j_red) as usize
    }
}

/// `(g, s, t)` with `g = gcd(x, y) > 0` and `s·x + t·y = g`.
fn ext_gcd(x: i64, y: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (x, y);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Scale factor turning the unit triangular lattice into the k-colour
/// lattice: `2 / (√k − 2/√3)`. Non-positive (meaningless) for `k = 1`.
pub fn alpha_k(k: i64) -> f64 {
    2.0 / ((k as f64).sqrt() - 2.0 / 3f64.sqrt())
}

/// Diameter of a Voronoi cell of the k-colour lattice: `(2/√3)·α_k`.
pub fn delta_k(k: i64) -> f64 {
    2.0 / 3f64.sqrt() * alpha_k(k)
}
