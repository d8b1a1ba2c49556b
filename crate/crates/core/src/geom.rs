//! Exact primitive geometry: points, circles, convex polygons, lens areas,
//! circle/polygon clipping, and the disk-hexagon intersection function whose
//! minimum is the per-disk contribution bound of the 3-colour solver.
//!
//! Hexagon convention: a [`RegularHexagon`] has its vertices at angles
//! 30°, 90°, ..., 330° from its center, so the direction θ = 0 meets the
//! midpoint of the right-hand vertical edge. This is the Voronoi cell of a
//! triangular lattice whose first basis vector lies along +x.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::numeric::golden_section_min;

/// Absolute tolerance, in plane units, for all geometric predicates.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Like [`Point::new`] but rejects NaN and infinite coordinates.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point { x, y })
        } else {
            Err(Error::invalid(format!("non-finite point ({x}, {y})")))
        }
    }

    pub fn polar(angle: f64, r: f64) -> Self {
        Point::new(r * angle.cos(), r * angle.sin())
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn dist2(self, o: Point) -> f64 {
        (self - o).norm2()
    }

    /// Lexicographic (x, then y) total order, used for deterministic tie-breaks.
    pub fn lex_cmp(&self, o: &Point) -> std::cmp::Ordering {
        self.x.total_cmp(&o.x).then(self.y.total_cmp(&o.y))
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// A closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::invalid("circle center must be finite"));
        }
        check_radius(radius)?;
        Ok(Circle { center, radius })
    }

    pub fn unit(center: Point) -> Self {
        Circle {
            center,
            radius: 1.0,
        }
    }

    /// Closed-disk membership with the global [`EPS`] slack.
    pub fn contains(&self, p: Point) -> bool {
        self.center.dist(p) <= self.radius + EPS
    }

    pub fn area(&self) -> f64 {
        PI * self.radius * self.radius
    }

    pub fn point_at(&self, angle: f64) -> Point {
        self.center + Point::polar(angle, self.radius)
    }

    /// Boundary intersection points with `other`, or `None` when the
    /// boundaries do not cross (disjoint, nested, or coincident).
    /// Tangent circles yield the same point twice.
    pub fn boundary_intersections(&self, other: &Circle) -> Option<(Point, Point)> {
        let d = self.center.dist(other.center);
        let (r1, r2) = (self.radius, other.radius);
        if d == 0.0 || d > r1 + r2 + EPS || d < (r1 - r2).abs() - EPS {
            return None;
        }
        let along = ((d * d + r1 * r1 - r2 * r2) / (2.0 * d)).clamp(-r1, r1);
        let h = (r1 * r1 - along * along).max(0.0).sqrt();
        let e = (other.center - self.center) * (1.0 / d);
        let base = self.center + e * along;
        let perp = Point::new(-e.y, e.x);
        Some((base + perp * h, base - perp * h))
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "radius must be finite and > 0, got {r}"
        )))
    }
}

/// Convex polygon with counterclockwise vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Accepts either orientation (clockwise input is reversed). Rejects
    /// fewer than three vertices, non-finite coordinates, zero area, and
    /// reflex corners.
    pub fn new(mut vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::DegeneratePolygon(format!(
                "{} vertices",
                vertices.len()
            )));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::invalid("polygon vertex is not finite"));
        }
        let signed = shoelace(&vertices);
        if signed.abs() <= EPS {
            return Err(Error::DegeneratePolygon("zero area".into()));
        }
        if signed < 0.0 {
            vertices.reverse();
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if (b - a).cross(c - b) < -EPS {
                return Err(Error::invalid("polygon is not convex"));
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        shoelace(&self.vertices)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Closed membership.
    pub fn contains(&self, p: Point) -> bool {
        self.edges().all(|(a, b)| (b - a).cross(p - a) >= -EPS)
    }

    /// Euclidean distance from `p` to the closed polygon (0 inside).
    pub fn distance_to(&self, p: Point) -> f64 {
        if self.edges().all(|(a, b)| (b - a).cross(p - a) >= 0.0) {
            return 0.0;
        }
        self.edges()
            .map(|(a, b)| segment_distance(p, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn translated(&self, by: Point) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&v| v + by).collect(),
        }
    }
}

fn shoelace(v: &[Point]) -> f64 {
    let n = v.len();
    0.5 * (0..n).map(|i| v[i].cross(v[(i + 1) % n])).sum::<f64>()
}

fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.norm2();
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

/// Regular hexagon with vertices at 30° + k·60° around its center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularHexagon {
    pub center: Point,
    pub side: f64,
}

impl RegularHexagon {
    pub fn new(center: Point, side: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::invalid("hexagon center must be finite"));
        }
        if !(side.is_finite() && side > 0.0) {
            return Err(Error::invalid(format!(
                "hexagon side must be > 0, got {side}"
            )));
        }
        Ok(RegularHexagon { center, side })
    }

    pub fn inradius(&self) -> f64 {
        self.side * 3f64.sqrt() / 2.0
    }

    pub fn vertices(&self) -> [Point; 6] {
        std::array::from_fn(|k| {
            self.center + Point::polar(FRAC_PI_6 + k as f64 * FRAC_PI_3, self.side)
        })
    }

    pub fn to_polygon(&self) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices().to_vec(),
        }
    }

    pub fn area(&self) -> f64 {
        1.5 * 3f64.sqrt() * self.side * self.side
    }
}

/// Area of the intersection of two disks with radii `r1`, `r2` whose
/// centers are `d` apart.
pub fn lens_area(r1: f64, r2: f64, d: f64) -> Result<f64> {
    check_radius(r1)?;
    check_radius(r2)?;
    if !(d.is_finite() && d >= 0.0) {
        return Err(Error::invalid(format!(
            "center distance must be >= 0, got {d}"
        )));
    }
    Ok(lens_area_unchecked(r1, r2, d))
}

pub(crate) fn lens_area_unchecked(r1: f64, r2: f64, d: f64) -> f64 {
    if d >= r1 + r2 {
        return 0.0;
    }
    let small = r1.min(r2);
    if d <= (r1 - r2).abs() {
        return PI * small * small;
    }
    let a1 = ((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1))
        .clamp(-1.0, 1.0)
        .acos();
    let a2 = ((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2))
        .clamp(-1.0, 1.0)
        .acos();
    let k = ((-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2)).max(0.0);
    (r1 * r1 * a1 + r2 * r2 * a2 - 0.5 * k.sqrt()).clamp(0.0, PI * small * small)
}

/// Exact area of `circle ∩ poly`.
///
/// Sums, over the polygon's edges, the signed area of the circle clipped to
/// the triangle (center, a, b): straight pieces inside the circle contribute
/// a triangle, pieces outside contribute a circular sector.
pub fn circle_polygon_intersection_area(circle: &Circle, poly: &ConvexPolygon) -> f64 {
    let c = circle.center;
    let r = circle.radius;
    let total: f64 = poly
        .edges()
        .map(|(a, b)| signed_circle_triangle(a - c, b - c, r))
        .sum();
    total.clamp(0.0, circle.area().min(poly.area()))
}

fn signed_circle_triangle(a: Point, b: Point, r: f64) -> f64 {
    let r2 = r * r;
    let d = b - a;
    // |a + t d|^2 = r^2
    let qa = d.norm2();
    if qa == 0.0 {
        return 0.0;
    }
    let qb = 2.0 * a.dot(d);
    let qc = a.norm2() - r2;
    let mut cuts = [0.0, 1.0, 1.0, 1.0];
    let mut n = 1;
    let disc = qb * qb - 4.0 * qa * qc;
    if disc > 0.0 {
        let s = disc.sqrt();
        for t in [(-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)] {
            if t > 0.0 && t < 1.0 {
                cuts[n] = t;
                n += 1;
            }
        }
    }
    cuts[n] = 1.0;
    let mut area = 0.0;
    for w in cuts[..=n].windows(2) {
        let p = a + d * w[0];
        let q = a + d * w[1];
        let mid = a + d * (0.5 * (w[0] + w[1]));
        if mid.norm2() <= r2 {
            area += 0.5 * p.cross(q);
        } else {
            area += 0.5 * r2 * p.cross(q).atan2(p.dot(q));
        }
    }
    area
}

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Boundary between the two-vertex and one-vertex cases of [`f_theta`].
pub fn f_theta_case_split() -> f64 {
    (2.0f64 / 3.0).acos() - FRAC_PI_6
}

/// Area of `d ∩ h` where `h` is the regular hexagon of side 4/3 centered at
/// the origin and `d` is the unit disk centered at `(cos θ, sin θ)`, so that
/// the hexagon center lies on the disk boundary.
///
/// Evaluated from closed-form intersection points: on `[0, split)` the disk
/// contains two hexagon vertices (polygon A B C E D plus the sector at B), on
/// `[split, π/6)` only one (polygon A B C D plus the sector), and the upper
/// half of the range is mirrored.
pub fn f_theta(theta: f64) -> Result<f64> {
    if !(theta.is_finite() && (0.0..=FRAC_PI_3).contains(&theta)) {
        return Err(Error::invalid(format!(
            "theta must lie in [0, pi/3], got {theta}"
        )));
    }
    let split = f_theta_case_split();
    let v = if theta < split {
        two_vertex_case(theta)
    } else if theta < FRAC_PI_6 {
        one_vertex_case(theta)
    } else if theta < FRAC_PI_3 - split {
        one_vertex_case(FRAC_PI_3 - theta)
    } else {
        two_vertex_case(FRAC_PI_3 - theta)
    };
    Ok(v)
}

// Upper crossing A of the unit circle with the hexagon edge running from
// (2√3/3, 2/3) to (0, 4/3).
fn crossing_a(s: f64, c: f64) -> Point {
    let q = -2.0 / 3.0 * SQRT3 + 0.5 * s * SQRT3 + 0.5 * c;
    let root = (1.0 - q * q).max(0.0).sqrt();
    Point::new(
        SQRT3 / 3.0 - 0.5 * root * SQRT3 - 0.25 * s * SQRT3 + 0.75 * c,
        1.0 + 0.5 * root + 0.25 * s - 0.25 * c * SQRT3,
    )
}

// Half of the angle of the sector of the disk at B bounded by rays BA, BC
// and containing the hexagon center.
fn sector_term(a: Point, b: Point, c: Point) -> f64 {
    let num = -(-b.x + c.x) * (-a.y + b.y) + (b.y - c.y) * (a.x - b.x);
    let den = (-b.x + c.x) * (a.x - b.x) + (b.y - c.y) * (-a.y + b.y);
    0.5 * (PI - (num / den).atan())
}

fn two_vertex_case(theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let a = crossing_a(s, c);
    let b = Point::new(c, s);
    let q = 2.0 / 3.0 * SQRT3 + 0.5 * s * SQRT3 - 0.5 * c;
    let root = (1.0 - q * q).max(0.0).sqrt();
    let cc = Point::new(
        SQRT3 / 3.0 - 0.5 * root * SQRT3 + 0.25 * s * SQRT3 + 0.75 * c,
        -1.0 - 0.5 * root + 0.25 * s + 0.25 * c * SQRT3,
    );
    let d = Point::new(2.0 / 3.0 * SQRT3, 2.0 / 3.0);
    let e = Point::new(2.0 / 3.0 * SQRT3, -2.0 / 3.0);
    let poly = 0.5
        * (a.x * (b.y - d.y)
            + b.x * (cc.y - a.y)
            + cc.x * (e.y - b.y)
            + e.x * (d.y - cc.y)
            + d.x * (a.y - e.y));
    poly + sector_term(a, b, cc)
}

fn one_vertex_case(theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let a = crossing_a(s, c);
    let b = Point::new(c, s);
    let radicand = (-3.0 + 12.0 * c * SQRT3 - 9.0 * c * c).max(0.0);
    let cc = Point::new(2.0 / 3.0 * SQRT3, -radicand.sqrt() / 3.0 + s);
    let d = Point::new(2.0 / 3.0 * SQRT3, 2.0 / 3.0);
    let poly =
        0.5 * (a.x * (b.y - d.y) + b.x * (cc.y - a.y) + cc.x * (d.y - b.y) + d.x * (a.y - cc.y));
    poly + sector_term(a, b, cc)
}

/// Minimum intersection area of a unit disk containing the center of a
/// regular hexagon of side 4/3, in closed form.
pub fn delta_closed_form() -> f64 {
    let s11 = 11f64.sqrt();
    SQRT3 / 36.0 + s11 / 12.0 + PI / 2.0 - 0.5 * ((5.0 * SQRT3 - s11) / (5.0 + s11 * SQRT3)).atan()
}

/// Numerically minimizes [`f_theta`] over `[0, π/3]` with a grid scan
/// followed by golden-section refinement. Returns `(θ*, f(θ*))`.
pub fn minimize_f_theta() -> (f64, f64) {
    let f = |t: f64| f_theta(t.clamp(0.0, FRAC_PI_3)).expect("clamped into domain");
    let steps = 600;
    let h = FRAC_PI_3 / steps as f64;
    let best = (0..=steps)
        .map(|i| i as f64 * h)
        .min_by(|a, b| f(*a).total_cmp(&f(*b)))
        .unwrap_or(FRAC_PI_6);
    let lo = (best - h).max(0.0);
    let hi = (best + h).min(FRAC_PI_3);
    golden_section_min(f, lo, hi, 1e-12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn hexagon_4_3() -> ConvexPolygon {
        RegularHexagon::new(Point::ORIGIN, 4.0 / 3.0)
            .unwrap()
            .to_polygon()
    }

    #[test]
    fn lens_trivial_cases() {
        assert_eq!(lens_area(1.0, 1.0, 2.0).unwrap(), 0.0);
        assert_eq!(lens_area(1.0, 1.0, 5.0).unwrap(), 0.0);
        assert_abs_diff_eq!(lens_area(1.0, 1.0, 0.0).unwrap(), PI, epsilon = 1e-15);
        let expected = 2.0 * PI / 3.0 - 3f64.sqrt() / 2.0;
        assert_abs_diff_eq!(lens_area(1.0, 1.0, 1.0).unwrap(), expected, epsilon = 1e-12);
        assert_abs_diff_eq!(expected, 1.228370, epsilon = 1e-6);
    }

    #[test]
    fn lens_rejects_bad_radii() {
        assert!(lens_area(0.0, 1.0, 1.0).is_err());
        assert!(lens_area(1.0, -2.0, 1.0).is_err());
        assert!(lens_area(f64::NAN, 1.0, 1.0).is_err());
        assert!(lens_area(1.0, 1.0, -0.1).is_err());
        assert!(lens_area(1.0, 1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn clipping_examples() {
        let hex = hexagon_4_3();
        let inside = circle_polygon_intersection_area(&Circle::unit(Point::ORIGIN), &hex);
        assert_abs_diff_eq!(inside, PI, epsilon = 1e-12);

        let far = circle_polygon_intersection_area(&Circle::unit(Point::new(10.0, 3.0)), &hex);
        assert_eq!(far, 0.0);

        let at_vertex_dir = Circle::unit(Point::polar(FRAC_PI_6, 1.0));
        let v = circle_polygon_intersection_area(&at_vertex_dir, &hex);
        assert_abs_diff_eq!(v, 1.6645, epsilon = 1e-4);
    }

    #[test]
    fn clipping_polygon_inside_circle() {
        let sq = ConvexPolygon::new(vec![
            Point::new(-0.5, -0.5),
            Point::new(0.5, -0.5),
            Point::new(0.5, 0.5),
            Point::new(-0.5, 0.5),
        ])
        .unwrap();
        let big = Circle::new(Point::ORIGIN, 3.0).unwrap();
        assert_abs_diff_eq!(
            circle_polygon_intersection_area(&big, &sq),
            1.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn clipping_half_plane_cut() {
        // Unit circle against a huge square whose left edge passes through the center.
        let sq = ConvexPolygon::new(vec![
            Point::new(0.0, -10.0),
            Point::new(10.0, -10.0),
            Point::new(10.0, 10.0),
            Point::new(0.0, 10.0),
        ])
        .unwrap();
        let half = circle_polygon_intersection_area(&Circle::unit(Point::ORIGIN), &sq);
        assert_abs_diff_eq!(half, PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn polygon_validation() {
        assert!(matches!(
            ConvexPolygon::new(vec![Point::ORIGIN, Point::new(1.0, 0.0)]),
            Err(Error::DegeneratePolygon(_))
        ));
        assert!(matches!(
            ConvexPolygon::new(vec![
                Point::ORIGIN,
                Point::new(1.0, 0.0),
                Point::new(2.0, 0.0)
            ]),
            Err(Error::DegeneratePolygon(_))
        ));
        // clockwise input is normalised
        let cw = ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(cw.area() > 0.0);
        // reflex corner
        assert!(ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 0.2),
            Point::new(2.0, 2.0),
            Point::new(0.0, 2.0),
        ])
        .is_err());
    }

    #[test]
    fn hexagon_shape() {
        let h = RegularHexagon::new(Point::new(1.0, 2.0), 4.0 / 3.0).unwrap();
        assert_abs_diff_eq!(h.inradius(), 2.0 / 3f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(h.to_polygon().area(), h.area(), epsilon = 1e-12);
        for v in h.vertices() {
            assert_abs_diff_eq!(v.dist(h.center), 4.0 / 3.0, epsilon = 1e-14);
        }
        // right-hand edge is vertical at x = center + inradius
        let vs = h.vertices();
        assert_abs_diff_eq!(vs[0].x, vs[5].x, epsilon = 1e-14);
        assert_abs_diff_eq!(vs[0].x - h.center.x, h.inradius(), epsilon = 1e-14);
        assert!(RegularHexagon::new(Point::ORIGIN, 0.0).is_err());
    }

    #[test]
    fn f_theta_domain() {
        assert!(f_theta(-0.01).is_err());
        assert!(f_theta(FRAC_PI_3 + 1e-6).is_err());
        assert!(f_theta(f64::NAN).is_err());
        assert!(f_theta(0.0).is_ok());
        assert!(f_theta(FRAC_PI_3).is_ok());
    }

    #[test]
    fn f_theta_at_vertex_direction_is_delta() {
        assert_abs_diff_eq!(
            f_theta(FRAC_PI_6).unwrap(),
            delta_closed_form(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn f_theta_symmetric() {
        for i in 0..=100 {
            let t = FRAC_PI_3 * i as f64 / 100.0;
            let a = f_theta(t).unwrap();
            let b = f_theta(FRAC_PI_3 - t).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn f_theta_continuous_at_case_split() {
        let s = f_theta_case_split();
        let left = f_theta(s - 1e-9).unwrap();
        let right = f_theta(s).unwrap();
        assert_abs_diff_eq!(left, right, epsilon = 1e-7);
    }

    #[test]
    fn f_theta_matches_clipping_at_zero() {
        let hex = hexagon_4_3();
        let clip = circle_polygon_intersection_area(&Circle::unit(Point::new(1.0, 0.0)), &hex);
        assert_abs_diff_eq!(f_theta(0.0).unwrap(), clip, epsilon = 1e-9);
    }

    #[test]
    fn delta_value() {
        // sqrt(3)/36 + sqrt(11)/12 + pi/2 - atan((5 sqrt3 - sqrt11)/(5 + sqrt33))/2
        assert_abs_diff_eq!(delta_closed_form(), 1.664_538_244_553_925, epsilon = 1e-12);
        let (t, v) = minimize_f_theta();
        assert_abs_diff_eq!(t, FRAC_PI_6, epsilon = 1e-6);
        assert_abs_diff_eq!(v, delta_closed_form(), epsilon = 1e-9);
    }

    #[test]
    fn boundary_intersections_of_unit_circles() {
        let a = Circle::unit(Point::ORIGIN);
        let b = Circle::unit(Point::new(1.0, 0.0));
        let (p, q) = a.boundary_intersections(&b).unwrap();
        for x in [p, q] {
            assert_abs_diff_eq!(x.dist(a.center), 1.0, epsilon = 1e-14);
            assert_abs_diff_eq!(x.dist(b.center), 1.0, epsilon = 1e-14);
        }
        assert!(a
            .boundary_intersections(&Circle::unit(Point::new(3.0, 0.0)))
            .is_none());
        assert!(a.boundary_intersections(&a).is_none());
        let tangent = a
            .boundary_intersections(&Circle::unit(Point::new(2.0, 0.0)))
            .unwrap();
        assert_abs_diff_eq!(tangent.0.dist(Point::new(1.0, 0.0)), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn point_validation() {
        assert!(Point::try_new(f64::NAN, 0.0).is_err());
        assert!(Point::try_new(0.0, f64::NEG_INFINITY).is_err());
        assert!(Circle::new(Point::ORIGIN, 0.0).is_err());
        assert!(Circle::new(Point::new(f64::INFINITY, 0.0), 1.0).is_err());
    }
}
