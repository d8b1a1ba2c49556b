//! Approximation-ratio constants, each computed from its defining
//! operation.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{Error, Result};
use crate::geom::{
    circle_polygon_intersection_area, delta_closed_form, lens_area_unchecked, Circle, Point,
};
use crate::lattice::{self, loeschian_decompose, Lattice, SquareLattice};
use crate::numeric::{adaptive_simpson, golden_section_min};

/// Radius of the hexagon's inscribed circle, `2/√3`.
fn inner_radius() -> f64 {
    2.0 / 3f64.sqrt()
}

/// Below this distance the unit disk swallows the inscribed circle.
pub fn w_lower_breakpoint() -> f64 {
    inner_radius() - 1.0
}

/// Area of a unit disk intersected with a disk of radius `2/√3` whose
/// center is `r` away: a lower bound on what the best disk captures of the
/// hexagon of a lattice point at distance `r` from its center.
pub fn w_lower(r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::invalid(format!(
            "w_lower needs r in [0, 1], got {r}"
        )));
    }
    if r <= w_lower_breakpoint() {
        return Ok(PI);
    }
    let s = inner_radius();
    let a = (0.5 * (r * r - 1.0 / 3.0) / r).acos();
    let b = 4.0 / 3.0 * (0.25 * (r * r + 1.0 / 3.0) * 3f64.sqrt() / r).acos();
    let k = (-r + 1.0 + s) * (r + 1.0 - s) * (r - 1.0 + s) * (r + 1.0 + s);
    Ok(a + b - 0.5 * k.sqrt())
}

/// `2·∫₀¹ r·w_lower(r) dr`, integrated separately on each side of the
/// breakpoint where the integrand's derivative jumps.
pub fn weighted_bound_constant() -> f64 {
    let f = |r: f64| r * w_lower(r).expect("quadrature stays in [0, 1]");
    let split = w_lower_breakpoint();
    2.0 * (adaptive_simpson(f, 0.0, split, 1e-10) + adaptive_simpson(f, split, 1.0, 1e-10))
}

/// Area of a unit disk, centered `1` away from the center of a square
/// Voronoi cell (side `2√2`) in direction `theta`, inside that cell.
pub fn square_cell_capture(theta: f64) -> f64 {
    let cell = SquareLattice::two_colour(Point::ORIGIN).voronoi_cell(0, 0);
    circle_polygon_intersection_area(&Circle::unit(Point::polar(theta, 1.0)), &cell)
}

/// Smallest area a unit disk containing the center of a square cell can
/// capture of that cell. The minimum is attained with the cell's center on
/// the disk's boundary, and by symmetry `theta ∈ [0, π/4]` suffices.
/// Returns `(theta, area)`.
pub fn minimize_square_capture() -> (f64, f64) {
    let steps = 400;
    let h = FRAC_PI_4 / steps as f64;
    let best = (0..=steps)
        .map(|i| i as f64 * h)
        .min_by(|a, b| square_cell_capture(*a).total_cmp(&square_cell_capture(*b)))
        .expect("non-empty scan");
    golden_section_min(
        square_cell_capture,
        (best - h).max(0.0),
        (best + h).min(FRAC_PI_4),
        1e-12,
    )
}

/// Square-lattice analogue of the hexagon minimum.
pub fn delta_square() -> f64 {
    minimize_square_capture().1
}

/// Area fraction of the union of three unit disks with centers pairwise √3 apart
/// that a best 3-colouring covers: the ceiling no algorithm can beat.
pub fn three_colour_upper() -> f64 {
    let lens = lens_area_unchecked(1.0, 1.0, 3f64.sqrt());
    (3.0 * PI - 3.0 * lens) / (4.0 * PI)
}

/// Guaranteed ratio of the k-colour solver, `1/(1+δ_k)²`.
///
/// `k = 1` has no lattice of this family (its scale is negative); the
/// 1-colour solver uses the side-4 lattice and its guarantee `π/(8√3)`.
pub fn kcolour_guarantee(k: i64) -> Result<f64> {
    if k == 1 {
        return Ok(PI / (8.0 * 3f64.sqrt()));
    }
    match loeschian_decompose(k)? {
        Some(_) => Ok(1.0 / (1.0 + lattice::delta_k(k)).powi(2)),
        None => Err(Error::NotLoeschian(k)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsTable {
    /// 1 colour, side-4 lattice: `π/(8√3)`.
    pub c1_lb: f64,
    /// Hexagon minimum `Δ`.
    pub delta: f64,
    /// 3 colours, basic selection: `√3·Δ/8`.
    pub c3_basic: f64,
    /// `2·∫₀¹ r·w_l(r) dr`.
    pub weighted_constant: f64,
    /// 3 colours, weighted positioning: `(√3/8)·weighted_constant`.
    pub c3_weighted: f64,
    /// Square minimum `Δ₂`.
    pub delta_square: f64,
    /// 2 colours, square lattice: `Δ₂/8`.
    pub c2_basic: f64,
    /// Best achievable with 3 colours on the three-disk example.
    pub c3_upper: f64,
}

impl BoundsTable {
    pub fn alpha_k(&self, k: i64) -> f64 {
        lattice::alpha_k(k)
    }

    pub fn delta_k(&self, k: i64) -> f64 {
        lattice::delta_k(k)
    }

    pub fn kcolour_guarantee(&self, k: i64) -> Result<f64> {
        kcolour_guarantee(k)
    }
}

pub fn bound_table() -> BoundsTable {
    let delta = delta_closed_form();
    let weighted_constant = weighted_bound_constant();
    let delta_square = delta_square();
    let root3 = 3f64.sqrt();
    BoundsTable {
        c1_lb: PI / (8.0 * root3),
        delta,
        c3_basic: root3 * delta / 8.0,
        weighted_constant,
        c3_weighted: root3 / 8.0 * weighted_constant,
        delta_square,
        c2_basic: delta_square / 8.0,
        c3_upper: three_colour_upper(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{lens_area, RegularHexagon};
    use crate::prng::SplitMix64;
    use approx::assert_abs_diff_eq;

    #[test]
    fn w_lower_values() {
        assert_eq!(w_lower(0.1).unwrap(), PI);
        assert_eq!(w_lower(0.0).unwrap(), PI);
        assert_abs_diff_eq!(w_lower(1.0).unwrap(), 1.561906, epsilon = 1e-6);
        assert!(w_lower(-0.01).is_err());
        assert!(w_lower(1.01).is_err());
        assert!(w_lower(f64::NAN).is_err());
    }

    #[test]
    fn w_lower_is_a_lens() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..100 {
            let r = rng.next_f64();
            let lens = lens_area(1.0, inner_radius(), r).unwrap();
            assert_abs_diff_eq!(w_lower(r).unwrap(), lens, epsilon = 1e-9);
        }
    }

    #[test]
    fn w_lower_continuous_and_decreasing() {
        let b = w_lower_breakpoint();
        assert_abs_diff_eq!(w_lower(b + 1e-12).unwrap(), PI, epsilon = 1e-9);
        let mut prev = f64::INFINITY;
        for i in 0..=1000 {
            let w = w_lower(i as f64 / 1000.0).unwrap();
            assert!(w <= prev + 1e-12);
            prev = w;
        }
    }

    #[test]
    fn weighted_constant_matches_riemann_sum() {
        let n = 1_000_000;
        let h = 1.0 / n as f64;
        let riemann: f64 = (0..n)
            .map(|i| {
                let r = (i as f64 + 0.5) * h;
                r * w_lower(r).unwrap()
            })
            .sum::<f64>()
            * h
            * 2.0;
        let c = weighted_bound_constant();
        assert_abs_diff_eq!(c, riemann, epsilon = 1e-6);
        assert_abs_diff_eq!(c, 2.207, epsilon = 1e-3);
        assert_abs_diff_eq!(3f64.sqrt() / 8.0 * c, 0.4778, epsilon = 3e-4);
    }

    #[test]
    fn w_lower_below_hexagon_capture() {
        let mut rng = SplitMix64::new(99);
        let side = 4.0 / 3.0;
        for _ in 0..1000 {
            let p = Point::new(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
            let r = rng.next_f64();
            let c = p + Point::polar(rng.uniform(0.0, 2.0 * PI), r);
            let hex = RegularHexagon::new(p, side).unwrap().to_polygon();
            let exact = circle_polygon_intersection_area(&Circle::unit(c), &hex);
            assert!(w_lower(p.dist(c).min(1.0)).unwrap() <= exact + 1e-9);
        }
    }

    #[test]
    fn square_minimum() {
        let (theta, d2) = minimize_square_capture();
        assert!(theta.abs() < 1e-4);
        assert_abs_diff_eq!(d2, 2.374884, epsilon = 1e-5);
        assert_abs_diff_eq!(8.0 / d2, 3.37, epsilon = 0.01);
        // the capture grows with the disk's center moving toward the corner
        assert!(square_cell_capture(FRAC_PI_4) > d2);
    }

    #[test]
    fn table_values() {
        let t = bound_table();
        assert_abs_diff_eq!(t.c1_lb, 0.2267249, epsilon = 1e-7);
        assert_abs_diff_eq!(1.0 / t.c1_lb, 4.41063, epsilon = 1e-5);
        assert_eq!(t.c3_basic, 3f64.sqrt() / 8.0 * delta_closed_form());
        assert_abs_diff_eq!(1.0 / t.c3_basic, 2.7748, epsilon = 1e-3);
        assert_abs_diff_eq!(1.0 / t.c3_weighted, 2.0928, epsilon = 1e-3);
        assert_abs_diff_eq!(1.0 / t.c3_upper, 1.4150, epsilon = 1e-3);
        assert_abs_diff_eq!(t.c2_basic, t.delta_square / 8.0, epsilon = 0.0);
    }

    #[test]
    fn kcolour_values() {
        let t = bound_table();
        assert_abs_diff_eq!(t.alpha_k(3), 2.0 * 3f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(t.delta_k(3), 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(t.kcolour_guarantee(3).unwrap(), 1.0 / 25.0, epsilon = 1e-12);
        assert_abs_diff_eq!(t.delta_k(7), 1.5488, epsilon = 1e-4);
        assert_abs_diff_eq!(1.0 / t.kcolour_guarantee(7).unwrap(), 6.497, epsilon = 1e-3);
        assert_abs_diff_eq!(t.delta_k(12), 1.0, epsilon = 1e-12);
        assert!(matches!(kcolour_guarantee(5), Err(Error::NotLoeschian(5))));
        assert_abs_diff_eq!(kcolour_guarantee(1).unwrap(), t.c1_lb, epsilon = 0.0);
    }
}
