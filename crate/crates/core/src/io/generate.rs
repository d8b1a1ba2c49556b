//! Deterministic instance generators. All randomness comes from
//! [`SplitMix64`] seeded with the caller's seed.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::lattice::{three_colour_side, Lattice, TriLattice};
use crate::prng::SplitMix64;
use crate::union_area::DiskSet;

/// `n` unit disks with centers evenly spaced on the circle of radius
/// `1 − epsilon` about the origin, rotated by a seeded phase. Every disk
/// contains the origin.
pub fn gen_spirograph(n: usize, epsilon: f64, seed: u64) -> Result<DiskSet> {
    if n < 3 {
        return Err(Error::invalid(format!("spirograph needs n >= 3, got {n}")));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::invalid(format!(
            "spirograph needs 0 < epsilon < 1, got {epsilon}"
        )));
    }
    let phase = SplitMix64::new(seed).next_f64() * TAU / n as f64;
    let rho = 1.0 - epsilon;
    DiskSet::unit(
        (0..n)
            .map(|i| Point::polar(phase + TAU * i as f64 / n as f64, rho))
            .collect(),
    )
}

/// `n` unit disks with centers uniform in `[0, box_side]²`; each center
/// draws `x` then `y`.
pub fn gen_random(n: usize, box_side: f64, seed: u64) -> Result<DiskSet> {
    if n < 1 {
        return Err(Error::invalid("random instance needs n >= 1"));
    }
    if !(box_side.is_finite() && box_side > 0.0) {
        return Err(Error::invalid(format!(
            "box side must be > 0, got {box_side}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    DiskSet::unit(
        (0..n)
            .map(|_| {
                let x = rng.uniform(0.0, box_side);
                let y = rng.uniform(0.0, box_side);
                Point::new(x, y)
            })
            .collect(),
    )
}

/// `n` unit disks in `clusters` groups: cluster centers uniform in
/// `[0, box_side]²`, members uniform in a disk of radius `spread` around a
/// cluster picked round-robin.
pub fn gen_clustered(
    n: usize,
    clusters: usize,
    box_side: f64,
    spread: f64,
    seed: u64,
) -> Result<DiskSet> {
    if n < 1 || clusters < 1 {
        return Err(Error::invalid(
            "clustered instance needs n >= 1 and clusters >= 1",
        ));
    }
    if !(box_side.is_finite() && box_side > 0.0 && spread.is_finite() && spread >= 0.0) {
        return Err(Error::invalid("box side must be > 0 and spread >= 0"));
    }
    let mut rng = SplitMix64::new(seed);
    let hubs: Vec<Point> = (0..clusters)
        .map(|_| {
            let x = rng.uniform(0.0, box_side);
            let y = rng.uniform(0.0, box_side);
            Point::new(x, y)
        })
        .collect();
    DiskSet::unit(
        (0..n)
            .map(|i| {
                let r = spread * rng.next_f64().sqrt();
                let a = rng.uniform(0.0, TAU);
                hubs[i % clusters] + Point::polar(a, r)
            })
            .collect(),
    )
}

/// A set whose best lattice positioning hits as many disks as the deepest
/// point of the original set is covered.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthReduction {
    pub disks: DiskSet,
    /// Side of the triangular lattice to position.
    pub side: f64,
}

/// Encloses all disks in one equilateral lattice triangle (with a margin so
/// no disk reaches its corners), then moves disk `i` into its own copy of
/// that triangle. Translations are lattice vectors, so a point of the
/// lattice lies in a moved disk exactly when one lies in the original, and
/// the enclosing triangle holds at most one lattice point off its corners.
pub fn gen_depth_reduction(disks: &DiskSet) -> Result<DepthReduction> {
    let Some(bbox) = disks.bbox() else {
        return Ok(DepthReduction {
            disks: DiskSet::new(disks.radius(), Vec::new())?,
            side: three_colour_side(),
        });
    };
    let margin = 1.0;
    let bbox = bbox.expanded(margin);
    let h = bbox.height();
    let side = bbox.width() + 2.0 * h / 3f64.sqrt();
    let corner = Point::new(bbox.min.x - h / 3f64.sqrt(), bbox.min.y);
    let lattice = TriLattice::new(side, corner, crate::lattice::TriColouring::Mono)?;
    let (u, v) = lattice.basis();
    let cols = (disks.len() as f64).sqrt().ceil() as usize;
    let centers = disks
        .centers()
        .iter()
        .enumerate()
        .map(|(i, &c)| c + u * (i % cols) as f64 + v * (i / cols) as f64)
        .collect();
    Ok(DepthReduction {
        disks: DiskSet::new(disks.radius(), centers)?,
        side,
    })
}

/// Instance where the deepest positioning is not the heaviest.
///
/// Three lattice points `S`, `T`, `R` of the 3-colour lattice at offset 0
/// form a triangle with barycenter `V`. Two disks sit on `S` and `T`; three
/// more sit `1/3` from `V` toward the triangle's edge midpoints, so each
/// has a point of the lattice reflected through `V` on its boundary with
/// the worst-case hexagon capture. The reflected lattice hits three disks
/// for weight `3Δ`; the original hits two for weight `2π`.
pub fn gen_positioning_tradeoff() -> TradeoffInstance {
    let l = TriLattice::three_colour(Point::ORIGIN);
    let (s, t, r) = (l.point(0, 0), l.point(1, 0), l.point(0, 1));
    let v = (s + t + r) * (1.0 / 3.0);
    let toward = |m: Point| v + (m - v) * ((1.0 / 3.0) / m.dist(v));
    let centers = vec![
        s,
        t,
        toward((s + t) * 0.5),
        toward((t + r) * 0.5),
        toward((r + s) * 0.5),
    ];
    TradeoffInstance {
        disks: DiskSet::unit(centers).expect("finite"),
        pair_lattice: l,
        triple_lattice: l.with_offset(v * 2.0),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TradeoffInstance {
    pub disks: DiskSet,
    /// Hits the two disks centered on lattice points.
    pub pair_lattice: TriLattice,
    /// Hits the three overlapping disks at their worst-case capture.
    pub triple_lattice: TriLattice,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{max_depth, max_distinct_translate_depth, translate_to_cell};
    use crate::geom::{delta_closed_form, Circle};
    use crate::selector::select_at;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn spirograph_shape() {
        let d = gen_spirograph(100, 0.01, 5).unwrap();
        assert_eq!(d.len(), 100);
        for c in d.circles() {
            assert_abs_diff_eq!(c.center.norm(), 0.99, epsilon = 1e-12);
            assert!(c.contains(Point::ORIGIN));
        }
        assert_eq!(d, gen_spirograph(100, 0.01, 5).unwrap());
        assert_ne!(d, gen_spirograph(100, 0.01, 6).unwrap());
        let circles: Vec<Circle> = d.circles().collect();
        assert_eq!(max_depth(&circles).unwrap().1, 100);
    }

    #[test]
    fn spirograph_rejects_bad_parameters() {
        assert!(gen_spirograph(2, 0.1, 0).is_err());
        assert!(gen_spirograph(5, 0.0, 0).is_err());
        assert!(gen_spirograph(5, 1.0, 0).is_err());
        assert!(gen_spirograph(5, f64::NAN, 0).is_err());
    }

    #[test]
    fn random_is_deterministic_and_boxed() {
        let a = gen_random(200, 20.0, 42).unwrap();
        assert_eq!(a, gen_random(200, 20.0, 42).unwrap());
        assert!(a
            .centers()
            .iter()
            .all(|p| (0.0..20.0).contains(&p.x) && (0.0..20.0).contains(&p.y)));
        assert_eq!(gen_random(1, 10.0, 3).unwrap().len(), 1);
        assert!(gen_random(0, 10.0, 3).is_err());
        assert!(gen_random(3, 0.0, 3).is_err());
    }

    #[test]
    fn clustered_stays_near_hubs() {
        let d = gen_clustered(60, 3, 30.0, 1.5, 9).unwrap();
        assert_eq!(d.len(), 60);
        for (i, c) in d.centers().iter().enumerate() {
            let same: Vec<_> = d.centers().iter().skip(i % 3).step_by(3).collect();
            assert!(same.iter().all(|q| q.dist(*c) <= 3.0 + 1e-12));
        }
    }

    fn reduced_positioning_count(d: &DiskSet) -> usize {
        let red = gen_depth_reduction(d).unwrap();
        let l =
            TriLattice::new(red.side, Point::ORIGIN, crate::lattice::TriColouring::Mono).unwrap();
        let copies = translate_to_cell(&red.disks, &l);
        max_distinct_translate_depth(&copies)
            .unwrap()
            .distinct_translates
    }

    #[test]
    fn depth_reduction_spirograph() {
        let d = gen_spirograph(5, 0.01, 1).unwrap();
        assert_eq!(reduced_positioning_count(&d), 5);
    }

    #[test]
    fn depth_reduction_single_and_disjoint() {
        let one = DiskSet::unit(vec![Point::new(2.0, 3.0)]).unwrap();
        assert_eq!(gen_depth_reduction(&one).unwrap().disks.len(), 1);
        assert_eq!(reduced_positioning_count(&one), 1);
        let apart =
            DiskSet::unit((0..6).map(|i| Point::new(3.0 * i as f64, 0.0)).collect()).unwrap();
        assert_eq!(reduced_positioning_count(&apart), 1);
    }

    #[test]
    fn depth_reduction_matches_depth_on_random_sets() {
        for seed in 0..8u64 {
            let d = gen_random(2 + seed as usize, 3.0, seed).unwrap();
            let circles: Vec<Circle> = d.circles().collect();
            let depth = max_depth(&circles).unwrap().1;
            assert_eq!(reduced_positioning_count(&d), depth, "seed {seed}");
        }
    }

    #[test]
    fn tradeoff_lattices_select_as_designed() {
        let inst = gen_positioning_tradeoff();
        let pair = select_at(&inst.disks, &inst.pair_lattice);
        assert_eq!(pair.labels.iter().flatten().count(), 2);
        assert!(pair.labels[0].is_some() && pair.labels[1].is_some());
        assert_abs_diff_eq!(pair.weight, 2.0 * PI, epsilon = 1e-9);
        let triple = select_at(&inst.disks, &inst.triple_lattice);
        assert_eq!(triple.labels[..2], [None, None]);
        assert_eq!(triple.hits, 3);
        assert_abs_diff_eq!(triple.weight, 3.0 * delta_closed_form(), epsilon = 1e-6);
    }
}
