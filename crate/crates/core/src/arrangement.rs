//! Lattice positioning through a circle arrangement over the fundamental
//! cell.
//!
//! Every disk is cut along the lattice's cell translates and the pieces are
//! moved into the fundamental cell, remembering which translate each copy
//! came from. A point `q` of the cell then stands for the lattice offset `q`:
//! the number of distinct translates whose copies cover `q` is the number of
//! lattice points landing in the union.
//!
//! The maximum is found by walking each circle's boundary. Candidate points
//! on circle `C` are its crossings with the other circles plus one point
//! strictly inside each arc between consecutive crossings. Every face of the
//! arrangement is bounded by such arcs, so the candidates hit every face.
//! An angular sweep keeps per-label counts of the disks covering the
//! current arc, scoring all candidates in `O(m log m)` for `m` neighbours;
//! the highest-scoring ones are confirmed by an explicit recount.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{Circle, Point, EPS};
use crate::lattice::Lattice;
use crate::spatial::BucketGrid;
use crate::union_area::DiskSet;

/// Crossing angles closer than this are treated as one event.
const ANGLE_TIE: f64 = 1e-12;

/// Which translate `(i, j)` of the fundamental cell a copy came from.
pub type TranslateId = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslatedCircle {
    pub circle: Circle,
    pub translate: TranslateId,
    /// Index of the originating disk.
    pub source: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DepthWitness {
    /// A point of the plane; used as the new lattice offset.
    pub point: Point,
    /// Number of translates with a copy covering `point`.
    pub distinct_translates: usize,
    /// Copies covering `point`, per translate.
    pub per_translate_counts: BTreeMap<TranslateId, usize>,
}

/// Copies of each disk for every cell translate whose interior it meets.
///
/// A copy of disk `d` for translate `(i, j)` is `d − (i·u + j·v)`. Only
/// copies reaching more than `EPS` into the closed cell are kept, so a disk
/// that merely touches a cell (up to rounding) is not copied there. Every
/// offset class has a representative in the cell's interior or on a side
/// shared with a kept copy, so no depth is lost. When the cell's widths are at least one diameter
/// (true for all solver lattices) there are at most 4 copies per disk.
pub fn translate_to_cell<L: Lattice>(disks: &DiskSet, lattice: &L) -> Vec<TranslatedCircle> {
    let (u, v) = lattice.basis();
    let cell = lattice.fundamental_cell();
    let area = lattice.cell_area();
    let r = disks.radius();
    // perpendicular widths of the cell across each pair of sides
    let reach_i = (r / (area / v.norm())).ceil() as i64;
    let reach_j = (r / (area / u.norm())).ceil() as i64;

    let mut out = Vec::new();
    for (source, &c) in disks.centers().iter().enumerate() {
        let (_, (i0, j0)) = lattice.wrap_to_cell(c);
        for i in i0 - reach_i..=i0 + reach_i {
            for j in j0 - reach_j..=j0 + reach_j {
                let center = c - (u * i as f64 + v * j as f64);
                if cell.distance_to(center) < r - EPS {
                    out.push(TranslatedCircle {
                        circle: Circle { center, radius: r },
                        translate: (i, j),
                        source,
                    });
                }
            }
        }
    }
    out
}

/// A point maximizing the number of distinct translates covering it.
/// Ties go to the lexicographically smallest candidate point.
pub fn max_distinct_translate_depth(circles: &[TranslatedCircle]) -> Result<DepthWitness> {
    if circles.is_empty() {
        return Err(Error::Empty("no translated circles"));
    }
    let ids: Vec<TranslateId> = circles.iter().map(|c| c.translate).collect();
    let mut distinct = ids.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let labels: Vec<usize> = ids
        .iter()
        .map(|t| distinct.binary_search(t).expect("present"))
        .collect();
    let plain: Vec<Circle> = circles.iter().map(|c| c.circle).collect();
    let (point, _) = best_labelled_point(&plain, &labels);

    let mut per_translate_counts = BTreeMap::new();
    for c in circles.iter().filter(|c| c.circle.contains(point)) {
        *per_translate_counts.entry(c.translate).or_insert(0) += 1;
    }
    Ok(DepthWitness {
        point,
        distinct_translates: per_translate_counts.len(),
        per_translate_counts,
    })
}

/// A point covered by the most circles (closed), with that depth.
pub fn max_depth(circles: &[Circle]) -> Result<(Point, usize)> {
    if circles.is_empty() {
        return Err(Error::Empty("no circles"));
    }
    let labels: Vec<usize> = (0..circles.len()).collect();
    let (point, _) = best_labelled_point(circles, &labels);
    let depth = circles.iter().filter(|c| c.contains(point)).count();
    Ok((point, depth))
}

/// Closed-disk depth of `p`, counting distinct labels.
pub fn labelled_depth_at(circles: &[Circle], labels: &[usize], p: Point) -> usize {
    let mut seen: Vec<usize> = circles
        .iter()
        .zip(labels)
        .filter(|(c, _)| c.contains(p))
        .map(|(_, &l)| l)
        .collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

#[derive(Clone, Copy)]
struct Best {
    count: usize,
    point: Point,
}

impl Best {
    fn better(self, other: Best) -> Best {
        match self.count.cmp(&other.count) {
            std::cmp::Ordering::Greater => self,
            std::cmp::Ordering::Less => other,
            std::cmp::Ordering::Equal => {
                if other.point.lex_cmp(&self.point).is_lt() {
                    other
                } else {
                    self
                }
            }
        }
    }
}

fn best_labelled_point(circles: &[Circle], labels: &[usize]) -> (Point, usize) {
    let max_r = circles.iter().map(|c| c.radius).fold(0.0, f64::max);
    let grid = BucketGrid::new(circles.iter().map(|c| c.center), 2.0 * max_r + EPS);
    let best = (0..circles.len())
        .into_par_iter()
        .map(|i| best_on_circle(i, circles, labels, &grid))
        .reduce_with(Best::better)
        .expect("non-empty");
    (best.point, best.count)
}

fn best_on_circle(i: usize, circles: &[Circle], labels: &[usize], grid: &BucketGrid) -> Best {
    let c = circles[i];
    let neighbours: Vec<usize> = grid
        .near(c.center)
        .into_iter()
        .filter(|&j| {
            j != i && c.center.dist(circles[j].center) <= c.radius + circles[j].radius + EPS
        })
        .collect();

    // local label ids, own label first-class member everywhere on the circle
    let mut local: Vec<usize> = neighbours.iter().map(|&j| labels[j]).collect();
    local.push(labels[i]);
    local.sort_unstable();
    local.dedup();
    let id = |l: usize| local.binary_search(&l).expect("collected above");
    let mut counts = vec![0u32; local.len()];
    let mut distinct = 0usize;
    let add = |counts: &mut [u32], distinct: &mut usize, l: usize| {
        if counts[l] == 0 {
            *distinct += 1;
        }
        counts[l] += 1;
    };
    add(&mut counts, &mut distinct, id(labels[i]));

    // arcs of `c` inside each neighbour, split at ±π
    let mut events: Vec<(f64, bool, usize)> = Vec::with_capacity(4 * neighbours.len());
    for &j in &neighbours {
        let o = circles[j];
        let l = id(labels[j]);
        let d = c.center.dist(o.center);
        if d <= o.radius - c.radius + EPS {
            add(&mut counts, &mut distinct, l);
            continue;
        }
        if d <= c.radius - o.radius {
            continue;
        }
        let cos_h = (d * d + c.radius * c.radius - o.radius * o.radius) / (2.0 * d * c.radius);
        let h = cos_h.clamp(-1.0, 1.0).acos();
        let phi = (o.center.y - c.center.y).atan2(o.center.x - c.center.x);
        let (a, b) = (phi - h, phi + h);
        if a < -PI {
            events.push((a + TAU, true, l));
            events.push((PI, false, l));
            events.push((-PI, true, l));
            events.push((b, false, l));
        } else if b > PI {
            events.push((a, true, l));
            events.push((PI, false, l));
            events.push((-PI, true, l));
            events.push((b - TAU, false, l));
        } else {
            events.push((a, true, l));
            events.push((b, false, l));
        }
    }
    events.sort_by(|x, y| x.0.total_cmp(&y.0).then(y.1.cmp(&x.1)));

    // sweep: score each crossing group (closed: entering and leaving disks
    // both count) and each open arc between groups
    let mut scored: Vec<(usize, f64)> = Vec::with_capacity(2 * events.len() + 1);
    if events.is_empty() {
        scored.push((distinct, FRAC_PI_2));
    }
    let mut k = 0;
    while k < events.len() {
        let a = events[k].0;
        let mut m = k;
        while m < events.len() && events[m].0 - a <= ANGLE_TIE && events[m].1 {
            add(&mut counts, &mut distinct, events[m].2);
            m += 1;
        }
        scored.push((distinct, a));
        while m < events.len() && events[m].0 - a <= ANGLE_TIE {
            let (_, enter, l) = events[m];
            if enter {
                add(&mut counts, &mut distinct, l);
            } else {
                counts[l] -= 1;
                if counts[l] == 0 {
                    distinct -= 1;
                }
            }
            m += 1;
        }
        let next = if m < events.len() {
            events[m].0
        } else {
            events[0].0 + TAU
        };
        if next - a > ANGLE_TIE {
            scored.push((distinct, 0.5 * (a + next)));
        }
        k = m;
    }

    // the sweep count is exact up to rounding; confirm the winner with an
    // explicit closed-disk recount and fall back to recounting every
    // near-top candidate if rounding made them disagree
    let recount = |angle: f64, scratch: &mut Vec<usize>| {
        let p = c.point_at(angle);
        scratch.clear();
        scratch.push(labels[i]);
        scratch.extend(
            neighbours
                .iter()
                .filter(|&&j| circles[j].contains(p))
                .map(|&j| labels[j]),
        );
        scratch.sort_unstable();
        scratch.dedup();
        Best {
            count: scratch.len(),
            point: p,
        }
    };
    let mut scratch: Vec<usize> = Vec::with_capacity(neighbours.len() + 1);
    let top = scored.iter().map(|s| s.0).max().unwrap_or(0);
    let leader = scored
        .iter()
        .filter(|s| s.0 == top)
        .map(|&(n, a)| (n, a, c.point_at(a)))
        .min_by(|x, y| x.2.lex_cmp(&y.2))
        .expect("at least one candidate");
    let confirmed = recount(leader.1, &mut scratch);
    if confirmed.count == top {
        return confirmed;
    }
    let mut best = confirmed;
    for &(_, angle) in scored.iter().filter(|s| s.0 + 1 >= top) {
        best = best.better(recount(angle, &mut scratch));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{SquareLattice, TriLattice};

    fn unit(pts: &[(f64, f64)]) -> DiskSet {
        DiskSet::unit(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn centroid_disk_has_few_copies() {
        let l = TriLattice::three_colour(Point::ORIGIN);
        let (u, v) = l.basis();
        let centroid = (u + v) * 0.5;
        let copies = translate_to_cell(&unit(&[(centroid.x, centroid.y)]), &l);
        // tangent to all four sides, so only its own cell
        assert_eq!(copies.len(), 1);
        assert_eq!(copies[0].translate, (0, 0));
    }

    #[test]
    fn corner_disk_has_four_copies() {
        let l = TriLattice::three_colour(Point::new(0.2, 0.1));
        let corner = l.point(2, -1);
        let copies = translate_to_cell(&unit(&[(corner.x, corner.y)]), &l);
        assert_eq!(copies.len(), 4);
        let mut ids: Vec<_> = copies.iter().map(|c| c.translate).collect();
        ids.sort();
        assert_eq!(ids, vec![(1, -2), (1, -1), (2, -2), (2, -1)]);
    }

    #[test]
    fn square_lattice_copies_bounded() {
        let l = SquareLattice::two_colour(Point::ORIGIN);
        let d = unit(&[(0.0, 0.0), (1.0, 1.3), (-5.2, 7.7)]);
        let copies = translate_to_cell(&d, &l);
        for s in 0..3 {
            let n = copies.iter().filter(|c| c.source == s).count();
            assert!((1..=4).contains(&n));
        }
    }

    #[test]
    fn one_circle() {
        let c = vec![TranslatedCircle {
            circle: Circle::unit(Point::new(0.5, 0.5)),
            translate: (0, 0),
            source: 0,
        }];
        let w = max_distinct_translate_depth(&c).unwrap();
        assert_eq!(w.distinct_translates, 1);
        assert!(c[0].circle.contains(w.point));
    }

    #[test]
    fn duplicate_circle_from_two_translates() {
        let circle = Circle::unit(Point::new(0.5, 0.5));
        let c = vec![
            TranslatedCircle {
                circle,
                translate: (0, 0),
                source: 0,
            },
            TranslatedCircle {
                circle,
                translate: (1, 0),
                source: 1,
            },
        ];
        let w = max_distinct_translate_depth(&c).unwrap();
        assert_eq!(w.distinct_translates, 2);
        assert_eq!(w.per_translate_counts.values().sum::<usize>(), 2);
    }

    #[test]
    fn same_translate_counts_once() {
        let c = vec![
            TranslatedCircle {
                circle: Circle::unit(Point::ORIGIN),
                translate: (0, 0),
                source: 0,
            },
            TranslatedCircle {
                circle: Circle::unit(Point::new(0.5, 0.0)),
                translate: (0, 0),
                source: 1,
            },
        ];
        let w = max_distinct_translate_depth(&c).unwrap();
        assert_eq!(w.distinct_translates, 1);
        assert!(w.per_translate_counts[&(0, 0)] >= 1);
    }

    #[test]
    fn empty_inputs_rejected() {
        assert!(max_distinct_translate_depth(&[]).is_err());
        assert!(max_depth(&[]).is_err());
    }

    #[test]
    fn disjoint_circles_depth_one() {
        let cs: Vec<Circle> = (0..6)
            .map(|k| Circle::unit(Point::new(3.0 * k as f64, 0.0)))
            .collect();
        assert_eq!(max_depth(&cs).unwrap().1, 1);
    }

    #[test]
    fn tangent_circles_meet_in_closed_depth_two() {
        let cs = [
            Circle::unit(Point::ORIGIN),
            Circle::unit(Point::new(2.0, 0.0)),
        ];
        let (p, d) = max_depth(&cs).unwrap();
        assert_eq!(d, 2);
        assert!(p.dist(Point::new(1.0, 0.0)) < 1e-6);
    }

    #[test]
    fn nested_circles() {
        let cs = [
            Circle::new(Point::ORIGIN, 3.0).unwrap(),
            Circle::new(Point::new(0.5, 0.0), 1.0).unwrap(),
        ];
        assert_eq!(max_depth(&cs).unwrap().1, 2);
    }

    #[test]
    fn tie_break_is_lexicographic() {
        // two separated pairs with equal depth: the left pair wins
        let cs = [
            Circle::unit(Point::new(10.0, 0.0)),
            Circle::unit(Point::new(10.5, 0.0)),
            Circle::unit(Point::new(0.0, 0.0)),
            Circle::unit(Point::new(0.5, 0.0)),
        ];
        let (p, d) = max_depth(&cs).unwrap();
        assert_eq!(d, 2);
        assert!(p.x < 5.0);
    }
}
