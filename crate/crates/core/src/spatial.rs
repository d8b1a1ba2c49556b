//! Uniform bucket grid for fixed-radius neighbour queries.

use std::collections::HashMap;

use crate::geom::Point;

pub(crate) struct BucketGrid {
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<usize>>,
}

impl BucketGrid {
    /// `cell` should be at least the query radius used with [`BucketGrid::near`].
    pub(crate) fn new(points: impl IntoIterator<Item = Point>, cell: f64) -> Self {
        let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (idx, p) in points.into_iter().enumerate() {
            buckets.entry(key(p, cell)).or_default().push(idx);
        }
        BucketGrid { cell, buckets }
    }

    /// Indices of points in the 3x3 block of buckets around `p`, ascending.
    /// Covers every point within distance `cell` of `p`.
    pub(crate) fn near(&self, p: Point) -> Vec<usize> {
        let (kx, ky) = key(p, self.cell);
        let mut out = Vec::new();
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(b) = self.buckets.get(&(kx + dx, ky + dy)) {
                    out.extend_from_slice(b);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Calls `f` for each indexed point in the 3x3 block around `p`
    /// (unordered), stopping early when `f` returns `true`.
    pub(crate) fn any_near(&self, p: Point, mut f: impl FnMut(usize) -> bool) -> bool {
        let (kx, ky) = key(p, self.cell);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(b) = self.buckets.get(&(kx + dx, ky + dy)) {
                    if b.iter().any(|&i| f(i)) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

fn key(p: Point, cell: f64) -> (i64, i64) {
    ((p.x / cell).floor() as i64, (p.y / cell).floor() as i64)
}
