//! Shared fixtures for the integration tests: seeded instance corpora and
//! brute-force oracles that do not reuse the library's algorithms.

#![allow(dead_code)]

use std::sync::{Mutex, MutexGuard, OnceLock};

use diskcover::io::{gen_clustered, gen_random, gen_spirograph};
use diskcover::prng::SplitMix64;
use diskcover::{Circle, DiskSet};

pub struct Case {
    pub name: String,
    pub disks: DiskSet,
}

/// 500 instances: 400 uniform random (n in [1, 200], densities from sparse
/// to heavily overlapping), 50 spirographs, 50 clustered.
pub fn corpus() -> &'static [Case] {
    static CORPUS: OnceLock<Vec<Case>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut rng = SplitMix64::new(0xC0FFEE);
        let mut out = Vec::with_capacity(500);
        for i in 0..400 {
            let n = rng.range_inclusive(1, 200) as usize;
            let side = rng.uniform(0.5, 3.5) * (n as f64).sqrt() + 0.5;
            let seed = rng.next_u64();
            out.push(Case {
                name: format!("random#{i} n={n} side={side:.2}"),
                disks: gen_random(n, side, seed).unwrap(),
            });
        }
        for i in 0..50 {
            let n = rng.range_inclusive(3, 100) as usize;
            let eps = rng.uniform(0.01, 0.5);
            let seed = rng.next_u64();
            out.push(Case {
                name: format!("spirograph#{i} n={n} eps={eps:.3}"),
                disks: gen_spirograph(n, eps, seed).unwrap(),
            });
        }
        for i in 0..50 {
            let n = rng.range_inclusive(5, 200) as usize;
            let clusters = rng.range_inclusive(1, 6) as usize;
            let side = rng.uniform(5.0, 30.0);
            let spread = rng.uniform(0.5, 3.0);
            let seed = rng.next_u64();
            out.push(Case {
                name: format!("clustered#{i} n={n} k={clusters}"),
                disks: gen_clustered(n, clusters, side, spread, seed).unwrap(),
            });
        }
        out
    })
}

/// 200 random instances with at most 12 disks.
pub fn small_corpus() -> &'static [Case] {
    static SMALL: OnceLock<Vec<Case>> = OnceLock::new();
    SMALL.get_or_init(|| {
        let mut rng = SplitMix64::new(0x5EED);
        (0..200)
            .map(|i| {
                let n = rng.range_inclusive(1, 12) as usize;
                let side = rng.uniform(0.5, 6.0);
                let seed = rng.next_u64();
                Case {
                    name: format!("small#{i} n={n} side={side:.2}"),
                    disks: gen_random(n, side, seed).unwrap(),
                }
            })
            .collect()
    })
}

/// Runs one test at a time so wall-clock budgets are measured without
/// competition from sibling tests.
pub fn exclusive() -> MutexGuard<'static, ()> {
    static LOCK: Mutex<()> = Mutex::new(());
    LOCK.lock().unwrap_or_else(|e| e.into_inner())
}

/// Prints the one-line verdict for an acceptance criterion and fails the
/// test when it does not hold.
pub fn verdict(id: u32, title: &str, ok: bool, detail: impl AsRef<str>) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} [{tag}] {title}: {}", detail.as_ref());
    assert!(ok, "criterion {id} failed: {}", detail.as_ref());
}

/// Maximum number of distinct labels among the disks covering a point,
/// scanning horizontal lines. Lines go through every slab between
/// consecutive critical heights (disk tops, bottoms, pairwise crossings)
/// plus `uniform` evenly spaced ones, so every face of positive area is
/// crossed. On each line the covering intervals are swept left to right.
pub fn scanline_labelled_depth(circles: &[Circle], labels: &[usize], uniform: usize) -> usize {
    if circles.is_empty() {
        return 0;
    }
    let mut critical: Vec<f64> = Vec::new();
    for (i, a) in circles.iter().enumerate() {
        critical.push(a.center.y - a.radius);
        critical.push(a.center.y + a.radius);
        for b in &circles[i + 1..] {
            for y in crossing_heights(a, b) {
                critical.push(y);
            }
        }
    }
    critical.sort_by(f64::total_cmp);
    critical.dedup();
    let lo = critical[0];
    let hi = critical[critical.len() - 1];
    let mut lines: Vec<f64> = critical.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    let h = (hi - lo) / uniform as f64;
    lines.extend((0..uniform).map(|k| lo + (k as f64 + 0.5) * h));

    let n_labels = labels.iter().max().map_or(0, |m| m + 1);
    let mut counts = vec![0u32; n_labels];
    let mut best = 0;
    let mut events: Vec<(f64, i32, usize)> = Vec::new();
    for y in lines {
        events.clear();
        for (c, &l) in circles.iter().zip(labels) {
            let dy = y - c.center.y;
            let s = c.radius * c.radius - dy * dy;
            if s > 0.0 {
                let w = s.sqrt();
                events.push((c.center.x - w, 0, l));
                events.push((c.center.x + w, 1, l));
            }
        }
        events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut distinct = 0;
        for &(_, kind, l) in &events {
            if kind == 0 {
                if counts[l] == 0 {
                    distinct += 1;
                }
                counts[l] += 1;
                best = best.max(distinct);
            } else {
                counts[l] -= 1;
                if counts[l] == 0 {
                    distinct -= 1;
                }
            }
        }
    }
    best
}

fn crossing_heights(a: &Circle, b: &Circle) -> Vec<f64> {
    let dx = b.center.x - a.center.x;
    let dy = b.center.y - a.center.y;
    let d2 = dx * dx + dy * dy;
    let d = d2.sqrt();
    if d == 0.0 || d > a.radius + b.radius || d < (a.radius - b.radius).abs() {
        return Vec::new();
    }
    let along = (d2 + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    let off = (a.radius * a.radius - along * along).max(0.0).sqrt();
    let my = a.center.y + along * dy / d;
    vec![my + off * dx / d, my - off * dx / d]
}

/// Largest union area over all triples of disks. On an instance where
/// every disk contains one common point, no valid 3-colouring selects more
/// than three disks, so this bounds every 3-colour solver from above.
pub fn best_triple_union(disks: &DiskSet) -> f64 {
    let c = disks.centers();
    let n = c.len();
    let mut best: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let sub = DiskSet::unit(vec![c[i], c[j], c[k]]).unwrap();
                best = best.max(diskcover::union_area::exact_union_area(&sub));
            }
        }
    }
    best
}
