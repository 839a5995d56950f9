//! The projection ratio `Delta/delta` and a direction that (approximately) minimizes it.
//!
//! For a valid direction `u` (every nonzero `<a, u>` positive) the ratio is
//! `max <a, u> / min <a, u>`. On each cell of the arrangement cut out by the
//! hyperplanes `<a, u> = 0` and `<a - b, u> = 0` the maximizer and minimizer are
//! fixed, so the ratio is linear-fractional there and its infimum sits on an extreme
//! ray of the cell. Those rays are normals to `d - 1` vectors of `A ∪ (A - A)`,
//! which is the exact candidate family searched here. When the arrangement is not
//! pointed (lower-dimensional sets) the stored LP direction and, for `d = 2`, an
//! angular grid supply further candidates.

use std::f64::consts::PI;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::hull::{cross, dot, primitive, subsets};
use super::{LatticePointSet, Point};
use crate::numeric::ratio;

/// Points per full turn of the `d = 2` angular grid.
pub const GRID_RESOLUTION: u32 = 720;
/// Integer radius used to round grid directions.
pub const GRID_RADIUS: f64 = 10_000.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DirectionStats {
    /// Integer witness direction, not normalized.
    pub direction: Point,
    /// `min <a, u>` over nonzero `a`.
    pub min_projection: i64,
    /// `max <a, u>` over nonzero `a`.
    pub max_projection: i64,
    pub delta: f64,
    #[serde(rename = "Delta")]
    pub big_delta: f64,
    /// `max_projection / min_projection` as an exact fraction `"p/q"`.
    pub ratio: String,
    pub ratio_f64: f64,
    pub candidate_family: String,
    pub grid_resolution: Option<u32>,
    pub candidates: usize,
    pub label: String,
}

impl DirectionStats {
    pub fn ratio_exact(&self) -> BigRational {
        ratio(self.max_projection as i128, self.min_projection as i128)
    }
}

/// Projections `(min, max)` when `u` is valid for the nonzero points.
fn projections(nonzero: &[Point], u: &[i64]) -> Option<(i64, i64)> {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for a in nonzero {
        let p = dot(a, u);
        if p <= 0 {
            return None;
        }
        lo = lo.min(p);
        hi = hi.max(p);
    }
    Some((lo, hi))
}

fn candidate_family(set: &LatticePointSet) -> Vec<Point> {
    let d = set.dim();
    let mut pool: Vec<Point> = set.nonzero().cloned().collect();
    for a in set.points() {
        for b in set.points() {
            let diff: Point = a.iter().zip(b).map(|(x, y)| x - y).collect();
            if diff.iter().any(|&x| x != 0) {
                pool.push(diff);
            }
        }
    }
    for v in pool.iter_mut() {
        primitive(v);
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
    pool.sort();
    pool.dedup();

    let mut out = vec![set.direction().to_vec()];
    for s in subsets(pool.len(), d - 1) {
        let vs: Vec<Point> = s.iter().map(|&i| pool[i].clone()).collect();
        let mut n = cross(&vs, d);
        if n.iter().all(|&x| x == 0) {
            continue;
        }
        primitive(&mut n);
        out.push(n.iter().map(|x| -x).collect());
        out.push(n);
    }
    if d == 2 {
        out.extend(grid(0.0, 2.0 * PI, GRID_RESOLUTION));
    }
    out
}

fn grid(start: f64, width: f64, steps: u32) -> Vec<Point> {
    (0..steps)
        .map(|k| {
            let th = start + width * k as f64 / steps as f64;
            let mut n = vec![
                (GRID_RADIUS * th.cos()).round() as i64,
                (GRID_RADIUS * th.sin()).round() as i64,
            ];
            primitive(&mut n);
            n
        })
        .collect()
}

fn better(a: (i64, i64), b: (i64, i64)) -> bool {
    // a.1 / a.0 < b.1 / b.0
    (a.1 as i128) * (b.0 as i128) < (b.1 as i128) * (a.0 as i128)
}

/// Best `Delta/delta` over the candidate family; an upper bound on the true minimum.
pub fn delta_delta(set: &LatticePointSet) -> DirectionStats {
    let nonzero: Vec<Point> = set.nonzero().cloned().collect();
    let mut cands = candidate_family(set);
    let mut best: Option<(Point, (i64, i64))> = None;
    let consider = |u: &Point, best: &mut Option<(Point, (i64, i64))>| {
        if let Some(pr) = projections(&nonzero, u) {
            if best.as_ref().is_none_or(|(_, b)| better(pr, *b)) {
                *best = Some((u.clone(), pr));
            }
        }
    };
    for u in &cands {
        consider(u, &mut best);
    }
    let mut grid_resolution = None;
    if set.dim() == 2 {
        grid_resolution = Some(GRID_RESOLUTION);
        // refine one grid cell on each side of the best direction
        let (u, _) = best.as_ref().expect("the stored direction is valid");
        let th = (u[1] as f64).atan2(u[0] as f64);
        let step = 2.0 * PI / GRID_RESOLUTION as f64;
        let fine = grid(th - step, 2.0 * step, GRID_RESOLUTION);
        for v in &fine {
            consider(v, &mut best);
        }
        cands.extend(fine);
    }
    let (direction, (lo, hi)) = best.expect("the stored direction is valid");
    let norm = direction.iter().map(|&x| (x as f64).powi(2)).sum::<f64>().sqrt();
    let r = ratio(hi as i128, lo as i128);
    DirectionStats {
        min_projection: lo,
        max_projection: hi,
        delta: lo as f64 / norm,
        big_delta: hi as f64 / norm,
        ratio: r.to_string(),
        ratio_f64: hi as f64 / lo as f64,
        candidate_family: "normals to d-1 points of A ∪ (A-A), LP direction, d=2 angular grid"
            .into(),
        grid_resolution,
        candidates: cands.len(),
        label: "best-found".into(),
        direction,
    }
}
