//! Convex hull geometry: extremal points, facet inequalities, lattice points of dilates.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::lp::strict_separator;
use super::Point;

/// `<normal, x> <= offset` on the hull.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Point,
    pub offset: i64,
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn dot_i128(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Points of `points` with a strictly separating hyperplane, each with an
/// integer normal `n` such that `<n, x - v> >= 1` for every other point `x`.
pub fn extremal_with_normals(points: &[Point]) -> Vec<(Point, Point)> {
    points
        .iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let others: Vec<Point> = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, x)| x.clone())
                .collect();
            strict_separator(v, &others).map(|n| (v.clone(), n))
        })
        .collect()
}

/// Determinant by fraction-free elimination.
pub(crate) fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Vector orthogonal to `d - 1` vectors in `Z^d` (all zero when they are dependent).
pub(crate) fn cross(vectors: &[Point], d: usize) -> Point {
    (0..d)
        .map(|k| {
            let minor: Vec<Vec<i128>> = vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != k)
                        .map(|(_, &x)| x as i128)
                        .collect()
                })
                .collect();
            let s = if k % 2 == 0 { 1 } else { -1 };
            (s * det(minor)) as i64
        })
        .collect()
}

pub(crate) fn primitive(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Facet inequalities of a full-dimensional hull with the given vertices.
pub fn facets(vertices: &[Point], d: usize) -> Vec<Facet> {
    let mut found = BTreeSet::new();
    for s in subsets(vertices.len(), d) {
        let p0 = &vertices[s[0]];
        let diffs: Vec<Point> = s[1..]
            .iter()
            .map(|&i| vertices[i].iter().zip(p0).map(|(a, b)| a - b).collect())
            .collect();
        let mut n = cross(&diffs, d);
        if n.iter().all(|&x| x == 0) {
            continue;
        }
        primitive(&mut n);
        let c = dot(&n, p0);
        let sides: Vec<i64> = vertices.iter().map(|x| dot(&n, x) - c).collect();
        if sides.iter().all(|&s| s <= 0) {
            found.insert(Facet { normal: n, offset: c });
        } else if sides.iter().all(|&s| s >= 0) {
            found.insert(Facet {
                normal: n.iter().map(|x| -x).collect(),
                offset: -c,
            });
        }
    }
    found.into_iter().collect()
}

/// Whether `p` lies in `(num/den) H`.
pub fn in_dilate(facets: &[Facet], p: &[i64], num: i64, den: i64) -> bool {
    facets
        .iter()
        .all(|f| dot_i128(&f.normal, p) * den as i128 <= f.offset as i128 * num as i128)
}

/// Integer points of the box spanned by `(num/den) * vertices`.
pub fn dilate_box(vertices: &[Point], d: usize, num: i64, den: i64) -> Vec<(i64, i64)> {
    (0..d)
        .map(|j| {
            let lo = vertices.iter().map(|v| v[j]).min().unwrap() * num;
            let hi = vertices.iter().map(|v| v[j]).max().unwrap() * num;
            (Integer::div_floor(&lo, &den), Integer::div_ceil(&hi, &den))
        })
        .collect()
}

pub fn box_size(bounds: &[(i64, i64)]) -> u128 {
    bounds
        .iter()
        .map(|&(lo, hi)| (hi - lo + 1).max(0) as u128)
        .product()
}

/// Calls `f` on every integer point of the box, in lexicographic order.
pub fn for_each_in_box(bounds: &[(i64, i64)], mut f: impl FnMut(&[i64])) {
    if bounds.iter().any(|&(lo, hi)| lo > hi) {
        return;
    }
    let mut p: Vec<i64> = bounds.iter().map(|&(lo, _)| lo).collect();
    loop {
        f(&p);
        let mut i = bounds.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if p[i] < bounds[i].1 {
                p[i] += 1;
                for (x, b) in p[i + 1..].iter_mut().zip(&bounds[i + 1..]) {
                    *x = b.0;
                }
                break;
            }
        }
    }
}
