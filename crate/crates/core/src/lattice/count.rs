//! Representation counts in `Z^d`.
//!
//! Every nonzero element has `<a, u> >= 1` for the stored direction `u`, so partial
//! sums only move forward along `u`. Both DPs below prune states beyond a level
//! `<p, u> <= L`, which keeps the state space finite.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::Zero;

use super::hull::{box_size, dilate_box, dot_i128};
use super::{LatticePointSet, Point};
use crate::caps::Caps;
use crate::denumerant::Tally;
use crate::error::Result;
use crate::set::Count;

fn add(p: &[i64], a: &[i64]) -> Point {
    p.iter().zip(a).map(|(x, y)| x + y).collect()
}

fn sub(p: &[i64], a: &[i64]) -> Point {
    p.iter().zip(a).map(|(x, y)| x - y).collect()
}

/// `layers[h][p] = rho_{A,h}(p)` for `h <= max_h`, restricted to `<p, u> <= level`.
fn layered<T: Tally>(
    nonzero: &[Point],
    u: &[i64],
    d: usize,
    max_h: usize,
    level: i128,
) -> Option<Vec<HashMap<Point, T>>> {
    let mut layers: Vec<HashMap<Point, T>> = (0..=max_h).map(|_| HashMap::new()).collect();
    layers[0].insert(vec![0; d], T::unit());
    for a in nonzero {
        for j in 1..=max_h {
            let (lo, hi) = layers.split_at_mut(j);
            let (prev, cur) = (&lo[j - 1], &mut hi[0]);
            for (p, c) in prev {
                let q = add(p, a);
                if dot_i128(&q, u) > level {
                    continue;
                }
                if !cur.entry(q).or_insert_with(T::nil).accumulate(c) {
                    return None;
                }
            }
        }
    }
    for j in 1..=max_h {
        let (lo, hi) = layers.split_at_mut(j);
        for (p, c) in &lo[j - 1] {
            if !hi[0].entry(p.clone()).or_insert_with(T::nil).accumulate(c) {
                return None;
            }
        }
    }
    Some(layers)
}

/// Total counts `rho_A(p)` for every `p` with `<p, u> <= level`, by the unbounded
/// coin recurrence over points sorted along `u`.
fn slab<T: Tally>(
    nonzero: &[Point],
    u: &[i64],
    d: usize,
    level: i128,
    caps: &Caps,
) -> Result<Option<(Vec<Point>, Vec<T>)>> {
    let origin = vec![0; d];
    let mut seen: HashSet<Point> = HashSet::from([origin.clone()]);
    let mut queue = VecDeque::from([origin]);
    while let Some(p) = queue.pop_front() {
        for a in nonzero {
            let q = add(&p, a);
            if dot_i128(&q, u) <= level && seen.insert(q.clone()) {
                caps.check_points(seen.len() as u128)?;
                queue.push_back(q);
            }
        }
    }
    let mut order: Vec<Point> = seen.into_iter().collect();
    order.sort_by(|p, q| dot_i128(p, u).cmp(&dot_i128(q, u)).then_with(|| p.cmp(q)));
    let index: HashMap<&Point, usize> = order.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut counts = vec![T::nil(); order.len()];
    counts[0] = T::unit();
    for a in nonzero {
        for (i, p) in order.iter().enumerate().skip(1) {
            if let Some(&j) = index.get(&sub(p, a)) {
                let (lo, hi) = counts.split_at_mut(i);
                if !hi[0].accumulate(&lo[j]) {
                    return Ok(None);
                }
            }
        }
    }
    Ok(Some((order, counts)))
}

/// `rho_A(p)` for every `p` in the cone with `<p, u> <= level`.
#[derive(Clone, Debug)]
pub struct TotalTable {
    pub level: i128,
    counts: HashMap<Point, Count>,
}

impl TotalTable {
    pub fn build(set: &LatticePointSet, level: i128, caps: &Caps) -> Result<Self> {
        let nz: Vec<Point> = set.nonzero().cloned().collect();
        let (u, d) = (set.direction(), set.dim());
        let counts = match slab::<u128>(&nz, u, d, level, caps)? {
            Some((order, c)) => order.into_iter().zip(c.iter().map(Tally::to_count)).collect(),
            None => {
                let (order, c) = slab::<BigUint>(&nz, u, d, level, caps)?.expect("bigint never overflows");
                order.into_iter().zip(c).collect()
            }
        };
        Ok(TotalTable { level, counts })
    }

    /// `rho_A(p)`; only meaningful for `<p, u> <= level`.
    pub fn get(&self, p: &[i64]) -> Count {
        self.counts.get(p).cloned().unwrap_or_else(Count::zero)
    }

    pub fn reaches(&self, p: &[i64], t: u64) -> bool {
        self.counts.get(p).is_some_and(|c| *c >= BigUint::from(t))
    }
}

#[derive(Clone, Debug)]
enum Layers {
    Word(Vec<HashMap<Point, u128>>),
    Big(Vec<HashMap<Point, BigUint>>),
}

/// `rho_{A,h}` on all of `Z^d` for every `h <= max_h`.
#[derive(Clone, Debug)]
pub struct RhoLadderD {
    max_h: u64,
    layers: Layers,
}

impl RhoLadderD {
    pub fn build(set: &LatticePointSet, max_h: u64, caps: &Caps) -> Result<Self> {
        let bounds = dilate_box(set.extremal_points(), set.dim(), max_h as i64, 1);
        caps.check_cells(box_size(&bounds) * (max_h as u128 + 1))?;
        Ok(Self::build_pruned(set, max_h, i128::MAX))
    }

    fn build_pruned(set: &LatticePointSet, max_h: u64, level: i128) -> Self {
        let nz: Vec<Point> = set.nonzero().cloned().collect();
        let (u, d) = (set.direction(), set.dim());
        let layers = match layered::<u128>(&nz, u, d, max_h as usize, level) {
            Some(l) => Layers::Word(l),
            None => Layers::Big(
                layered::<BigUint>(&nz, u, d, max_h as usize, level).expect("bigint never overflows"),
            ),
        };
        RhoLadderD { max_h, layers }
    }

    pub fn max_h(&self) -> u64 {
        self.max_h
    }

    pub fn count(&self, h: u64, p: &[i64]) -> Count {
        assert!(h <= self.max_h);
        match &self.layers {
            Layers::Word(l) => l[h as usize].get(p).map(Tally::to_count),
            Layers::Big(l) => l[h as usize].get(p).cloned(),
        }
        .unwrap_or_else(Count::zero)
    }

    pub fn reaches(&self, h: u64, p: &[i64], t: u64) -> bool {
        assert!(h <= self.max_h);
        match &self.layers {
            Layers::Word(l) => l[h as usize].get(p).is_some_and(|c| c.reaches(t)),
            Layers::Big(l) => l[h as usize].get(p).is_some_and(|c| c.reaches(t)),
        }
    }

    /// `(hA)^(t)`, sorted.
    pub fn support(&self, h: u64, t: u64) -> Vec<Point> {
        assert!(h <= self.max_h);
        let mut out: Vec<Point> = match &self.layers {
            Layers::Word(l) => l[h as usize]
                .iter()
                .filter(|(_, c)| c.reaches(t))
                .map(|(p, _)| p.clone())
                .collect(),
            Layers::Big(l) => l[h as usize]
                .iter()
                .filter(|(_, c)| c.reaches(t))
                .map(|(p, _)| p.clone())
                .collect(),
        };
        out.sort();
        out
    }
}

/// `ceil(<p, u> / min_a <a, u>)`: beyond this many parts `rho_{A,h}(p)` is constant.
pub fn stabilization_budget_d(set: &LatticePointSet, p: &[i64]) -> u64 {
    let level = dot_i128(p, set.direction());
    if level <= 0 {
        return 0;
    }
    (level as u128).div_ceil(set.min_projection() as u128) as u64
}

pub fn rho_h_d(set: &LatticePointSet, h: u64, p: &[i64]) -> Count {
    let level = dot_i128(p, set.direction());
    if level < 0 || p.len() != set.dim() {
        return Count::zero();
    }
    let h = h.min(stabilization_budget_d(set, p));
    RhoLadderD::build_pruned(set, h, level).count(h, p)
}

pub fn rho_total_d(set: &LatticePointSet, p: &[i64]) -> Result<Count> {
    let level = dot_i128(p, set.direction());
    if level < 0 || p.len() != set.dim() {
        return Ok(Count::zero());
    }
    Ok(TotalTable::build(set, level, &Caps::default())?.get(p))
}
