//! The structure predicate for `(hA)^(t)` in `Z^d`: lattice points of `h H(A)` minus
//! the reflected exceptional sets `h v - E_t(v - A)` of every vertex `v`.
//!
//! `E_t(v - A)` can be infinite, so it is only computed inside `h_cap H(v - A)`;
//! for `h <= h_cap` nothing outside that region can meet `h H(A)`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::count::{RhoLadderD, TotalTable};
use super::direction::delta_delta;
use super::hull::{det, subsets};
use super::{format_point, LatticePointSet, Point};
use crate::caps::Caps;
use crate::error::{invalid, Error, Result};
use crate::numeric::{int, rational_ceil};

/// `E_t(v - A)` restricted to `dilation * H(v - A)`.
#[derive(Clone, Debug)]
struct TruncatedExceptional {
    vertex: Point,
    level: i128,
    members: HashSet<Point>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationRegion {
    pub vertex: Point,
    /// `E_t(v - A)` was computed on `dilation * H(v - A)`.
    pub dilation: u64,
    /// Largest projection `<q, u>` covered by the count table.
    pub level: i128,
    pub exceptional_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZdStructureReport {
    pub set: String,
    pub h: u64,
    pub t: u64,
    pub lhs_size: usize,
    pub rhs_size: usize,
    pub structured: bool,
    /// Points of `rhs \ lhs`, cut to the witness limit.
    pub witnesses: Vec<Point>,
    pub witness_count: usize,
    /// `|lhs \ rhs|`; always zero.
    pub extra_count: usize,
    pub truncation: Vec<TruncationRegion>,
}

/// Shared state for checking the structure predicate at every `h <= h_cap`.
pub struct ZdAnalyzer {
    set: LatticePointSet,
    t: u64,
    h_cap: u64,
    caps: Caps,
    ladder: RhoLadderD,
    exceptional: Vec<TruncatedExceptional>,
}

impl ZdAnalyzer {
    pub fn new(set: &LatticePointSet, t: u64, h_cap: u64, caps: &Caps) -> Result<Self> {
        set.require_full()?;
        if t == 0 {
            return Err(invalid("t must be at least 1"));
        }
        let top = set.dilate_points(h_cap as i64, 1, caps.max_lattice_points)?;
        caps.check_points(top.len() as u128)?;
        let ladder = RhoLadderD::build(set, h_cap, caps)?;
        let exceptional = set
            .extremal_points()
            .par_iter()
            .map(|v| {
                let b = set.translate_reflect(v);
                let level = h_cap as i128 * b.max_projection() as i128;
                let table = TotalTable::build(&b, level, caps)?;
                let members = b
                    .dilate_points(h_cap as i64, 1, caps.max_lattice_points)?
                    .into_iter()
                    .filter(|q| !table.reaches(q, t))
                    .collect();
                Ok(TruncatedExceptional {
                    vertex: v.clone(),
                    level,
                    members,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ZdAnalyzer {
            set: set.clone(),
            t,
            h_cap,
            caps: caps.clone(),
            ladder,
            exceptional,
        })
    }

    pub fn h_cap(&self) -> u64 {
        self.h_cap
    }

    fn check_h(&self, h: u64) -> Result<()> {
        if h > self.h_cap {
            return Err(invalid(format!("h = {h} exceeds the analyzer cap {}", self.h_cap)));
        }
        Ok(())
    }

    /// `(hA)^(t)`, sorted.
    pub fn lhs(&self, h: u64) -> Result<Vec<Point>> {
        self.check_h(h)?;
        Ok(self.ladder.support(h, self.t))
    }

    /// `(h H(A) ∩ Λ_A) \ ∪_v (h v - E_t(v - A))`, sorted.
    pub fn rhs(&self, h: u64) -> Result<Vec<Point>> {
        self.check_h(h)?;
        let pts = self.set.dilate_points(h as i64, 1, self.caps.max_lattice_points)?;
        let h = h as i64;
        Ok(pts
            .into_iter()
            .filter(|p| {
                self.exceptional.iter().all(|e| {
                    let q: Point = e.vertex.iter().zip(p).map(|(v, x)| h * v - x).collect();
                    !e.members.contains(&q)
                })
            })
            .collect())
    }

    pub fn truncation(&self) -> Vec<TruncationRegion> {
        self.exceptional
            .iter()
            .map(|e| TruncationRegion {
                vertex: e.vertex.clone(),
                dilation: self.h_cap,
                level: e.level,
                exceptional_size: e.members.len(),
            })
            .collect()
    }

    pub fn report(&self, h: u64) -> Result<ZdStructureReport> {
        let lhs = self.lhs(h)?;
        let rhs = self.rhs(h)?;
        let in_lhs: HashSet<&Point> = lhs.iter().collect();
        let in_rhs: HashSet<&Point> = rhs.iter().collect();
        let missing: Vec<Point> = rhs.iter().filter(|p| !in_lhs.contains(p)).cloned().collect();
        let extra_count = lhs.iter().filter(|p| !in_rhs.contains(p)).count();
        Ok(ZdStructureReport {
            set: self.set.to_string(),
            h,
            t: self.t,
            lhs_size: lhs.len(),
            rhs_size: rhs.len(),
            structured: missing.is_empty() && extra_count == 0,
            witness_count: missing.len(),
            witnesses: missing.into_iter().take(self.caps.witness_limit).collect(),
            extra_count,
            truncation: self.truncation(),
        })
    }

    /// Every `h` in `1..=h_cap` where the predicate fails.
    pub fn failures(&self) -> Result<Vec<u64>> {
        let flags = (1..=self.h_cap)
            .into_par_iter()
            .map(|h| Ok((h, self.lhs(h)? == self.rhs(h)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(flags.into_iter().filter(|&(_, ok)| !ok).map(|(h, _)| h).collect())
    }
}

pub fn t_sumset_d(set: &LatticePointSet, h: u64, t: u64, caps: &Caps) -> Result<Vec<Point>> {
    Ok(RhoLadderD::build(set, h, caps)?.support(h, t))
}

pub fn structured_rhs_d(set: &LatticePointSet, h: u64, t: u64, caps: &Caps) -> Result<Vec<Point>> {
    ZdAnalyzer::new(set, t, h, caps)?.rhs(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureIndex {
    pub set: String,
    pub t: u64,
    pub h_cap: u64,
    /// Smallest `h*` with the predicate holding on all of `[h*, h_cap]`.
    pub h_star: Option<u64>,
    pub failures: Vec<u64>,
    pub truncation: Vec<TruncationRegion>,
    pub label: String,
}

/// Not a certificate: structure beyond `h_cap` is not checked.
pub fn empirical_structure_index(
    set: &LatticePointSet,
    t: u64,
    h_cap: u64,
    caps: &Caps,
) -> Result<StructureIndex> {
    let an = ZdAnalyzer::new(set, t, h_cap, caps)?;
    let failures = an.failures()?;
    let h_star = match failures.last() {
        None => (h_cap >= 1).then_some(1),
        Some(&f) if f == h_cap => None,
        Some(&f) => Some(f + 1),
    };
    Ok(StructureIndex {
        set: set.to_string(),
        t,
        h_cap,
        h_star,
        failures,
        truncation: an.truncation(),
        label: format!("empirical up to h_cap = {h_cap}"),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTerm {
    pub vertex: Point,
    /// `Delta/delta` of `v - A` (best-found).
    pub ratio: String,
    pub phi: String,
    /// `ceil(ratio * phi)`.
    pub term: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZdBound {
    pub t: u64,
    pub value: u64,
    /// The maximizing vertex subset.
    pub subset: Vec<Point>,
    pub terms: Vec<BoundTerm>,
}

/// Non-origin members of `ex` forming, with `0`, a full-dimensional simplex.
fn admissible_subsets(set: &LatticePointSet) -> Vec<Vec<Point>> {
    let d = set.dim();
    let others: Vec<&Point> = set
        .extremal_points()
        .iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    subsets(others.len(), d)
        .into_iter()
        .map(|s| s.iter().map(|&i| others[i].clone()).collect::<Vec<Point>>())
        .filter(|b| det(columns(b)) != 0)
        .collect()
}

/// Square matrix with the given vectors as columns.
fn columns(vs: &[Point]) -> Vec<Vec<i128>> {
    let d = vs.len();
    (0..d).map(|i| vs.iter().map(|v| v[i] as i128).collect()).collect()
}

/// `max_B Σ_{b ∈ B} ceil((Delta/delta)(b - A) * phi[b])` over admissible `B ∋ 0`.
pub fn zd_bound_formula(
    set: &LatticePointSet,
    t: u64,
    phi: &BTreeMap<Point, BigRational>,
) -> Result<ZdBound> {
    set.require_full()?;
    let terms: Vec<BoundTerm> = set
        .extremal_points()
        .iter()
        .map(|v| {
            let f = phi
                .get(v)
                .ok_or_else(|| invalid(format!("no phi value for vertex ({})", format_point(v))))?;
            if *f < BigRational::one() {
                return Err(invalid(format!(
                    "phi for vertex ({}) is {f}, below 1",
                    format_point(v)
                )));
            }
            let r = delta_delta(&set.translate_reflect(v)).ratio_exact();
            let term = rational_ceil(&(&r * f));
            Ok(BoundTerm {
                vertex: v.clone(),
                ratio: r.to_string(),
                phi: f.to_string(),
                term: u64::try_from(term).map_err(|_| Error::Domain("bound term overflows u64".into()))?,
            })
        })
        .collect::<Result<_>>()?;
    let term_of = |v: &Point| terms.iter().find(|x| &x.vertex == v).unwrap().term;
    let origin = vec![0; set.dim()];
    let (value, subset) = admissible_subsets(set)
        .into_iter()
        .map(|b| {
            let s = term_of(&origin) + b.iter().map(term_of).sum::<u64>();
            let mut full = vec![origin.clone()];
            full.extend(b);
            (s, full)
        })
        .max_by(|x, y| x.0.cmp(&y.0).then_with(|| y.1.cmp(&x.1)))
        .ok_or_else(|| Error::Unsupported("no spanning vertex subset".into()))?;
    Ok(ZdBound {
        t,
        value,
        subset,
        terms,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub lambda: String,
    pub admissible_subsets: usize,
    pub lattice_points: usize,
    pub checked: usize,
    pub uncovered: Vec<Point>,
    pub held: bool,
}

/// Whether `p` lies in `lambda H({0} ∪ b)`, by Cramer's rule.
fn in_scaled_simplex(b: &[Point], p: &[i64], num: i64, den: i64) -> bool {
    let m = columns(b);
    let dm = det(m.clone());
    let mut total = 0i128;
    for i in 0..b.len() {
        let mut mi = m.clone();
        for (row, &x) in mi.iter_mut().zip(p) {
            row[i] = x as i128;
        }
        let di = det(mi);
        if di.signum() * dm.signum() < 0 {
            return false;
        }
        total += di;
    }
    let (lhs, rhs) = (total * den as i128, dm * num as i128);
    if dm > 0 {
        lhs <= rhs
    } else {
        lhs >= rhs
    }
}

/// Every lattice point of `lambda H(A)` (or an evenly strided sample of at most
/// `sample_cap` of them) lies in `lambda H(B)` for an admissible `B ∋ 0`.
pub fn caratheodory_cover_check(
    set: &LatticePointSet,
    lambda: &BigRational,
    sample_cap: usize,
    caps: &Caps,
) -> Result<CoverReport> {
    set.require_full()?;
    if *lambda < BigRational::one() {
        return Err(invalid(format!("lambda = {lambda} must be at least 1")));
    }
    let num = i64::try_from(lambda.numer()).map_err(|_| invalid("lambda numerator too large"))?;
    let den = i64::try_from(lambda.denom()).map_err(|_| invalid("lambda denominator too large"))?;
    let pts = set.dilate_points(num, den, caps.max_lattice_points)?;
    let stride = pts.len().div_ceil(sample_cap.max(1)).max(1);
    let subsets = admissible_subsets(set);
    let sample: Vec<&Point> = pts.iter().step_by(stride).collect();
    let uncovered: Vec<Point> = sample
        .par_iter()
        .filter(|p| !subsets.iter().any(|b| in_scaled_simplex(b, p, num, den)))
        .map(|p| (*p).clone())
        .collect();
    Ok(CoverReport {
        lambda: lambda.to_string(),
        admissible_subsets: subsets.len(),
        lattice_points: pts.len(),
        checked: sample.len(),
        held: uncovered.is_empty(),
        uncovered,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesFit {
    /// `values[i]` is the series at `h_lo + i`.
    pub values: Vec<u64>,
    /// Start of the longest tail on which the `(d+1)`-th differences vanish.
    pub tail_start: Option<u64>,
    /// Coefficients of the fitted polynomial in `h`, constant term first.
    pub coefficients: Option<Vec<String>>,
    pub conclusive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyCheck {
    pub set: String,
    pub t: u64,
    pub h_lo: u64,
    pub h_hi: u64,
    /// `s(h) = |(h H(A) ∩ Λ_A) \ E_t(A)|`.
    pub hull_minus_exceptional: SeriesFit,
    /// `|(hA)^(t)|`.
    pub sumset: SeriesFit,
    /// Size of the structured right-hand side at `h`.
    pub structured: SeriesFit,
}

fn differences(v: &[BigInt]) -> Vec<BigInt> {
    v.windows(2).map(|w| &w[1] - &w[0]).collect()
}

fn poly_mul_linear(p: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    // p(h) * (h - c)
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, a) in p.iter().enumerate() {
        out[i + 1] += a;
        out[i] -= a * c;
    }
    out
}

/// Newton interpolation through `(h0 + k, v[k])`, `k = 0..=deg`.
fn fit(h0: u64, v: &[BigInt], deg: usize) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    let mut level: Vec<BigInt> = v[..=deg].to_vec();
    let mut basis = vec![BigRational::one()];
    for j in 0..=deg {
        let scale = BigRational::from_integer(level[0].clone());
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += &scale * b;
        }
        // basis_{j+1}(h) = basis_j(h) * (h - h0 - j) / (j + 1)
        basis = poly_mul_linear(&basis, &int(h0 as i128 + j as i128));
        let inv = int(j as i128 + 1).recip();
        basis.iter_mut().for_each(|b| *b *= &inv);
        level = differences(&level);
    }
    coeffs
}

fn fit_series(values: Vec<u64>, h_lo: u64, d: usize) -> SeriesFit {
    let big: Vec<BigInt> = values.iter().map(|&x| BigInt::from(x)).collect();
    let mut diff = big.clone();
    for _ in 0..=d {
        diff = differences(&diff);
    }
    let conclusive = diff.last().is_some_and(Zero::is_zero);
    let (tail_start, coefficients) = if conclusive {
        let first = diff.iter().rposition(|x| !x.is_zero()).map_or(0, |i| i + 1);
        let coeffs = fit(h_lo + first as u64, &big[first..], d);
        let trimmed = coeffs.iter().rposition(|c| !c.is_zero()).map_or(1, |i| i + 1);
        (
            Some(h_lo + first as u64),
            Some(coeffs[..trimmed].iter().map(|c| c.to_string()).collect()),
        )
    } else {
        (None, None)
    };
    SeriesFit {
        values,
        tail_start,
        coefficients,
        conclusive,
    }
}

/// Evaluates a fitted coefficient list at `h`.
pub fn evaluate(coefficients: &[String], h: u64) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for c in coefficients.iter().rev() {
        let c: BigRational = c.parse().map_err(|_| invalid(format!("bad coefficient {c:?}")))?;
        acc = acc * int(h as i128) + c;
    }
    Ok(acc)
}

/// Finite-difference test for eventual polynomial growth of the two size series.
pub fn hull_size_poly_check(
    set: &LatticePointSet,
    t: u64,
    h_lo: u64,
    h_hi: u64,
    caps: &Caps,
) -> Result<PolyCheck> {
    set.require_full()?;
    if h_lo > h_hi {
        return Err(invalid(format!("empty range {h_lo}..={h_hi}")));
    }
    let level = h_hi as i128 * set.max_projection() as i128;
    let table = TotalTable::build(set, level, caps)?;
    let an = ZdAnalyzer::new(set, t, h_hi, caps)?;
    let rows = (h_lo..=h_hi)
        .into_par_iter()
        .map(|h| {
            let pts = set.dilate_points(h as i64, 1, caps.max_lattice_points)?;
            let s = pts.iter().filter(|p| table.reaches(p, t)).count() as u64;
            Ok([s, an.lhs(h)?.len() as u64, an.rhs(h)?.len() as u64])
        })
        .collect::<Result<Vec<_>>>()?;
    let column = |i: usize| rows.iter().map(|r| r[i]).collect::<Vec<u64>>();
    let d = set.dim();
    Ok(PolyCheck {
        set: set.to_string(),
        t,
        h_lo,
        h_hi,
        hull_minus_exceptional: fit_series(column(0), h_lo, d),
        sumset: fit_series(column(1), h_lo, d),
        structured: fit_series(column(2), h_lo, d),
    })
}

/// `lambda` from `"p/q"` or an integer.
pub fn parse_lambda(text: &str) -> Result<BigRational> {
    let r: BigRational = text
        .trim()
        .parse()
        .map_err(|_| invalid(format!("bad rational {text:?}")))?;
    if !r.is_positive() {
        return Err(invalid("lambda must be positive"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::parse_points;
    use crate::numeric::ratio;
    use crate::IntegerSet;

    fn lps(text: &str) -> LatticePointSet {
        LatticePointSet::new(parse_points(text).unwrap()).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn triangle() {
        let a = lps("0,0;1,0;0,1");
        let an = ZdAnalyzer::new(&a, 1, 3, &caps()).unwrap();
        assert_eq!(an.lhs(3).unwrap().len(), 10);
        assert!(an.report(3).unwrap().structured);
        assert_eq!(an.lhs(0).unwrap(), vec![vec![0, 0]]);
        assert_eq!(an.rhs(0).unwrap(), vec![vec![0, 0]]);
        let idx = empirical_structure_index(&a, 1, 12, &caps()).unwrap();
        assert_eq!(idx.h_star, Some(1));
        assert!(idx.failures.is_empty());
        let idx = empirical_structure_index(&a, 3, 15, &caps()).unwrap();
        assert!(idx.h_star.is_some());
    }

    #[test]
    fn square_with_midpoint() {
        let a = lps("0,0;2,0;0,2;1,1");
        let r = ZdAnalyzer::new(&a, 1, 4, &caps()).unwrap().report(4).unwrap();
        assert_eq!(r.extra_count, 0);
        assert!(r.structured);
        let idx = empirical_structure_index(&a, 1, 15, &caps()).unwrap();
        assert!(idx.h_star.is_some());
    }

    #[test]
    fn lhs_inside_rhs() {
        for text in ["0,0;1,0;0,1", "0,0;2,0;0,2;1,1", "0,0;3,0;0,2;1,1", "0,0;1,0;1,2;0,3"] {
            let a = lps(text);
            for t in 1..=3 {
                let an = ZdAnalyzer::new(&a, t, 6, &caps()).unwrap();
                for h in 0..=6 {
                    assert_eq!(an.report(h).unwrap().extra_count, 0, "{text} t={t} h={h}");
                }
            }
        }
    }

    #[test]
    fn one_dimensional_reduction() {
        let s: IntegerSet = "0,3,5".parse().unwrap();
        let a = LatticePointSet::from_integer_set(&s);
        let pts = |v: Vec<u64>| v.into_iter().map(|x| vec![x as i64]).collect::<Vec<_>>();
        for t in 1..=3 {
            let an = ZdAnalyzer::new(&a, t, 10, &caps()).unwrap();
            for h in 0..=10 {
                assert_eq!(an.lhs(h).unwrap(), pts(crate::structure::t_sumset(&s, h, t)));
                assert_eq!(
                    an.rhs(h).unwrap(),
                    pts(crate::structure::structured_rhs(&s, h, t).unwrap())
                );
            }
            let e = crate::frobenius::exceptional_set(&s, t).unwrap();
            let trunc: Vec<u64> = e.members.iter().copied().filter(|&n| n <= 50).collect();
            assert_eq!(an.truncation()[0].exceptional_size, trunc.len());
        }
    }

    #[test]
    fn bound_formula() {
        let a = lps("0,0;1,0;0,1");
        let phi: BTreeMap<Point, BigRational> =
            a.extremal_points().iter().map(|v| (v.clone(), BigRational::one())).collect();
        assert_eq!(zd_bound_formula(&a, 1, &phi).unwrap().value, 3);
        let mut missing = phi.clone();
        missing.remove(&vec![1, 0]);
        assert!(matches!(zd_bound_formula(&a, 1, &missing), Err(Error::InvalidInput(_))));
        let mut small = phi;
        small.insert(vec![1, 0], ratio(1, 2));
        assert!(zd_bound_formula(&a, 1, &small).is_err());

        // d = 1 with phi = (Fr_t + m) / m gives the ceiling form of the mt1 bound
        for text in ["0,3,5", "0,1,6,7", "0,2,3,7,9"] {
            let s: IntegerSet = text.parse().unwrap();
            let a = LatticePointSet::from_integer_set(&s);
            let m = s.m() as i128;
            for t in 1..=4 {
                let fr = crate::frobenius::frobenius_t(&s, t).unwrap() as i128;
                let fr_b = crate::frobenius::frobenius_t(&s.reflect(), t).unwrap() as i128;
                let phi = BTreeMap::from([
                    (vec![0], ratio(fr + m, m)),
                    (vec![m as i64], ratio(fr_b + m, m)),
                ]);
                let b = zd_bound_formula(&a, t, &phi).unwrap();
                let (hp, hm) = crate::structure::h_plus_minus(&s, t).unwrap();
                assert_eq!(b.value, hp + hm, "{text} t={t}");
                let mt1 = crate::structure::bound_mt1(&s, t).unwrap();
                assert!(b.value >= mt1 && b.value - mt1 <= 2);
            }
        }
    }

    #[test]
    fn covers() {
        let tri = lps("0,0;1,0;0,1");
        assert!(caratheodory_cover_check(&tri, &int(2), 1000, &caps()).unwrap().held);
        let sq = lps("0,0;2,0;0,2;1,1");
        assert!(caratheodory_cover_check(&sq, &int(3), 1000, &caps()).unwrap().held);
        let pent = lps("0,0;2,0;3,2;1,3;-1,2");
        assert_eq!(pent.extremal_points().len(), 5);
        let r = caratheodory_cover_check(&pent, &int(2), 1000, &caps()).unwrap();
        assert!(r.held && r.admissible_subsets >= 3);
        let r = caratheodory_cover_check(&pent, &ratio(7, 3), 5, &caps()).unwrap();
        assert!(r.held && r.checked <= 5);
        assert!(caratheodory_cover_check(&pent, &ratio(1, 2), 5, &caps()).is_err());
        assert!(!in_scaled_simplex(&[vec![1, 0], vec![0, 1]], &[1, 1], 1, 1));
        assert!(in_scaled_simplex(&[vec![1, 0], vec![0, 1]], &[1, 1], 2, 1));
    }

    #[test]
    fn polynomial_growth() {
        let tri = lps("0,0;1,0;0,1");
        let p = hull_size_poly_check(&tri, 1, 0, 8, &caps()).unwrap();
        let expect: Vec<u64> = (0..=8).map(|h| (h + 1) * (h + 2) / 2).collect();
        assert_eq!(p.hull_minus_exceptional.values, expect);
        assert_eq!(p.hull_minus_exceptional.tail_start, Some(0));
        let c = p.hull_minus_exceptional.coefficients.unwrap();
        assert_eq!(c, vec!["1", "3/2", "1/2"]);
        assert_eq!(evaluate(&c, 20).unwrap(), int(231));

        let one = LatticePointSet::from_integer_set(&"0,3,5".parse().unwrap());
        let p = hull_size_poly_check(&one, 1, 0, 8, &caps()).unwrap();
        assert_eq!(&p.hull_minus_exceptional.values[..4], &[1, 3, 7, 12]);
        assert_eq!(p.hull_minus_exceptional.tail_start, Some(2));
        assert_eq!(p.hull_minus_exceptional.coefficients.unwrap(), vec!["-3", "5"]);
        assert!(p.sumset.conclusive && p.structured.conclusive);

        let short = hull_size_poly_check(&tri, 1, 0, 2, &caps()).unwrap();
        assert!(!short.hull_minus_exceptional.conclusive);
        assert_eq!(short.hull_minus_exceptional.tail_start, None);
    }
}
