//! Finite sets `A ⊂ Z^d` with `0` an extremal point of the convex hull `H(A)`:
//! hulls, lattice spans, representation counts, projections and the structure of
//! `(hA)^(t)` in higher dimension.

pub mod count;
pub mod direction;
pub mod hull;
pub mod lp;
pub mod span;
pub mod zd;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::set::IntegerSet;
use hull::{dot, Facet};
use span::LatticeBasis;

pub use count::{rho_h_d, rho_total_d, stabilization_budget_d, RhoLadderD, TotalTable};
pub use direction::{delta_delta, DirectionStats};
pub use zd::{
    caratheodory_cover_check, empirical_structure_index, hull_size_poly_check, parse_lambda,
    structured_rhs_d, t_sumset_d, zd_bound_formula, CoverReport, PolyCheck, SeriesFit,
    StructureIndex, ZdAnalyzer, ZdBound, ZdStructureReport,
};

pub type Point = Vec<i64>;

/// A point set together with its hull data, computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct LatticePointSet {
    d: usize,
    points: Vec<Point>,
    vertices: Vec<Point>,
    /// Integer `u` with `<u, a> >= 1` for every nonzero `a` in the set.
    direction: Point,
    span: LatticeBasis,
    facets: Vec<Facet>,
}

impl LatticePointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let d = points.first().map(Vec::len).unwrap_or(0);
        if d == 0 {
            return Err(invalid("need at least one point of positive dimension"));
        }
        if let Some(p) = points.iter().find(|p| p.len() != d) {
            return Err(invalid(format!(
                "mixed dimensions: expected {d} coordinates, got {p:?}"
            )));
        }
        if points.iter().flatten().any(|x| x.unsigned_abs() > 1 << 20) {
            return Err(invalid("coordinates beyond 2^20 are not supported"));
        }
        let mut points = points;
        points.sort();
        points.dedup();
        let origin = vec![0; d];
        if !points.contains(&origin) {
            return Err(invalid("the point set must contain the origin"));
        }
        if points.len() < 2 {
            return Err(invalid("need at least one nonzero point"));
        }
        let ex = hull::extremal_with_normals(&points);
        let Some((_, direction)) = ex.iter().find(|(v, _)| *v == origin) else {
            return Err(Error::Unsupported(
                "the origin is not an extremal point of the hull".into(),
            ));
        };
        let direction = direction.clone();
        let vertices: Vec<Point> = ex.into_iter().map(|(v, _)| v).collect();
        let span = LatticeBasis::from_generators(d, &points);
        let facets = if span.rank() == d {
            hull::facets(&vertices, d)
        } else {
            Vec::new()
        };
        Ok(LatticePointSet {
            d,
            points,
            vertices,
            direction,
            span,
            facets,
        })
    }

    /// The one-dimensional set `{a_0, ..., m}` as points of `Z^1`.
    pub fn from_integer_set(set: &IntegerSet) -> Self {
        Self::new(set.elements().iter().map(|&a| vec![a as i64]).collect())
            .expect("normalized sets have 0 as an extremal point")
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Point> {
        self.points.iter().filter(|p| p.iter().any(|&x| x != 0))
    }

    /// `ex(H(A))`, sorted.
    pub fn extremal_points(&self) -> &[Point] {
        &self.vertices
    }

    pub fn lattice_span(&self) -> &LatticeBasis {
        &self.span
    }

    /// The stored validity direction `u`: `<u, a> >= 1` on `A \ {0}`.
    pub fn direction(&self) -> &[i64] {
        &self.direction
    }

    /// `min <a, u>` over nonzero `a`.
    pub fn min_projection(&self) -> i64 {
        self.nonzero().map(|a| dot(a, &self.direction)).min().unwrap()
    }

    /// `max <a, u>` over nonzero `a`.
    pub fn max_projection(&self) -> i64 {
        self.nonzero().map(|a| dot(a, &self.direction)).max().unwrap()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.span.rank() == self.d
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    fn require_full(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "hull operations need a full-dimensional set; span has rank {} in dimension {}",
                self.span.rank(),
                self.d
            )))
        }
    }

    /// `v - A` for a vertex `v`; the origin is again extremal.
    pub fn translate_reflect(&self, v: &[i64]) -> LatticePointSet {
        Self::new(
            self.points
                .iter()
                .map(|a| v.iter().zip(a).map(|(x, y)| x - y).collect())
                .collect(),
        )
        .expect("reflecting at a vertex keeps the origin extremal")
    }

    /// Lattice points (of `span_Z(A)`) in `(num/den) H(A)`, sorted.
    pub fn dilate_points(&self, num: i64, den: i64, max_points: u64) -> Result<Vec<Point>> {
        self.require_full()?;
        let bounds = hull::dilate_box(&self.vertices, self.d, num, den);
        crate::caps::Caps::check("lattice points", hull::box_size(&bounds), max_points)?;
        let mut out = Vec::new();
        hull::for_each_in_box(&bounds, |p| {
            if hull::in_dilate(&self.facets, p, num, den) && self.span.contains(p) {
                out.push(p.to_vec());
            }
        });
        Ok(out)
    }

    pub fn in_dilate(&self, p: &[i64], num: i64, den: i64) -> bool {
        hull::in_dilate(&self.facets, p, num, den)
    }
}

impl TryFrom<Vec<Point>> for LatticePointSet {
    type Error = Error;

    fn try_from(v: Vec<Point>) -> Result<Self> {
        LatticePointSet::new(v)
    }
}

impl From<LatticePointSet> for Vec<Point> {
    fn from(s: LatticePointSet) -> Vec<Point> {
        s.points
    }
}

pub fn format_point(p: &[i64]) -> String {
    p.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for LatticePointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|p| format_point(p)).collect();
        f.write_str(&parts.join(";"))
    }
}

/// Parses `"x,y"`.
pub fn parse_point(text: &str) -> Result<Point> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| invalid(format!("bad coordinate {t:?}: {e}")))
        })
        .collect()
}

/// Parses `"0,0;1,0;0,1"` or one point per line (blank lines and `#` comments skipped).
pub fn parse_points(text: &str) -> Result<Vec<Point>> {
    text.split([';', '\n'])
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_point)
        .collect()
}

pub fn extremal_points(set: &LatticePointSet) -> Vec<Point> {
    set.extremal_points().to_vec()
}

pub fn lattice_span(set: &LatticePointSet) -> LatticeBasis {
    set.lattice_span().clone()
}
