//! Integer spans in echelon (Hermite-style) form.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::Point;

/// Basis of `span_Z(generators)`. Vectors are in row-echelon form: each has a
/// positive pivot strictly right of the previous one, and entries of earlier
/// vectors in a pivot column are reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub d: usize,
    pub basis: Vec<Point>,
    pub pivots: Vec<usize>,
}

impl LatticeBasis {
    pub fn from_generators(d: usize, generators: &[Point]) -> Self {
        let mut rows: Vec<Vec<i128>> = generators
            .iter()
            .map(|g| g.iter().map(|&x| x as i128).collect())
            .filter(|r: &Vec<i128>| r.iter().any(|&x| x != 0))
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..d {
            if top == rows.len() {
                break;
            }
            // Euclid on column `col` among rows[top..]
            while let Some(best) = (top..rows.len())
                .filter(|&r| rows[r][col] != 0)
                .min_by_key(|&r| rows[r][col].abs())
            {
                rows.swap(top, best);
                let mut done = true;
                for r in top + 1..rows.len() {
                    let q = rows[r][col].div_euclid(rows[top][col]);
                    if q != 0 {
                        let pivot_row = rows[top].clone();
                        for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                            *x -= q * y;
                        }
                    }
                    if rows[r][col] != 0 {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if rows[top][col] == 0 {
                continue;
            }
            if rows[top][col] < 0 {
                for x in rows[top].iter_mut() {
                    *x = -*x;
                }
            }
            let p = rows[top][col];
            for r in 0..top {
                let q = rows[r][col].div_euclid(p);
                if q != 0 {
                    let pivot_row = rows[top].clone();
                    for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                }
            }
            pivots.push(col);
            top += 1;
            rows.retain(|r| r.iter().any(|&x| x != 0));
        }
        rows.truncate(top);
        LatticeBasis {
            d,
            basis: rows
                .into_iter()
                .map(|r| r.into_iter().map(|x| x as i64).collect())
                .collect(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        let mut rem: Vec<i128> = p.iter().map(|&x| x as i128).collect();
        for (b, &c) in self.basis.iter().zip(&self.pivots) {
            let pv = b[c] as i128;
            if rem[c] % pv != 0 {
                return false;
            }
            let q = rem[c] / pv;
            for (x, &y) in rem.iter_mut().zip(b) {
                *x -= q * y as i128;
            }
        }
        rem.iter().all(|&x| x == 0)
    }

    /// `[Z^d : span]`, or `None` when the span has lower rank.
    pub fn index(&self) -> Option<BigUint> {
        if self.rank() < self.d {
            return None;
        }
        Some(
            self.basis
                .iter()
                .zip(&self.pivots)
                .fold(BigUint::from(1u32), |acc, (b, &c)| acc * b[c].unsigned_abs()),
        )
    }
}
