//! Exact feasibility LPs over the rationals (phase-one simplex, Bland's rule).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Some `x >= 0` with `a x = b`, or `None` when the system is infeasible.
pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let width = cols + rows + 1;
    let rhs = width - 1;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows + 1);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r = vec![BigRational::zero(); width];
        for (j, x) in row.iter().enumerate() {
            r[j] = if flip { -x.clone() } else { x.clone() };
        }
        r[cols + i] = BigRational::one();
        r[rhs] = if flip { -bi.clone() } else { bi.clone() };
        tab.push(r);
    }
    // reduced costs of the phase-one objective (sum of artificials)
    let mut obj = vec![BigRational::zero(); width];
    for r in &tab {
        for j in (0..cols).chain(std::iter::once(rhs)) {
            obj[j] -= &r[j];
        }
    }
    tab.push(obj);
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    while let Some(enter) = (0..cols + rows).find(|&j| tab[rows][j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..rows {
            if !tab[i][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(k) => {
                    let ri = &tab[i][rhs] / &tab[i][enter];
                    let rk = &tab[k][rhs] / &tab[k][enter];
                    if ri < rk || (ri == rk && basis[i] < basis[k]) {
                        Some(i)
                    } else {
                        Some(k)
                    }
                }
            };
        }
        let Some(p) = leave else {
            // unbounded ray; cannot happen for a phase-one objective bounded below by 0
            break;
        };
        pivot(&mut tab, p, enter);
        basis[p] = enter;
    }

    if !tab[rows][rhs].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &j) in basis.iter().enumerate() {
        if j < cols {
            x[j] = tab[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot(tab: &mut [Vec<BigRational>], p: usize, q: usize) {
    let inv = tab[p][q].recip();
    for x in tab[p].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = tab[p].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == p || row[q].is_zero() {
            continue;
        }
        let f = row[q].clone();
        for (x, y) in row.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

/// An integer `n` with `<n, x - v> >= 1` for every `x` in `others`, if one exists.
///
/// Such `n` exists exactly when `v` is not in the convex hull of `others`.
pub fn strict_separator(v: &[i64], others: &[Vec<i64>]) -> Option<Vec<i64>> {
    let d = v.len();
    let k = others.len();
    if k == 0 {
        return Some(vec![0; d]);
    }
    // variables: n+ (d), n- (d), slack (k)
    let mut a = Vec::with_capacity(k);
    for (i, x) in others.iter().enumerate() {
        let mut row = vec![BigRational::zero(); 2 * d + k];
        for j in 0..d {
            let diff = BigRational::from_integer(BigInt::from(x[j] - v[j]));
            row[j] = diff.clone();
            row[d + j] = -diff;
        }
        row[2 * d + i] = -BigRational::one();
        a.push(row);
    }
    let b = vec![BigRational::one(); k];
    let sol = feasible(&a, &b)?;
    let n: Vec<BigRational> = (0..d).map(|j| &sol[j] - &sol[d + j]).collect();
    let lcm = n
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = n.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    ints.into_iter()
        .map(|x| i64::try_from(x / &g).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    fn dot(a: &[i64], b: &[i64]) -> i64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn simple_feasibility() {
        // x + y = 2, x - y = 0
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        assert_eq!(feasible(&a, &[int(2), int(0)]), Some(vec![int(1), int(1)]));
        // x + y = -1 has no nonnegative solution
        assert_eq!(feasible(&[vec![int(1), int(1)]], &[int(-1)]), None);
    }

    #[test]
    fn separators() {
        let others = vec![vec![2, 0], vec![0, 2], vec![1, 1]];
        let n = strict_separator(&[0, 0], &others).unwrap();
        assert!(others.iter().all(|x| dot(&n, x) >= 1));
        // midpoint of an edge is not separable
        let others = vec![vec![0, 0], vec![2, 0], vec![0, 2]];
        assert_eq!(strict_separator(&[1, 1], &others), None);
        // interior point
        let others = vec![vec![0, 0], vec![4, 0], vec![0, 4]];
        assert_eq!(strict_separator(&[1, 1], &others), None);
        let n = strict_separator(&[5], &[vec![0], vec![3]]).unwrap();
        assert!(n[0] < 0);
    }
}
