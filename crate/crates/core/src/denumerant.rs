//! Exact representation counts in `Z`.
//!
//! `rho_h(A, h, n)` counts tuples `(k_1, ..., k_{ell+1}) >= 0` with
//! `sum k_i a_i = n` and `sum k_i <= h`; the zero element absorbs the slack.
//! Every count here comes from one DP over `(value, parts used)`. When the
//! parts budget cannot bind (`h * a_1 >= n` for every requested `n`) the parts
//! axis is collapsed, which turns the same recurrence into the classic
//! unbounded coin DP.
//!
//! Counts are accumulated in `u128` with checked addition; on overflow the
//! whole table is recomputed with `BigUint`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{invalid, Error, Result};
use crate::numeric::factorial;
use crate::set::{Count, IntegerSet};

pub(crate) trait Tally: Clone + Send + Sync {
    fn nil() -> Self;
    fn unit() -> Self;
    /// Adds `rhs` in place; `false` signals overflow.
    fn accumulate(&mut self, rhs: &Self) -> bool;
    fn is_nil(&self) -> bool;
    fn to_count(&self) -> Count;
    fn reaches(&self, t: u64) -> bool;
}

impl Tally for u128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn accumulate(&mut self, rhs: &Self) -> bool {
        match self.checked_add(*rhs) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn to_count(&self) -> Count {
        BigUint::from(*self)
    }
    fn reaches(&self, t: u64) -> bool {
        *self >= t as u128
    }
}

impl Tally for BigUint {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn accumulate(&mut self, rhs: &Self) -> bool {
        *self += rhs;
        true
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_count(&self) -> Count {
        self.clone()
    }
    fn reaches(&self, t: u64) -> bool {
        *self >= BigUint::from(t)
    }
}

/// `rows[j][n]` = number of multisets of exactly `j` nonzero elements summing to `n`,
/// then prefix-summed over `j` so that `rows[h][n] = rho_{A,h}(n)`.
fn parts_rows<T: Tally>(nonzero: &[u64], m: u64, max_parts: u64, max_value: u64) -> Option<Vec<Vec<T>>> {
    let row_len = |j: u64| (j.saturating_mul(m)).min(max_value) as usize + 1;
    let mut rows: Vec<Vec<T>> = (0..=max_parts).map(|j| vec![T::nil(); row_len(j)]).collect();
    rows[0][0] = T::unit();
    for &a in nonzero {
        let a = a as usize;
        for j in 1..rows.len() {
            let (lo, hi) = rows.split_at_mut(j);
            let prev = &lo[j - 1];
            let cur = &mut hi[0];
            // new[j][n] = old[j][n] + new[j-1][n-a]
            for (c, p) in cur.iter_mut().skip(a).zip(prev) {
                if !p.is_nil() && !c.accumulate(p) {
                    return None;
                }
            }
        }
    }
    for j in 1..rows.len() {
        let (lo, hi) = rows.split_at_mut(j);
        for (c, p) in hi[0].iter_mut().zip(lo[j - 1].iter()) {
            if !c.accumulate(p) {
                return None;
            }
        }
    }
    Some(rows)
}

/// The parts axis collapsed: counts of all representations of `n <= max_value`.
fn unbounded_row<T: Tally>(nonzero: &[u64], max_value: u64) -> Option<Vec<T>> {
    let mut row = vec![T::nil(); max_value as usize + 1];
    row[0] = T::unit();
    for &a in nonzero {
        let a = a as usize;
        for n in a..row.len() {
            let (lo, hi) = row.split_at_mut(n);
            let src = &lo[n - a];
            if !src.is_nil() && !hi[0].accumulate(src) {
                return None;
            }
        }
    }
    Some(row)
}

fn to_counts<T: Tally>(row: &[T]) -> Vec<Count> {
    row.iter().map(Tally::to_count).collect()
}

/// `rho_{A,h}(n)` for every `0 <= n <= max_value`.
pub fn bounded_counts(set: &IntegerSet, h: u64, max_value: u64) -> Vec<Count> {
    bounded_counts_with::<u128>(set, h, max_value)
}

/// Tries word type `W` first, recomputing in `BigUint` on overflow.
fn bounded_counts_with<W: Tally>(set: &IntegerSet, h: u64, max_value: u64) -> Vec<Count> {
    let nz = set.nonzero();
    if (h as u128) * (set.a1() as u128) >= max_value as u128 {
        if let Some(row) = unbounded_row::<W>(nz, max_value) {
            return to_counts(&row);
        }
        return unbounded_row::<BigUint>(nz, max_value).expect("bigint never overflows");
    }
    let mut out = match parts_rows::<W>(nz, set.m(), h, max_value) {
        Some(rows) => to_counts(rows.last().unwrap()),
        None => parts_rows::<BigUint>(nz, set.m(), h, max_value)
            .expect("bigint never overflows")
            .pop()
            .unwrap(),
    };
    out.resize(max_value as usize + 1, Count::zero());
    out
}

/// Number of representations of `n` using at most `h` nonzero parts.
pub fn rho_h(set: &IntegerSet, h: u64, n: u64) -> Count {
    if (n as u128) > (h as u128) * (set.m() as u128) {
        return Count::zero();
    }
    bounded_counts(set, h, n).swap_remove(n as usize)
}

/// Smallest parts budget at which `rho_{A,h}(n)` has stabilized: `ceil(n / a_1)`.
pub fn stabilization_budget(set: &IntegerSet, n: u64) -> u64 {
    n.div_ceil(set.a1())
}

/// The denumerant `rho_A(n)`, evaluated as `rho_{A,h}(n)` at `h = ceil(n / a_1)`.
pub fn rho_total(set: &IntegerSet, n: u64) -> Count {
    rho_h(set, stabilization_budget(set, n), n)
}

/// `rho_A(n)` for every `0 <= n <= max_n`.
pub fn rho_total_table(set: &IntegerSet, max_n: u64) -> Vec<Count> {
    bounded_counts(set, stabilization_budget(set, max_n), max_n)
}

/// `rho_{A,h}` on its whole support `[0, h m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoTable {
    pub set: IntegerSet,
    pub h: u64,
    #[serde(with = "crate::serde_count::vec")]
    pub values: Vec<Count>,
}

impl RhoTable {
    pub fn get(&self, n: u64) -> Count {
        self.values
            .get(n as usize)
            .cloned()
            .unwrap_or_else(Count::zero)
    }

    /// `n,count` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, c) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{c}\n"));
        }
        out
    }
}

pub fn rho_batch(set: &IntegerSet, h: u64, caps: &Caps) -> Result<RhoTable> {
    caps.check_hm(h, set.m())?;
    let hm = h * set.m();
    if (h as u128) * (set.a1() as u128) < hm as u128 {
        caps.check_cells((h as u128 + 1) * (hm as u128 + 1))?;
    }
    Ok(RhoTable {
        set: set.clone(),
        h,
        values: bounded_counts(set, h, hm),
    })
}

#[derive(Clone, Debug)]
enum Rows {
    Word(Vec<Vec<u128>>),
    Big(Vec<Vec<BigUint>>),
}

/// `rho_{A,h}` for every `h <= max_h` at once, sharing one DP.
#[derive(Clone, Debug)]
pub struct RhoLadder {
    set: IntegerSet,
    max_h: u64,
    rows: Rows,
}

impl RhoLadder {
    pub fn build(set: &IntegerSet, max_h: u64, caps: &Caps) -> Result<Self> {
        let m = set.m();
        caps.check_hm(max_h, m)?;
        let h = max_h as u128;
        caps.check_cells(m as u128 * h * (h + 1) / 2 + h + 1)?;
        let max_value = max_h * m;
        let rows = match parts_rows::<u128>(set.nonzero(), m, max_h, max_value) {
            Some(r) => Rows::Word(r),
            None => Rows::Big(
                parts_rows::<BigUint>(set.nonzero(), m, max_h, max_value)
                    .expect("bigint never overflows"),
            ),
        };
        Ok(RhoLadder {
            set: set.clone(),
            max_h,
            rows,
        })
    }

    pub fn set(&self) -> &IntegerSet {
        &self.set
    }

    pub fn max_h(&self) -> u64 {
        self.max_h
    }

    fn check(&self, h: u64) {
        assert!(h <= self.max_h, "h = {h} beyond ladder height {}", self.max_h);
    }

    pub fn count(&self, h: u64, n: u64) -> Count {
        self.check(h);
        let (h, n) = (h as usize, n as usize);
        match &self.rows {
            Rows::Word(r) => r[h].get(n).map(Tally::to_count),
            Rows::Big(r) => r[h].get(n).cloned(),
        }
        .unwrap_or_else(Count::zero)
    }

    /// `rho_{A,h}(n) >= t`.
    pub fn reaches(&self, h: u64, n: u64, t: u64) -> bool {
        self.check(h);
        let (h, n) = (h as usize, n as usize);
        match &self.rows {
            Rows::Word(r) => r[h].get(n).is_some_and(|c| c.reaches(t)),
            Rows::Big(r) => r[h].get(n).is_some_and(|c| c.reaches(t)),
        }
    }

    pub fn table(&self, h: u64) -> RhoTable {
        self.check(h);
        let values = match &self.rows {
            Rows::Word(r) => to_counts(&r[h as usize]),
            Rows::Big(r) => r[h as usize].clone(),
        };
        RhoTable {
            set: self.set.clone(),
            h,
            values,
        }
    }

    /// `(hA)^(t)`, sorted.
    pub fn t_sumset(&self, h: u64, t: u64) -> Vec<u64> {
        (0..=h * self.set.m())
            .filter(|&n| self.reaches(h, n, t))
            .collect()
    }
}

/// Brute-force `|S(n)|`: residue vectors `(mu_2..mu_{ell+1}) in [0, a_1)^ell`
/// with `sum a_j mu_j = n (mod a_1)`.
pub fn snn_count(set: &IntegerSet, n: u64) -> Count {
    let a1 = set.a1();
    let tail = &set.nonzero()[1..];
    let target = n % a1;
    let mut mu = vec![0u64; tail.len()];
    let mut count: u64 = 0;
    loop {
        let s = tail
            .iter()
            .zip(&mu)
            .fold(0u64, |acc, (&a, &k)| (acc + (a % a1) * k) % a1);
        if s == target {
            count += 1;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == mu.len() {
                return Count::from(count);
            }
            mu[i] += 1;
            if mu[i] < a1 {
                break;
            }
            mu[i] = 0;
            i += 1;
        }
    }
}

/// `{x in R_{>=0}^d : sum x_i N_i <= R}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Simplex {
    pub weights: Vec<u64>,
    pub budget: BigRational,
}

impl Simplex {
    pub fn new(weights: Vec<u64>, budget: BigRational) -> Result<Self> {
        if weights.is_empty() {
            return Err(invalid("simplex needs at least one weight"));
        }
        if weights.contains(&0) {
            return Err(invalid("zero weight makes the simplex unbounded"));
        }
        if budget < BigRational::zero() {
            return Err(invalid("simplex budget must be nonnegative"));
        }
        Ok(Simplex { weights, budget })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `|Delta_R cap Z^d|`.
    pub fn count(&self) -> Count {
        fn rec(w: &[u64], rem: u64) -> Count {
            match w {
                [] => Count::one(),
                [last] => Count::from(rem / last + 1),
                [first, rest @ ..] => (0..=rem / first)
                    .map(|x| rec(rest, rem - x * first))
                    .sum(),
            }
        }
        let r = self.budget.floor().to_integer().to_u64().expect("budget fits u64");
        rec(&self.weights, r)
    }

    /// `R^d / (d! N_1 ... N_d)`.
    pub fn volume(&self) -> BigRational {
        Self::volume_at(&self.weights, &self.budget)
    }

    /// Volume of the dilated simplex `Delta_{R + sum N_i}`, the upper side of the sandwich.
    pub fn outer_volume(&self) -> BigRational {
        let shift: u64 = self.weights.iter().sum();
        Self::volume_at(
            &self.weights,
            &(&self.budget + BigRational::from_integer(BigInt::from(shift))),
        )
    }

    fn volume_at(weights: &[u64], r: &BigRational) -> BigRational {
        let d = weights.len();
        let den = weights
            .iter()
            .fold(factorial(d as u64), |acc, &w| acc * w);
        num_traits::pow(r.clone(), d) / BigRational::from_integer(BigInt::from(den))
    }
}

pub fn simplex_count(s: &Simplex) -> Count {
    s.count()
}

pub fn simplex_volume(s: &Simplex) -> BigRational {
    s.volume()
}

/// `(a_1 - 1) * sum_{j>=2} a_j`, the smallest `n` covered by [`rho_brackets`].
pub fn bracket_threshold(set: &IntegerSet) -> u64 {
    (set.a1() - 1) * set.tail_sum()
}

/// `((n - (a_1-1) S)^ell, (n + 1 + S)^ell) / (ell! a_1 ... a_{ell+1})` with
/// `S = sum_{j>=2} a_j`. The lower value bounds `rho_A(n)` from below; see
/// [`rho_upper_proved`] for a reliable upper bound.
pub fn rho_brackets(set: &IntegerSet, n: u64) -> Result<(BigRational, BigRational)> {
    let threshold = bracket_threshold(set);
    if n < threshold {
        return Err(Error::Domain(format!(
            "n = {n} is below the threshold (a1-1)*sum(a_j) = {threshold}"
        )));
    }
    let ell = set.ell();
    let den = BigRational::from_integer(BigInt::from(factorial(ell as u64) * set.nonzero_product()));
    let lo = BigRational::from_integer(BigInt::from(n - threshold));
    let hi = BigRational::from_integer(BigInt::from(n + 1 + set.tail_sum()));
    Ok((
        num_traits::pow(lo, ell) / &den,
        num_traits::pow(hi, ell) / &den,
    ))
}

/// `(n + a_1 sum_{j>=2} a_j)^ell / (ell! a_1 ... a_{ell+1})`, an upper bound for
/// `rho_A(n)` valid for every `n`.
///
/// The upper value returned by [`rho_brackets`] can be exceeded: for
/// `A = {0, 3, 5}` it gives `21/15` at `n = 15` while `rho_A(15) = 2`. Summing the
/// simplex bound over residue classes with `N <= n / a_1` yields this weaker form.
pub fn rho_upper_proved(set: &IntegerSet, n: u64) -> BigRational {
    let ell = set.ell();
    let den = BigRational::from_integer(BigInt::from(factorial(ell as u64) * set.nonzero_product()));
    let top = BigRational::from_integer(BigInt::from(n as u128 + set.a1() as u128 * set.tail_sum() as u128));
    num_traits::pow(top, ell) / den
}

/// Checks `rho_A(N) >= (1 + k ell / (n + 1 + P / a_1)) rho_A(n)` with
/// `P = a_1 sum_{j>=2} a_j + 1`, for every `N` in `[n + P + k, n + P + k + m]`.
pub fn growth_check(set: &IntegerSet, n: u64, k: u64) -> Result<bool> {
    let a1 = set.a1();
    let threshold = a1 * set.tail_sum();
    if n < threshold {
        return Err(Error::Domain(format!(
            "n = {n} is below the threshold a1*sum(a_j) = {threshold}"
        )));
    }
    let p = threshold + 1;
    let start = n + p + k;
    let end = start + set.m();
    let table = rho_total_table(set, end);
    // factor = 1 + k ell a1 / (a1 (n + 1) + P)
    let factor = BigRational::one()
        + BigRational::new(
            BigInt::from(k as u128 * set.ell() as u128 * a1 as u128),
            BigInt::from(a1 as u128 * (n as u128 + 1) + p as u128),
        );
    let base = BigRational::from_integer(BigInt::from(table[n as usize].clone())) * factor;
    Ok((start..=end)
        .all(|big_n| BigRational::from_integer(BigInt::from(table[big_n as usize].clone())) >= base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;
    use proptest::prelude::*;

    fn set(v: &[u64]) -> IntegerSet {
        IntegerSet::new(v.to_vec()).unwrap()
    }

    /// Independent oracle: explicit recursion over multiplicity tuples.
    fn brute(nonzero: &[u64], h: u64, n: u64) -> u64 {
        match nonzero {
            [] => u64::from(n == 0),
            [a, rest @ ..] => (0..=h.min(n / a))
                .map(|k| brute(rest, h - k, n - k * a))
                .sum(),
        }
    }

    #[test]
    fn rho_h_examples() {
        let a = set(&[0, 3, 5]);
        assert_eq!(rho_h(&a, 2, 8), Count::from(1u32));
        assert_eq!(rho_h(&a, 3, 15), Count::from(1u32));
        assert_eq!(rho_h(&a, 5, 15), Count::from(2u32));
        assert_eq!(rho_h(&a, 7, 0), Count::from(1u32));
        assert_eq!(rho_h(&a, 0, 0), Count::from(1u32));
        assert_eq!(rho_h(&a, 2, 11), Count::zero());
        assert_eq!(rho_h(&a, 2, 1_000), Count::zero());
    }

    #[test]
    fn rho_total_examples() {
        let a = set(&[0, 3, 5]);
        assert_eq!(rho_total(&a, 7), Count::zero());
        assert_eq!(rho_total(&a, 0), Count::one());
        assert_eq!(rho_total(&a, 15), Count::from(2u32));
        assert_eq!(rho_total(&a, 25), Count::from(2u32));
    }

    #[test]
    fn batch_examples() {
        let caps = Caps::default();
        let t = rho_batch(&set(&[0, 1]), 3, &caps).unwrap();
        assert_eq!(t.values, vec![Count::one(); 4]);

        let t = rho_batch(&set(&[0, 3, 5]), 0, &caps).unwrap();
        assert_eq!(t.values, vec![Count::one()]);

        let t = rho_batch(&set(&[0, 3, 5]), 2, &caps).unwrap();
        let support: Vec<u64> = (0..=10).filter(|&n| !t.get(n).is_zero()).collect();
        assert_eq!(support, vec![0, 3, 5, 6, 8, 10]);
        assert!(t.to_csv().starts_with("n,count\n0,1\n1,0\n"));

        let tiny = Caps {
            max_hm: 10,
            ..Caps::default()
        };
        assert!(matches!(
            rho_batch(&set(&[0, 3, 5]), 3, &tiny),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn table_json_uses_decimal_strings() {
        let t = rho_batch(&set(&[0, 1, 2]), 2, &Caps::default()).unwrap();
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["values"], serde_json::json!(["1", "1", "2", "1", "1"]));
        let back: RhoTable = serde_json::from_value(json).unwrap();
        assert_eq!(back, t);
    }

    impl Tally for u8 {
        fn nil() -> Self {
            0
        }
        fn unit() -> Self {
            1
        }
        fn accumulate(&mut self, rhs: &Self) -> bool {
            match self.checked_add(*rhs) {
                Some(v) => {
                    *self = v;
                    true
                }
                None => false,
            }
        }
        fn is_nil(&self) -> bool {
            *self == 0
        }
        fn to_count(&self) -> Count {
            Count::from(*self)
        }
        fn reaches(&self, t: u64) -> bool {
            *self as u64 >= t
        }
    }

    #[test]
    fn word_overflow_falls_back_to_bigint() {
        let a = set(&[0, 1, 2, 3, 5, 8]);
        assert!(parts_rows::<u8>(a.nonzero(), a.m(), 20, 100).is_none());
        assert!(unbounded_row::<u8>(a.nonzero(), 100).is_none());
        assert_eq!(bounded_counts_with::<u8>(&a, 20, 100), bounded_counts(&a, 20, 100));
        assert_eq!(bounded_counts_with::<u8>(&a, 100, 100), bounded_counts(&a, 100, 100));
        assert!(bounded_counts(&a, 20, 100)[60] > Count::from(255u32));
        for n in [0, 17, 60, 100] {
            assert_eq!(rho_h(&a, 20, n), Count::from(brute(a.nonzero(), 20, n)));
        }
    }

    #[test]
    fn counts_past_u128() {
        // partitions of 2500 into parts <= 1000 exceed 2^128
        let a = IntegerSet::new((0..=1000).collect()).unwrap();
        let big = rho_total(&a, 2500);
        assert!(big.bits() > 128, "got {} bits", big.bits());
        assert!(unbounded_row::<u128>(a.nonzero(), 2500).is_none());
    }

    #[test]
    fn ladder_matches_single_tables() {
        let a = set(&[0, 2, 5, 7]);
        let ladder = RhoLadder::build(&a, 9, &Caps::default()).unwrap();
        for h in 0..=9 {
            let t = rho_batch(&a, h, &Caps::default()).unwrap();
            assert_eq!(ladder.table(h), t, "h = {h}");
        }
        assert_eq!(ladder.t_sumset(2, 1), vec![0, 2, 4, 5, 7, 9, 10, 12, 14]);
    }

    #[test]
    fn snn_examples() {
        assert_eq!(snn_count(&set(&[0, 3, 5, 7]), 4), Count::from(3u32));
        assert_eq!(snn_count(&set(&[0, 4, 6, 7, 9]), 11), Count::from(16u32));
        for n in 0..5 {
            assert_eq!(snn_count(&set(&[0, 3, 5]), n), Count::one());
        }
        assert_eq!(snn_count(&set(&[0, 1]), 0), Count::one());
    }

    #[test]
    fn simplex_examples() {
        let s = Simplex::new(vec![2, 3], ratio(6, 1)).unwrap();
        assert_eq!(s.count(), Count::from(7u32));
        assert_eq!(s.volume(), ratio(3, 1));
        assert_eq!(s.outer_volume(), ratio(121, 12));

        let s = Simplex::new(vec![1, 1, 1], ratio(0, 1)).unwrap();
        assert_eq!(s.count(), Count::one());
        assert_eq!(s.volume(), ratio(0, 1));

        let s = Simplex::new(vec![1, 1], ratio(2, 1)).unwrap();
        assert_eq!(s.count(), Count::from(6u32));
        assert_eq!(s.volume(), ratio(2, 1));

        // fractional budget: 2x + 3y <= 13/2 has the same lattice points as <= 6
        let s = Simplex::new(vec![2, 3], ratio(13, 2)).unwrap();
        assert_eq!(s.count(), Count::from(7u32));

        assert!(Simplex::new(vec![2, 0], ratio(1, 1)).is_err());
    }

    #[test]
    fn bracket_examples() {
        let a = set(&[0, 3, 5]);
        assert_eq!(rho_brackets(&a, 25).unwrap(), (ratio(1, 1), ratio(31, 15)));
        assert_eq!(rho_brackets(&a, 10).unwrap(), (ratio(0, 1), ratio(16, 15)));
        assert!(matches!(rho_brackets(&a, 9), Err(Error::Domain(_))));
        let b = set(&[0, 2, 3]);
        assert_eq!(rho_brackets(&b, 5).unwrap(), (ratio(1, 3), ratio(3, 2)));
        assert_eq!(rho_total(&b, 5), Count::one());
    }

    #[test]
    fn growth_examples() {
        let a = set(&[0, 3, 5]);
        assert!(growth_check(&a, 15, 0).unwrap());
        // rho(15) = 2 and rho(46) = 3 < 2 * (1 + 15/(16 + 16/3))
        assert!(!growth_check(&a, 15, 15).unwrap());
        assert_eq!(rho_total(&a, 46), Count::from(3u32));
        assert!(growth_check(&set(&[0, 2, 3]), 6, 0).unwrap());
        assert!(matches!(growth_check(&a, 14, 0), Err(Error::Domain(_))));
    }

    fn arb_set() -> impl Strategy<Value = IntegerSet> {
        proptest::collection::btree_set(1u64..14, 1..5).prop_filter_map("gcd 1", |s| {
            let mut v: Vec<u64> = s.into_iter().collect();
            v.insert(0, 0);
            IntegerSet::new(v).ok()
        })
    }

    proptest! {
        #[test]
        fn matches_brute_force(a in arb_set(), h in 0u64..7, n in 0u64..60) {
            prop_assert_eq!(rho_h(&a, h, n), Count::from(brute(a.nonzero(), h, n)));
        }

        #[test]
        fn collapsed_and_layered_paths_agree(a in arb_set(), max_n in 0u64..80) {
            let h = stabilization_budget(&a, max_n);
            let layered = parts_rows::<u128>(a.nonzero(), a.m(), h, max_n).unwrap();
            let collapsed = unbounded_row::<u128>(a.nonzero(), max_n).unwrap();
            prop_assert_eq!(layered.last().unwrap(), &collapsed);
        }

        #[test]
        fn shift_monotonicity(a in arb_set(), h in 0u64..6, n in 0u64..50) {
            let here = rho_h(&a, h, n);
            for &x in a.elements() {
                prop_assert!(here <= rho_h(&a, h + 1, n + x));
            }
        }

        #[test]
        fn stabilization(a in arb_set(), n in 0u64..80, extra in 0u64..4) {
            let h = stabilization_budget(&a, n);
            prop_assert_eq!(rho_h(&a, h + extra, n), rho_total(&a, n));
            if h > 0 && n > 0 {
                // one fewer part may lose representations but never gains
                prop_assert!(rho_h(&a, h - 1, n) <= rho_total(&a, n));
            }
        }

        #[test]
        fn reflection_duality(a in arb_set(), h in 0u64..6) {
            let r = a.reflect();
            let hm = h * a.m();
            let t = rho_batch(&a, h, &Caps::default()).unwrap();
            let u = rho_batch(&r, h, &Caps::default()).unwrap();
            for n in 0..=hm {
                prop_assert_eq!(t.get(n), u.get(hm - n));
            }
        }

        #[test]
        fn snn_constant(a in arb_set(), n in 0u64..40) {
            let expect = Count::from(a.a1()).pow(a.ell().saturating_sub(1) as u32);
            prop_assert_eq!(snn_count(&a, n), expect);
        }

        #[test]
        fn simplex_sandwich(w in proptest::collection::vec(1u64..10, 1..4), r in 0i64..40) {
            let s = Simplex::new(w, ratio(r as i128, 1)).unwrap();
            let c = BigRational::from_integer(BigInt::from(s.count()));
            prop_assert!(s.volume() <= c);
            prop_assert!(c <= s.outer_volume());
        }

        #[test]
        fn brackets_contain(a in arb_set(), extra in 0u64..60) {
            let n = bracket_threshold(&a) + extra;
            let (lo, _) = rho_brackets(&a, n).unwrap();
            let hi = rho_upper_proved(&a, n);
            let r = BigRational::from_integer(BigInt::from(rho_total(&a, n)));
            prop_assert!(lo <= r && r <= hi, "{} not in [{}, {}]", r, lo, hi);
        }
    }
}
