//! Canonical finite sets `A = {0 = a_0 < a_1 < ... < a_ell < a_{ell+1} = m}` with `gcd(A) = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Exact nonnegative count. Representation counts outgrow machine words quickly.
pub type Count = BigUint;

/// A normalized set: least element 0, greatest `m`, gcd 1, at least two elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct IntegerSet {
    elements: Vec<u64>,
}

/// The affine map taking the normalized set back to the raw input:
/// `raw = shift + scale * normalized`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineRecord {
    pub shift: i64,
    pub scale: u64,
}

impl IntegerSet {
    /// Builds a set from elements that must already be normalized.
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.len() < 2 {
            return Err(invalid("a set needs at least two distinct elements"));
        }
        if elements[0] != 0 {
            return Err(invalid(format!(
                "least element must be 0, got {}",
                elements[0]
            )));
        }
        let g = elements.iter().fold(0u64, |g, &a| g.gcd(&a));
        if g != 1 {
            return Err(invalid(format!("elements must have gcd 1, got {g}")));
        }
        Ok(IntegerSet { elements })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Elements other than 0.
    pub fn nonzero(&self) -> &[u64] {
        &self.elements[1..]
    }

    pub fn m(&self) -> u64 {
        *self.elements.last().unwrap()
    }

    /// `|A| - 2`.
    pub fn ell(&self) -> usize {
        self.elements.len() - 2
    }

    pub fn a1(&self) -> u64 {
        self.elements[1]
    }

    /// Greatest element below `m` (0 when `ell = 0`).
    pub fn a_ell(&self) -> u64 {
        self.elements[self.elements.len() - 2]
    }

    /// `sum_{j=2}^{ell+1} a_j`: every nonzero element except `a_1`.
    pub fn tail_sum(&self) -> u64 {
        self.elements[2..].iter().sum()
    }

    /// `a_1 a_2 ... a_ell m`.
    pub fn nonzero_product(&self) -> BigUint {
        self.nonzero()
            .iter()
            .fold(BigUint::from(1u32), |acc, &a| acc * a)
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `m - A`, which is again normalized.
    pub fn reflect(&self) -> IntegerSet {
        let m = self.m();
        let mut elements: Vec<u64> = self.elements.iter().rev().map(|&a| m - a).collect();
        elements.sort_unstable();
        IntegerSet { elements }
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in &self.elements {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<u64>> for IntegerSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        IntegerSet::new(v)
    }
}

impl From<IntegerSet> for Vec<u64> {
    fn from(s: IntegerSet) -> Vec<u64> {
        s.elements
    }
}

/// Parses `"0, 3,5"` into raw integers. Whitespace is ignored.
pub fn parse_literal(text: &str) -> Result<Vec<i64>> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(invalid("empty set literal"));
    }
    cleaned
        .split(',')
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|e| invalid(format!("bad integer {tok:?}: {e}")))
        })
        .collect()
}

/// One set literal per line; blank lines and `#` comments are skipped.
pub fn parse_lines(text: &str) -> Result<Vec<Vec<i64>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_literal)
        .collect()
}

impl FromStr for IntegerSet {
    type Err = Error;

    /// Parses and normalizes a raw literal, discarding the affine record.
    fn from_str(s: &str) -> Result<Self> {
        normalize(&parse_literal(s)?).map(|(set, _)| set)
    }
}

/// Subtracts the minimum and divides by the gcd of the differences.
pub fn normalize(raw: &[i64]) -> Result<(IntegerSet, AffineRecord)> {
    let mut v = raw.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.len() < 2 {
        return Err(invalid(format!(
            "need at least 2 distinct values, got {}",
            v.len()
        )));
    }
    let shift = v[0];
    let diffs: Vec<u64> = v
        .iter()
        .map(|&x| u64::try_from(x as i128 - shift as i128))
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| invalid("value range exceeds 64 bits"))?;
    let scale = diffs.iter().fold(0u64, |g, &x| g.gcd(&x));
    let elements = diffs.into_iter().map(|x| x / scale).collect();
    Ok((IntegerSet { elements }, AffineRecord { shift, scale }))
}

impl AffineRecord {
    pub fn identity() -> Self {
        AffineRecord { shift: 0, scale: 1 }
    }

    /// Maps a normalized set back to the raw values.
    pub fn apply(&self, set: &IntegerSet) -> Vec<i64> {
        set.elements()
            .iter()
            .map(|&a| self.shift + (self.scale * a) as i64)
            .collect()
    }
}
