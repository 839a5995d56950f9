//! `t`-exceptional sets `E_t(A) = {n >= 0 : rho_A(n) < t}` and the Frobenius-`t`
//! numbers `Fr_t(A) = max E_t(A)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::denumerant::rho_total_table;
use crate::error::{Error, Result};
use crate::numeric::{factorial, root_bracket, root_floor_ceil};
use crate::set::IntegerSet;

/// Scale of the rational grid the irrational bracket endpoints are rounded to.
const BRACKET_SCALE: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalSet {
    pub set: IntegerSet,
    pub t: u64,
    pub frobenius_t: u64,
    pub members: Vec<u64>,
}

impl ExceptionalSet {
    pub fn contains(&self, n: u64) -> bool {
        self.members.binary_search(&n).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn exceptional_set(set: &IntegerSet, t: u64) -> Result<ExceptionalSet> {
    exceptional_set_with(set, t, &Caps::default())
}

/// Scans `n = 0, 1, ...` and stops after `m` consecutive values with `rho_A >= t`:
/// since `rho_A(n + m) >= rho_A(n)`, nothing beyond that window is exceptional.
pub fn exceptional_set_with(set: &IntegerSet, t: u64, caps: &Caps) -> Result<ExceptionalSet> {
    if t == 0 {
        return Err(crate::error::invalid("t must be at least 1"));
    }
    if set.ell() == 0 {
        // A = {0, 1}: every n has exactly one representation.
        if t == 1 {
            return Ok(ExceptionalSet {
                set: set.clone(),
                t,
                frobenius_t: 0,
                members: Vec::new(),
            });
        }
        return Err(Error::Unsupported(format!(
            "E_{t}({{0,1}}) is all of Z>=0"
        )));
    }
    let m = set.m();
    let limit = scan_limit(set, t)?;
    Caps::check("exceptional scan range", limit as u128 + 1, caps.max_hm)?;
    let table = rho_total_table(set, limit);
    let t_big = BigUint::from(t);
    let mut members = Vec::new();
    let mut run = 0u64;
    for (n, count) in table.iter().enumerate() {
        if *count < t_big {
            members.push(n as u64);
            run = 0;
        } else {
            run += 1;
            if run == m {
                let frobenius_t = members.last().copied().unwrap_or(0);
                return Ok(ExceptionalSet {
                    set: set.clone(),
                    t,
                    frobenius_t,
                    members,
                });
            }
        }
    }
    Err(Error::Inconsistency(format!(
        "no run of {m} values with rho >= {t} below the bracket cap {limit} for A = {{{set}}}"
    )))
}

pub fn frobenius_t(set: &IntegerSet, t: u64) -> Result<u64> {
    exceptional_set(set, t).map(|e| e.frobenius_t)
}

/// `ceil(upper bracket) + m`: the window must have closed by here.
fn scan_limit(set: &IntegerSet, t: u64) -> Result<u64> {
    let b = FrobeniusBrackets::new(set, t)?;
    let (_, lead_ceil) = root_floor_ceil(&b.radicand, b.ell);
    (lead_ceil + BigUint::from(b.upper_shift) + BigUint::from(set.m()))
        .to_u64()
        .ok_or(Error::ResourceLimit {
            what: "exceptional scan range",
            requested: u128::MAX,
            limit: u64::MAX as u128,
        })
}

/// Brackets `L - S - 2 < Fr_t(A) <= L + (a_1 - 1) S` where
/// `L = (a_1 ... a_{ell+1} ell! (t-1))^(1/ell)` and `S = sum_{j>=2} a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusBrackets {
    pub t: u64,
    pub ell: u32,
    /// `a_1 ... a_{ell+1} ell! (t-1)`, so that `L = radicand^(1/ell)`.
    pub radicand: BigUint,
    /// `S + 2`.
    pub lower_shift: u64,
    /// `(a_1 - 1) S`.
    pub upper_shift: u64,
    /// Lower endpoint rounded down to a multiple of `1e-9`.
    pub lower: BigRational,
    /// Upper endpoint rounded up to a multiple of `1e-9`.
    pub upper: BigRational,
}

impl FrobeniusBrackets {
    pub fn new(set: &IntegerSet, t: u64) -> Result<Self> {
        if set.ell() == 0 {
            return Err(Error::Unsupported(
                "Frobenius brackets need at least three elements".into(),
            ));
        }
        if t == 0 {
            return Err(crate::error::invalid("t must be at least 1"));
        }
        let ell = set.ell() as u32;
        let radicand = set.nonzero_product() * factorial(ell as u64) * (t - 1);
        let s = set.tail_sum();
        let lower_shift = s + 2;
        let upper_shift = (set.a1() - 1) * s;
        let (lead_down, lead_up) = root_bracket(&radicand, ell, BRACKET_SCALE);
        let rat = |x: u64| BigRational::from_integer(BigInt::from(x));
        Ok(FrobeniusBrackets {
            t,
            ell,
            lower: lead_down - rat(lower_shift),
            upper: lead_up + rat(upper_shift),
            radicand,
            lower_shift,
            upper_shift,
        })
    }

    pub fn leading_term_is_zero(&self) -> bool {
        self.radicand.is_zero()
    }

    /// Exact test of `L - S - 2 < fr` (only meaningful for `t >= 2`).
    pub fn lower_holds(&self, fr: u64) -> bool {
        BigUint::from(fr + self.lower_shift).pow(self.ell) > self.radicand
    }

    /// Exact test of `fr <= L + (a_1 - 1) S`.
    pub fn upper_holds(&self, fr: u64) -> bool {
        fr <= self.upper_shift || BigUint::from(fr - self.upper_shift).pow(self.ell) <= self.radicand
    }

    /// Both sides for `t >= 2`, the upper side alone for `t = 1`.
    pub fn contains(&self, fr: u64) -> bool {
        self.upper_holds(fr) && (self.t == 1 || self.lower_holds(fr))
    }
}

pub fn frobenius_brackets(set: &IntegerSet, t: u64) -> Result<(BigRational, BigRational)> {
    FrobeniusBrackets::new(set, t).map(|b| (b.lower, b.upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::denumerant::rho_total;
    use crate::numeric::ratio;
    use proptest::prelude::*;

    fn set(v: &[u64]) -> IntegerSet {
        IntegerSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn exceptional_examples() {
        let a = set(&[0, 3, 5]);
        let e1 = exceptional_set(&a, 1).unwrap();
        assert_eq!(e1.members, vec![1, 2, 4, 7]);
        assert_eq!(e1.frobenius_t, 7);

        let e2 = exceptional_set(&a, 2).unwrap();
        let mut expect: Vec<u64> = (0..=14).collect();
        expect.extend([16, 17, 19, 22]);
        assert_eq!(e2.members, expect);
        assert_eq!(e2.frobenius_t, 22);

        let e = exceptional_set(&set(&[0, 1, 4]), 1).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.frobenius_t, 0);

        assert_eq!(frobenius_t(&set(&[0, 1, 6, 7]), 6).unwrap(), 13);
    }

    #[test]
    fn two_element_set() {
        let a = set(&[0, 1]);
        assert!(exceptional_set(&a, 1).unwrap().is_empty());
        assert!(matches!(exceptional_set(&a, 2), Err(Error::Unsupported(_))));
        assert!(matches!(FrobeniusBrackets::new(&a, 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn json_shape() {
        let e = exceptional_set(&set(&[0, 3, 5]), 1).unwrap();
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v["t"], 1);
        assert_eq!(v["frobenius_t"], 7);
        assert_eq!(v["members"], serde_json::json!([1, 2, 4, 7]));
    }

    #[test]
    fn bracket_examples() {
        let a = set(&[0, 3, 5]);
        let b = FrobeniusBrackets::new(&a, 2).unwrap();
        assert_eq!((b.lower.clone(), b.upper.clone()), (ratio(8, 1), ratio(25, 1)));
        assert!(b.contains(22));
        assert!(!b.upper_holds(26));
        assert!(!b.lower_holds(8));

        let b = FrobeniusBrackets::new(&a, 1).unwrap();
        assert!(b.leading_term_is_zero());
        assert_eq!(b.upper, ratio(10, 1));
        assert!(b.contains(7));

        let a = set(&[0, 1, 6, 7]);
        let b = FrobeniusBrackets::new(&a, 6).unwrap();
        // L = sqrt(42 * 2 * 5) = sqrt(420), upper = L, lower = L - 15
        assert!(b.lower < ratio(5_494, 1000) && b.lower > ratio(5_493, 1000));
        assert!(b.upper > ratio(20_493, 1000) && b.upper < ratio(20_494, 1000));
        assert!(b.contains(13));
    }

    fn arb_set() -> impl Strategy<Value = IntegerSet> {
        proptest::collection::btree_set(1u64..16, 2..5).prop_filter_map("gcd 1", |s| {
            let mut v: Vec<u64> = s.into_iter().collect();
            v.insert(0, 0);
            IntegerSet::new(v).ok()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn members_are_exactly_the_deficient(a in arb_set(), t in 1u64..5) {
            let e = exceptional_set(&a, t).unwrap();
            let t_big = BigUint::from(t);
            for n in 0..=e.frobenius_t + 2 * a.m() {
                prop_assert_eq!(e.contains(n), rho_total(&a, n) < t_big, "n = {}", n);
            }
        }

        #[test]
        fn nested_in_t(a in arb_set(), t in 1u64..5) {
            let lo = exceptional_set(&a, t).unwrap();
            let hi = exceptional_set(&a, t + 1).unwrap();
            prop_assert!(lo.members.iter().all(|&n| hi.contains(n)));
            prop_assert!(lo.frobenius_t <= hi.frobenius_t);
        }

        #[test]
        fn brackets_hold(a in arb_set(), t in 1u64..10) {
            let b = FrobeniusBrackets::new(&a, t).unwrap();
            let fr = frobenius_t(&a, t).unwrap();
            prop_assert!(b.contains(fr));
            // the rounded rationals agree with the exact tests
            let f = BigRational::from_integer(BigInt::from(fr));
            prop_assert!(f <= b.upper);
            if t >= 2 {
                prop_assert!(b.lower < f);
            }
        }
    }
}
