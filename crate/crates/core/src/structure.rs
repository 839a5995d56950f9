//! `t`-sumsets `(hA)^(t)`, the structure predicate
//! `(hA)^(t) = [0, hm] \ (E_t(A) ∪ (hm - E_t(m - A)))`, the exact threshold `h_t(A)`
//! and the closed-form bounds on it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::denumerant::{bounded_counts, RhoLadder};
use crate::error::{Error, Result};
use crate::frobenius::{exceptional_set_with, ExceptionalSet};
use crate::set::IntegerSet;

/// `(hA)^(t)`, sorted.
pub fn t_sumset(set: &IntegerSet, h: u64, t: u64) -> Vec<u64> {
    let t = num_bigint::BigUint::from(t);
    bounded_counts(set, h, h * set.m())
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c >= t)
        .map(|(n, _)| n as u64)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub set: IntegerSet,
    pub h: u64,
    pub t: u64,
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
    pub structured: bool,
    /// Members of `rhs \ lhs`, cut to the witness limit.
    pub witnesses: Vec<u64>,
    pub witness_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HtScan {
    pub set: IntegerSet,
    pub t: u64,
    /// Smallest `h` with every `h' in [h, cap]` structured.
    pub ht: u64,
    /// The bound beyond which structure is guaranteed.
    pub cap: u64,
    /// Last `h` examined; may exceed `cap` when a verification window was requested.
    pub scanned_to: u64,
    /// Every unstructured `h` in `[1, scanned_to]`.
    pub failures: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub set: IntegerSet,
    pub t: u64,
    pub frobenius_t: u64,
    pub frobenius_t_reflected: u64,
    pub mt1: u64,
    /// Upper estimate of the constant in the `m ell t^(1/ell)` bound; absent when `ell = 0`.
    pub mt2_constant: Option<f64>,
    pub mt2: Option<u64>,
    pub yang_zhou: i64,
    pub h_plus: u64,
    pub h_minus: u64,
}

/// Everything about `(hA)^(t)` that does not depend on `h`, computed once.
#[derive(Clone, Debug)]
pub struct Analyzer {
    set: IntegerSet,
    t: u64,
    caps: Caps,
    ea: ExceptionalSet,
    eb: ExceptionalSet,
}

impl Analyzer {
    pub fn new(set: &IntegerSet, t: u64, caps: &Caps) -> Result<Self> {
        let reflected = set.reflect();
        Ok(Analyzer {
            set: set.clone(),
            t,
            caps: caps.clone(),
            ea: exceptional_set_with(set, t, caps)?,
            eb: exceptional_set_with(&reflected, t, caps)?,
        })
    }

    pub fn set(&self) -> &IntegerSet {
        &self.set
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `E_t(A)`.
    pub fn exceptional(&self) -> &ExceptionalSet {
        &self.ea
    }

    /// `E_t(m - A)`.
    pub fn exceptional_reflected(&self) -> &ExceptionalSet {
        &self.eb
    }

    fn in_rhs(&self, h: u64, n: u64) -> bool {
        let hm = h * self.set.m();
        n <= hm && !self.ea.contains(n) && !self.eb.contains(hm - n)
    }

    pub fn structured_rhs(&self, h: u64) -> Vec<u64> {
        (0..=h * self.set.m()).filter(|&n| self.in_rhs(h, n)).collect()
    }

    pub fn report(&self, h: u64) -> Result<StructureReport> {
        self.caps.check_hm(h, self.set.m())?;
        let lhs = t_sumset(&self.set, h, self.t);
        let rhs = self.structured_rhs(h);
        self.build_report(h, lhs, rhs)
    }

    fn build_report(&self, h: u64, lhs: Vec<u64>, rhs: Vec<u64>) -> Result<StructureReport> {
        if let Some(&n) = lhs.iter().find(|&&n| !self.in_rhs(h, n)) {
            return Err(self.containment_failure(h, n));
        }
        let mut witnesses: Vec<u64> = rhs
            .iter()
            .copied()
            .filter(|n| lhs.binary_search(n).is_err())
            .collect();
        let witness_count = witnesses.len();
        witnesses.truncate(self.caps.witness_limit);
        Ok(StructureReport {
            set: self.set.clone(),
            h,
            t: self.t,
            structured: witness_count == 0,
            lhs,
            rhs,
            witnesses,
            witness_count,
        })
    }

    fn containment_failure(&self, h: u64, n: u64) -> Error {
        Error::Inconsistency(format!(
            "{n} lies in ({h}A)^({}) but not in the structured set, A = {{{}}}",
            self.t, self.set
        ))
    }

    /// `lhs == rhs` at `h`, reading counts from a prebuilt ladder.
    fn structured_on(&self, ladder: &RhoLadder, h: u64) -> Result<bool> {
        let mut ok = true;
        for n in 0..=h * self.set.m() {
            match (ladder.reaches(h, n, self.t), self.in_rhs(h, n)) {
                (true, false) => return Err(self.containment_failure(h, n)),
                (false, true) => ok = false,
                _ => {}
            }
        }
        Ok(ok)
    }

    pub fn h_plus_minus(&self) -> (u64, u64) {
        let m = self.set.m();
        (
            (self.ea.frobenius_t + m).div_ceil(self.set.a1()),
            (self.eb.frobenius_t + m).div_ceil(m - self.set.a_ell()),
        )
    }

    pub fn bound_mt1(&self) -> u64 {
        let m = self.set.m();
        (self.ea.frobenius_t + m) / self.set.a1() + (self.eb.frobenius_t + m) / (m - self.set.a_ell())
    }

    /// Scans `h = 1..=bound_mt1 + extra` (all `h` checked in parallel over one
    /// shared DP) and reports every unstructured `h`.
    ///
    /// Structure is not assumed monotone in `h`, so `ht` is one past the last
    /// failure at or below the guaranteed bound.
    pub fn ht_scan(&self, extra: u64) -> Result<HtScan> {
        let cap = self.bound_mt1();
        let top = cap + extra;
        let failures = self.failures_through(top)?;
        let ht = failures
            .iter()
            .filter(|&&h| h <= cap)
            .max()
            .map_or(1, |h| h + 1);
        Ok(HtScan {
            set: self.set.clone(),
            t: self.t,
            ht,
            cap,
            scanned_to: top,
            failures,
        })
    }

    /// Every unstructured `h` in `[1, top]`.
    pub fn failures_through(&self, top: u64) -> Result<Vec<u64>> {
        let ladder = RhoLadder::build(&self.set, top, &self.caps)?;
        let flags: Vec<bool> = (1..=top)
            .into_par_iter()
            .map(|h| self.structured_on(&ladder, h))
            .collect::<Result<_>>()?;
        Ok(flags
            .iter()
            .zip(1..)
            .filter(|(ok, _)| !**ok)
            .map(|(_, h)| h)
            .collect())
    }

    pub fn bounds(&self) -> BoundsReport {
        let (h_plus, h_minus) = self.h_plus_minus();
        let mt2 = bound_mt2(&self.set, self.t).ok();
        BoundsReport {
            set: self.set.clone(),
            t: self.t,
            frobenius_t: self.ea.frobenius_t,
            frobenius_t_reflected: self.eb.frobenius_t,
            mt1: self.bound_mt1(),
            mt2_constant: mt2.map(|(c, _)| c),
            mt2: mt2.map(|(_, b)| b),
            yang_zhou: bound_yz(&self.set, self.t),
            h_plus,
            h_minus,
        }
    }

    /// Length of the longest run of consecutive integers in `(hA)^(t)` at `h = bound_mt1`.
    pub fn longest_run_at_mt1(&self) -> Result<u64> {
        let h = self.bound_mt1();
        self.caps.check_hm(h, self.set.m())?;
        Ok(longest_run(&t_sumset(&self.set, h, self.t)))
    }

    /// Whether `(hA)^(t)` at `h = bound_mt1` contains `m` consecutive integers.
    pub fn long_interval_check(&self) -> Result<bool> {
        Ok(self.longest_run_at_mt1()? >= self.set.m())
    }
}

fn longest_run(sorted: &[u64]) -> u64 {
    let mut best = 0;
    let mut run = 0;
    let mut prev: Option<u64> = None;
    for &n in sorted {
        run = if prev == Some(n.wrapping_sub(1)) { run + 1 } else { 1 };
        best = best.max(run);
        prev = Some(n);
    }
    best
}

pub fn structured_rhs(set: &IntegerSet, h: u64, t: u64) -> Result<Vec<u64>> {
    Ok(Analyzer::new(set, t, &Caps::default())?.structured_rhs(h))
}

pub fn is_structured(set: &IntegerSet, h: u64, t: u64) -> Result<StructureReport> {
    Analyzer::new(set, t, &Caps::default())?.report(h)
}

pub fn ht_exact(set: &IntegerSet, t: u64) -> Result<u64> {
    Ok(Analyzer::new(set, t, &Caps::default())?.ht_scan(0)?.ht)
}

pub fn bound_mt1(set: &IntegerSet, t: u64) -> Result<u64> {
    Ok(Analyzer::new(set, t, &Caps::default())?.bound_mt1())
}

pub fn h_plus_minus(set: &IntegerSet, t: u64) -> Result<(u64, u64)> {
    Ok(Analyzer::new(set, t, &Caps::default())?.h_plus_minus())
}

pub fn long_interval_check(set: &IntegerSet, t: u64) -> Result<bool> {
    Analyzer::new(set, t, &Caps::default())?.long_interval_check()
}

/// `c = (1 + 4/ell) e / t^(1/ell) + (1 + 2/ell)(1 + ln(4 ell)/ell) / min(a_1, m - a_ell)`
/// and `ceil(c m ell t^(1/ell) / e)`.
pub fn bound_mt2(set: &IntegerSet, t: u64) -> Result<(f64, u64)> {
    let ell = set.ell();
    if ell == 0 {
        return Err(Error::Unsupported(
            "the m*ell*t^(1/ell) bound needs at least three elements".into(),
        ));
    }
    let l = ell as f64;
    let e = std::f64::consts::E;
    let root = (t as f64).powf(1.0 / l);
    let gap = set.a1().min(set.m() - set.a_ell()) as f64;
    let c = (1.0 + 4.0 / l) * e / root + (1.0 + 2.0 / l) * (1.0 + (4.0 * l).ln() / l) / gap;
    let bound = (c / e * set.m() as f64 * l * root).ceil();
    if ell >= 4 && c > 3.0 * e {
        return Err(Error::Inconsistency(format!(
            "constant {c} exceeds 3e for ell = {ell}"
        )));
    }
    Ok((c, bound as u64))
}

/// `sum_{i=2}^{ell+1} (t a_i - 1) - 1`; equals `-1` for `A = {0, 1}`.
pub fn bound_yz(set: &IntegerSet, t: u64) -> i64 {
    set.elements()[2..]
        .iter()
        .map(|&a| (t * a) as i64 - 1)
        .sum::<i64>()
        - 1
}

pub fn bounds(set: &IntegerSet, t: u64) -> Result<BoundsReport> {
    Ok(Analyzer::new(set, t, &Caps::default())?.bounds())
}
