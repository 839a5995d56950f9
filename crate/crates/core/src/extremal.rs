//! The family `A = {0, 1, m-ell+1, ..., m}` with `t = C(ell+R, R)`, for which
//! `h_t(A)` is at least `g = (R+1)(m-ell+1) - 1`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::denumerant::rho_total;
use crate::error::{invalid, Result};
use crate::numeric::{binomial, factorial};
use crate::set::{Count, IntegerSet};
use crate::structure::Analyzer;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalInstance {
    pub m: u64,
    pub ell: u64,
    #[serde(rename = "R")]
    pub r: u64,
    pub set: IntegerSet,
    #[serde(with = "crate::serde_count")]
    pub t: Count,
    pub g: u64,
}

impl ExtremalInstance {
    pub fn build(m: u64, ell: u64, r: u64) -> Result<Self> {
        if m < 5 {
            return Err(invalid(format!("m >= 5 required, got m = {m}")));
        }
        if ell < 2 {
            return Err(invalid(format!("ell >= 2 required, got ell = {ell}")));
        }
        if 2 * ell > m {
            return Err(invalid(format!("ell <= m/2 required, got ell = {ell}, m = {m}")));
        }
        if r * (ell - 1) > m - ell {
            return Err(invalid(format!(
                "R <= (m-ell)/(ell-1) required, got R = {r} with (m-ell)/(ell-1) = {}",
                (m - ell) / (ell - 1)
            )));
        }
        let mut elements = vec![0, 1];
        elements.extend(m - ell + 1..=m);
        Ok(ExtremalInstance {
            m,
            ell,
            r,
            set: IntegerSet::new(elements)?,
            t: binomial(ell + r, r),
            g: (r + 1) * (m - ell + 1) - 1,
        })
    }

    /// `2R + 1`, the budget at which the sumset is shown not to be structured.
    pub fn witness_h(&self) -> u64 {
        2 * self.r + 1
    }

    /// `(ell+R)^ell / ell^ell <= t <= (ell+R)^ell / ell!`, checked exactly.
    pub fn t_within_bounds(&self) -> bool {
        let top = BigUint::from(self.ell + self.r).pow(self.ell as u32);
        let lower = BigUint::from(self.ell).pow(self.ell as u32) * &self.t;
        let upper = factorial(self.ell) * &self.t;
        lower >= top && upper <= top
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub instance: ExtremalInstance,
    /// `E_t(A) ∪ E_t(m-A) ⊆ [0, mR-1]`.
    pub exceptional_within: bool,
    #[serde(with = "crate::serde_count")]
    pub rho_at_g: Count,
    pub rho_at_g_equals_t: bool,
    pub frobenius_t: u64,
    pub frobenius_t_reflected: u64,
    /// `g - m <= Fr_t(A) <= mR - 1`.
    pub frobenius_window: bool,
    pub structured_at_witness_h: bool,
    pub ht: u64,
    pub mt1: u64,
    pub ht_at_least_g: bool,
    pub ht_at_most_mt1: bool,
    pub passed: bool,
}

pub fn verify(inst: &ExtremalInstance, caps: &Caps) -> Result<ExtremalReport> {
    let t = inst.t.to_u64().unwrap_or(u64::MAX);
    caps.check_t(inst.t.to_u128().unwrap_or(u128::MAX))?;
    let an = Analyzer::new(&inst.set, t, caps)?;
    let (m, r) = (inst.m as i128, inst.r as i128);
    let top = m * r - 1;
    let fr = an.exceptional().frobenius_t;
    let (scan, (witness, rho_at_g)) = rayon::join(
        || an.ht_scan(0),
        || (an.report(inst.witness_h()), rho_total(&inst.set, inst.g)),
    );
    let scan = scan?;
    let structured_at_witness_h = witness?.structured;
    let exceptional_within = an
        .exceptional()
        .members
        .iter()
        .chain(&an.exceptional_reflected().members)
        .all(|&n| (n as i128) <= top);
    let frobenius_window = inst.g as i128 - m <= fr as i128 && fr as i128 <= top;
    let rho_at_g_equals_t = rho_at_g == inst.t;
    let ht_at_least_g = scan.ht >= inst.g;
    let ht_at_most_mt1 = scan.ht <= scan.cap;
    Ok(ExtremalReport {
        instance: inst.clone(),
        exceptional_within,
        rho_at_g,
        rho_at_g_equals_t,
        frobenius_t: fr,
        frobenius_t_reflected: an.exceptional_reflected().frobenius_t,
        frobenius_window,
        structured_at_witness_h,
        ht: scan.ht,
        mt1: scan.cap,
        ht_at_least_g,
        ht_at_most_mt1,
        passed: exceptional_within
            && rho_at_g_equals_t
            && frobenius_window
            && !structured_at_witness_h
            && ht_at_least_g
            && ht_at_most_mt1,
    })
}

/// Finite-`m` evidence for `h_t ~ (1/e) m ell t^(1/ell)` with
/// `ell = floor(m^(1/2.01))` and `R = floor(sqrt(m))`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticRecord {
    pub m: u64,
    pub ell: u64,
    #[serde(rename = "R")]
    pub r: u64,
    #[serde(with = "crate::serde_count")]
    pub t: Count,
    pub g: u64,
    /// `g / ((1/e) m ell t^(1/ell))`.
    pub ratio: f64,
    /// `(ell!)^(1/ell) t^(1/ell) - ell <= R`.
    pub lower_holds: bool,
    /// `R <= ell t^(1/ell) - ell`.
    pub upper_holds: bool,
}

/// Largest `ell` with `ell^2.01 <= m`.
fn induced_ell(m: u64) -> u64 {
    let mut ell = (m as f64).powf(1.0 / 2.01).floor() as u64;
    while ell > 0 && (ell as f64).powf(2.01) > m as f64 {
        ell -= 1;
    }
    while ((ell + 1) as f64).powf(2.01) <= m as f64 {
        ell += 1;
    }
    ell
}

/// `ln x` for integers too large for `f64`.
fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn asymptotic_report(m: u64) -> Result<AsymptoticRecord> {
    if m < 5 {
        return Err(invalid(format!("m >= 5 required, got m = {m}")));
    }
    let ell = induced_ell(m);
    let r = m.isqrt();
    let inst = ExtremalInstance::build(m, ell, r)?;
    let l = ell as f64;
    let ln_denominator = (m as f64).ln() + l.ln() + ln_big(&inst.t) / l - 1.0;
    let ratio = ((inst.g as f64).ln() - ln_denominator).exp();
    let top = BigUint::from(ell + r).pow(ell as u32);
    Ok(AsymptoticRecord {
        m,
        ell,
        r,
        g: inst.g,
        ratio,
        lower_holds: factorial(ell) * &inst.t <= top,
        upper_holds: top <= BigUint::from(ell).pow(ell as u32) * &inst.t,
        t: inst.t,
    })
}
