//! Closed forms for three-element sets `{0, a, m}` with `gcd(a, m) = 1`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{invalid, Error, Result};
use crate::frobenius::exceptional_set_with;
use crate::numeric::mod_inverse;
use crate::set::{Count, IntegerSet};
use crate::structure::Analyzer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeSet {
    pub a: u64,
    pub m: u64,
    /// `a^{-1} mod m`.
    pub a_inv: u64,
    /// `m^{-1} mod a` (0 when `a = 1`).
    pub m_inv: u64,
}

impl ThreeSet {
    pub fn new(a: u64, m: u64) -> Result<Self> {
        if a == 0 || a >= m {
            return Err(invalid(format!("need 0 < a < m, got a = {a}, m = {m}")));
        }
        if a.gcd(&m) != 1 {
            return Err(invalid(format!("gcd({a}, {m}) != 1")));
        }
        Ok(ThreeSet {
            a,
            m,
            a_inv: mod_inverse(a, m).expect("coprime"),
            m_inv: mod_inverse(m % a, a).expect("coprime"),
        })
    }

    pub fn set(&self) -> IntegerSet {
        IntegerSet::new(vec![0, self.a, self.m]).expect("coprime pair")
    }

    /// `rho_A(n) = n/(am) - {n a^{-1} / m} - {n m^{-1} / a} + 1`.
    pub fn rho_closed(&self, n: u64) -> Count {
        let (a, m) = (self.a as u128, self.m as u128);
        let frac = |num: u128, den: u128| BigRational::new(BigInt::from(num % den), BigInt::from(den));
        let value = BigRational::new(BigInt::from(n), BigInt::from(a * m))
            - frac((n as u128 % m) * self.a_inv as u128, m)
            - frac((n as u128 % a) * self.m_inv as u128, a)
            + BigRational::one();
        assert!(value.is_integer(), "closed form gave {value} at n = {n}");
        value
            .to_integer()
            .to_biguint()
            .expect("closed form is nonnegative")
    }

    /// `tam - a - m`. This is `-1` for `a = 1, t = 1`, where `E_1` is empty and
    /// the convention gives `Fr_1 = 0`; see [`ThreeSet::frobenius_t`].
    pub fn frobenius_t_closed(&self, t: u64) -> i128 {
        t as i128 * self.a as i128 * self.m as i128 - self.a as i128 - self.m as i128
    }

    /// The closed form with the empty-set convention applied.
    pub fn frobenius_t(&self, t: u64) -> u64 {
        self.frobenius_t_closed(t).max(0) as u64
    }

    /// `(t-1)am + (a-1)(m-1)/2`.
    pub fn exceptional_size_closed(&self, t: u64) -> Count {
        let (a, m) = (self.a as u128, self.m as u128);
        BigUint::from((t as u128 - 1) * a * m) + BigUint::from((a - 1) * (m - 1) / 2)
    }

    /// Checks `E_t = [0, (t-1)am - 1] ∪ ((t-1)am + E_1)` against the scan.
    pub fn shift_identity_check(&self, t: u64, caps: &Caps) -> Result<bool> {
        let set = self.set();
        let et = exceptional_set_with(&set, t, caps)?;
        let e1 = exceptional_set_with(&set, 1, caps)?;
        let shift = (t - 1) * self.a * self.m;
        let predicted: Vec<u64> = (0..shift)
            .chain(e1.members.iter().map(|&n| n + shift))
            .collect();
        Ok(predicted == et.members)
    }

    /// Whether `(h{0,a,m})^(t)` is structured for every `h` in `[1, h_max]`.
    pub fn always_structured_check(&self, t: u64, h_max: u64, caps: &Caps) -> Result<bool> {
        let an = Analyzer::new(&self.set(), t, caps)?;
        Ok(an.failures_through(h_max)?.is_empty())
    }

    /// Smallest `h` with `h > (Fr_t(A) + Fr_t(m - A) + 1) / m`, from which the
    /// structured set contains its middle interval.
    pub fn interval_threshold(&self, t: u64) -> u64 {
        let reflected = ThreeSet::new(self.m - self.a, self.m).expect("coprime pair");
        (self.frobenius_t(t) + reflected.frobenius_t(t) + 1) / self.m + 1
    }

    /// Checks `rho(n) + rho(am - n) = 1` for every `0 <= n <= am` with `a ∤ n`, `m ∤ n`.
    pub fn reciprocity_check(&self) -> bool {
        let am = self.a * self.m;
        (0..=am)
            .filter(|n| n % self.a != 0 && n % self.m != 0)
            .all(|n| (self.rho_closed(n) + self.rho_closed(am - n)).to_u64() == Some(1))
    }
}

pub fn rho_closed(a: u64, m: u64, n: u64) -> Result<Count> {
    Ok(ThreeSet::new(a, m)?.rho_closed(n))
}

pub fn frobenius_t_closed(a: u64, m: u64, t: u64) -> Result<i128> {
    if t == 0 {
        return Err(Error::InvalidInput("t must be at least 1".into()));
    }
    Ok(ThreeSet::new(a, m)?.frobenius_t_closed(t))
}

pub fn exceptional_size_closed(a: u64, m: u64, t: u64) -> Result<Count> {
    if t == 0 {
        return Err(Error::InvalidInput("t must be at least 1".into()));
    }
    Ok(ThreeSet::new(a, m)?.exceptional_size_closed(t))
}
