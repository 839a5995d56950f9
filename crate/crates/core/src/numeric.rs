//! Small exact-arithmetic helpers shared across modules.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `C(n, k)` by the multiplicative formula; every intermediate quotient is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Inverse of `a` modulo `m` in `[0, m)`. Modulus 1 yields 0.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// `floor(x^(1/k))` and `ceil(x^(1/k))`.
pub fn root_floor_ceil(x: &BigUint, k: u32) -> (BigUint, BigUint) {
    let f = x.nth_root(k);
    if f.pow(k) == *x {
        (f.clone(), f)
    } else {
        let c = &f + 1u32;
        (f, c)
    }
}

/// `x^(1/k)` rounded to a multiple of `1/scale`: downward for the first
/// component, upward for the second.
pub fn root_bracket(x: &BigUint, k: u32, scale: u64) -> (BigRational, BigRational) {
    let scaled = x * BigUint::from(scale).pow(k);
    let (f, c) = root_floor_ceil(&scaled, k);
    let den = BigInt::from(scale);
    (
        BigRational::new(BigInt::from(f), den.clone()),
        BigRational::new(BigInt::from(c), den),
    )
}

pub fn rational_floor(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

pub fn rational_ceil(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

pub fn ratio(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Lossy view used only for human-readable report fields.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    let n = x.numer().to_f64().unwrap_or(f64::NAN);
    let d = x.denom().to_f64().unwrap_or(f64::NAN);
    if n.is_finite() && d.is_finite() {
        n / d
    } else {
        // Very large operands: compare magnitudes through bit lengths.
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000) as i32;
        let n = (x.numer().abs() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        let d = (x.denom() >> shift as usize).to_f64().unwrap_or(f64::NAN);
        if x.is_negative() {
            -n / d
        } else {
            n / d
        }
    }
}

pub fn biguint_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
