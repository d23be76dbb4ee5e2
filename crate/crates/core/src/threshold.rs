//! Certified evaluation of the minimum-degree thresholds
//!
//! ```text
//! hamilton:   ln 4 / ((p - 1/2) ln((p + 1/2) / (3/2 - p)))
//! two_factor: the same minus 1 / (p - 1/2)
//! ```
//!
//! Logarithms are enclosed in rational intervals (atanh series with an
//! explicit tail bound), rounded outward to a `2^-bits` grid after every
//! operation. The result is an interval guaranteed to contain the true
//! value, from which an integer bracket `a < value < a + 1` is read off.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Hamilton,
    TwoFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThresholdError {
    #[error("p = {0} must satisfy 1/2 < p < 3/4")]
    OutOfRange(BigRational),
    #[error("could not bracket the bound by an integer interval within {digits} digits")]
    Unbracketed { digits: u32 },
}

pub const DEFAULT_DIGITS: u32 = 60;
const MAX_DIGITS: u32 = 4000;

/// Closed interval `[lo, hi]` of rationals on a `2^-bits` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

struct Grid {
    scale: BigInt,
}

impl Grid {
    fn new(bits: u64) -> Self {
        Grid {
            scale: BigInt::one() << bits,
        }
    }

    fn down(&self, q: &BigRational) -> BigRational {
        let scaled = q * &self.scale;
        BigRational::new(scaled.floor().to_integer(), self.scale.clone())
    }

    fn up(&self, q: &BigRational) -> BigRational {
        let scaled = q * &self.scale;
        BigRational::new(scaled.ceil().to_integer(), self.scale.clone())
    }

    fn round(&self, lo: &BigRational, hi: &BigRational) -> Interval {
        Interval {
            lo: self.down(lo),
            hi: self.up(hi),
        }
    }

    /// `atanh(z)` for rational `0 <= z <= 1/2`.
    fn atanh(&self, z: &BigRational) -> Interval {
        let z2 = z * z;
        let target = BigRational::new(BigInt::one(), self.scale.clone());
        let mut power = z.clone();
        let mut sum = BigRational::zero();
        let mut j = 1u64;
        loop {
            sum += &power / BigInt::from(j);
            power = &power * &z2;
            // Remaining terms are below power/j * 1/(1 - z^2).
            let tail = &power / BigInt::from(j + 2) / (BigRational::one() - &z2);
            if tail < target || power.is_zero() {
                return self.round(&sum, &(&sum + tail));
            }
            j += 2;
        }
    }

    /// `ln q` for rational `q > 0`.
    fn ln(&self, q: &BigRational) -> Interval {
        let two = BigRational::from_integer(BigInt::from(2));
        let mut m = q.clone();
        let mut e: i64 = 0;
        while m >= two {
            m /= BigInt::from(2);
            e += 1;
        }
        while m < BigRational::one() {
            m *= BigInt::from(2);
            e -= 1;
        }
        // ln m = 2 atanh((m - 1)/(m + 1)), with (m - 1)/(m + 1) in [0, 1/3).
        let z = (&m - BigRational::one()) / (&m + BigRational::one());
        let lm = self.atanh(&z);
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        let l2 = self.atanh(&third);
        let ev = BigRational::from_integer(BigInt::from(e));
        let (l2lo, l2hi) = if e >= 0 {
            (&l2.lo * &ev, &l2.hi * &ev)
        } else {
            (&l2.hi * &ev, &l2.lo * &ev)
        };
        let two = BigInt::from(2);
        self.round(&((&lm.lo + l2lo) * &two), &((&lm.hi + l2hi) * &two))
    }
}

/// Enclosure of `ln q`, `q > 0`, with endpoints on a `2^-bits` grid.
pub fn ln_interval(q: &BigRational, bits: u64) -> Interval {
    Grid::new(bits).ln(q)
}

/// A certified enclosure of the threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub p: BigRational,
    pub variant: Variant,
    pub digits: u32,
    pub value: Interval,
    /// `floor` of the value: `floor < value < floor + 1`.
    pub floor: BigInt,
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} < bound < {}", self.floor, &self.floor + 1)
    }
}

impl Threshold {
    /// Midpoint of the enclosure with `places` decimals.
    pub fn approx(&self, places: usize) -> String {
        let mid = (&self.value.lo + &self.value.hi) / BigInt::from(2);
        decimal(&mid, places)
    }

    /// Smallest even `n` strictly above the bound.
    pub fn first_even_order(&self) -> BigInt {
        let next: BigInt = &self.floor + 1;
        if next.is_even() {
            next
        } else {
            next + 1
        }
    }
}

/// `q` rounded toward zero to `places` decimals.
pub fn decimal(q: &BigRational, places: usize) -> String {
    let scaled = (q * BigInt::from(10).pow(places as u32)).trunc().to_integer();
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if neg { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Interval enclosure of the threshold at a fixed working precision.
pub fn enclose(p: &BigRational, variant: Variant, digits: u32) -> Result<Interval, ThresholdError> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let three_quarters = BigRational::new(BigInt::from(3), BigInt::from(4));
    if p <= &half || p >= &three_quarters {
        return Err(ThresholdError::OutOfRange(p.clone()));
    }
    // 10^digits < 2^bits, plus guard bits for the few roundings below.
    let bits = u64::from(digits) * 3322 / 1000 + 16;
    let grid = Grid::new(bits);
    let eps = p - &half;
    let ratio = (p + &half) / (BigRational::from_integer(BigInt::from(3)) / BigInt::from(2) - p);
    let ln4 = grid.ln(&BigRational::from_integer(BigInt::from(4)));
    let lq = grid.ln(&ratio);
    // Denominator eps * ln q is positive since q > 1.
    let den = grid.round(&(&lq.lo * &eps), &(&lq.hi * &eps));
    let mut val = grid.round(&(&ln4.lo / &den.hi), &(&ln4.hi / &den.lo));
    if variant == Variant::TwoFactor {
        let shift = BigRational::one() / &eps;
        val = grid.round(&(&val.lo - &shift), &(&val.hi - &shift));
    }
    Ok(val)
}

/// Evaluates the threshold, starting at `digits` of precision and doubling
/// until the enclosure fits strictly between consecutive integers.
pub fn threshold(p: &BigRational, variant: Variant, digits: u32) -> Result<Threshold, ThresholdError> {
    let mut d = digits.max(1);
    loop {
        let value = enclose(p, variant, d)?;
        let floor = value.lo.floor().to_integer();
        let lo_ok = value.lo > BigRational::from_integer(floor.clone());
        let hi_ok = value.hi < BigRational::from_integer(&floor + 1);
        if lo_ok && hi_ok {
            return Ok(Threshold {
                p: p.clone(),
                variant,
                digits: d,
                value,
                floor,
            });
        }
        if d >= MAX_DIGITS {
            return Err(ThresholdError::Unbracketed { digits: d });
        }
        d = (d * 2).min(MAX_DIGITS);
    }
}
