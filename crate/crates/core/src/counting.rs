//! Exact equipartition counting for the minimum-degree sufficient condition.
//!
//! For a digraph in which every vertex has in- and outdegree `delta`, `n_k`
//! is the number of source sets `X` for which a fixed vertex has degree `k`
//! in `B(X, Y)`. `N` is the number of source sets and `S` bounds the number
//! of source sets whose `B(X, Y)` has no 2-factor. `N > S` certifies an
//! anti-directed 2-factor.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("order {0} must be even")]
    OddOrder(u64),
    #[error("delta {delta} out of range 0..{n}")]
    DeltaRange { n: u64, delta: u64 },
    #[error("order {n} below the supported regime (need n >= {min})")]
    TooSmall { n: u64, min: u64 },
    #[error("sum of n_k is {termwise} but C(n, n/2) is {direct}")]
    IdentityMismatch { termwise: BigUint, direct: BigUint },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// `C(n, k)`, zero when `k > n`.
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

/// `C(m, 0), ..., C(m, m)`.
fn binomial_row(m: u64) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut c = BigUint::one();
    row.push(c.clone());
    for i in 0..m {
        c = c * (m - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

fn check(n: u64, delta: u64) -> Result<(), CountError> {
    if n % 2 == 1 {
        return Err(CountError::OddOrder(n));
    }
    if delta >= n {
        return Err(CountError::DeltaRange { n, delta });
    }
    Ok(())
}

/// `n_k = 2 C(delta, k) C(n - delta - 1, n/2 - k)`.
pub fn count_nk(n: u64, delta: u64, k: u64) -> Result<BigUint, CountError> {
    check(n, delta)?;
    if k > n / 2 {
        return Ok(BigUint::zero());
    }
    Ok(binomial(delta, k) * binomial(n - delta - 1, n / 2 - k) * 2u32)
}

/// `n_0, ..., n_{n/2}`.
pub fn terms(n: u64, delta: u64) -> Result<Vec<BigUint>, CountError> {
    check(n, delta)?;
    let a = binomial_row(delta);
    let b = binomial_row(n - delta - 1);
    let h = n / 2;
    Ok((0..=h)
        .map(|k| {
            let ak = a.get(k as usize);
            let bk = b.get((h - k) as usize);
            match (ak, bk) {
                (Some(x), Some(y)) => x * y * 2u32,
                _ => BigUint::zero(),
            }
        })
        .collect())
}

/// `N`, summed termwise and checked against `C(n, n/2)`.
#[allow(non_snake_case)]
pub fn total_N(n: u64, delta: u64) -> Result<BigUint, CountError> {
    let termwise: BigUint = terms(n, delta)?.iter().sum();
    let direct = binomial(n, n / 2);
    if termwise != direct {
        return Err(CountError::IdentityMismatch { termwise, direct });
    }
    Ok(direct)
}

/// Smallest `k` in the sum for `S`: `max(2, delta - n/2 + 1)`.
pub fn s_lower_index(n: u64, delta: u64) -> u64 {
    (delta + 1).saturating_sub(n / 2).max(2)
}

/// Largest `k` in the sum for `S`: `floor(n/4) - 1`.
pub fn s_upper_index(n: u64) -> u64 {
    (n / 4).saturating_sub(1)
}

fn s_sum(n: u64, terms: &[BigUint], strong: bool, delta: u64) -> BigRational {
    let lo = s_lower_index(n, delta);
    let hi = s_upper_index(n);
    let mut sum = BigRational::zero();
    for k in lo..=hi {
        let nk = &terms[k as usize];
        if nk.is_zero() {
            continue;
        }
        let den = if strong && k == hi { 2 * k } else { k };
        sum += Ratio::new(BigInt::from(nk.clone()), BigInt::from(den));
    }
    sum * BigInt::from(n)
}

fn regime(n: u64, delta: u64) -> Result<(), CountError> {
    check(n, delta)?;
    if n < 12 {
        return Err(CountError::TooSmall { n, min: 12 });
    }
    Ok(())
}

/// `S = n (n_2/2 + ... + n_m/m)` with `m = floor(n/4) - 1`, starting the sum
/// at `max(2, delta - n/2 + 1)`.
#[allow(non_snake_case)]
pub fn bound_S(n: u64, delta: u64) -> Result<BigRational, CountError> {
    regime(n, delta)?;
    Ok(s_sum(n, &terms(n, delta)?, false, delta))
}

/// `S'`: as [`bound_S`] with the denominator of the last term doubled.
#[allow(non_snake_case)]
pub fn bound_S_strong(n: u64, delta: u64) -> Result<BigRational, CountError> {
    regime(n, delta)?;
    Ok(s_sum(n, &terms(n, delta)?, true, delta))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: u64,
    pub delta: u64,
    pub total: BigUint,
    pub s: BigRational,
    pub s_strong: BigRational,
    /// Nonzero `n_k` by `k`.
    pub terms: BTreeMap<u64, BigUint>,
    pub holds: bool,
    pub strong_holds: bool,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct CountReportJson {
    n: u64,
    delta: u64,
    N: String,
    S: String,
    S_strong: String,
    terms: BTreeMap<u64, String>,
    holds: bool,
    strong_holds: bool,
}

impl CountReport {
    pub fn to_json(&self, pretty: bool) -> String {
        let json = CountReportJson {
            n: self.n,
            delta: self.delta,
            N: self.total.to_string(),
            S: self.s.to_string(),
            S_strong: self.s_strong.to_string(),
            terms: self.terms.iter().map(|(k, v)| (*k, v.to_string())).collect(),
            holds: self.holds,
            strong_holds: self.strong_holds,
        };
        if pretty {
            serde_json::to_string_pretty(&json)
        } else {
            serde_json::to_string(&json)
        }
        .expect("report serializes")
    }
}

/// Evaluates `N > S` exactly. Below `n = 12` the sum for
/// `S` is empty and `S = 0`.
pub fn verify_count_bound(n: u64, delta: u64) -> Result<CountReport, CountError> {
    let t = terms(n, delta)?;
    let total = total_N(n, delta)?;
    let s = s_sum(n, &t, false, delta);
    let s_strong = s_sum(n, &t, true, delta);
    let big_n = BigRational::from_integer(BigInt::from(total.clone()));
    Ok(CountReport {
        n,
        delta,
        holds: big_n > s,
        strong_holds: big_n > s_strong,
        total,
        s,
        s_strong,
        terms: t
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k as u64, v))
            .collect(),
    })
}

/// Smallest `delta` with `46 delta > 24 n`.
pub fn scan_delta(n: u64) -> u64 {
    24 * n / 46 + 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: u64,
    pub delta: u64,
    pub total: BigUint,
    pub s: BigRational,
    pub holds: bool,
    pub strong_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    /// Rows where `N > S` fails.
    pub fn failures(&self) -> Vec<(u64, u64)> {
        self.rows.iter().filter(|r| !r.holds).map(|r| (r.n, r.delta)).collect()
    }

    /// Rows where `N > S'` fails as well.
    pub fn strong_failures(&self) -> Vec<(u64, u64)> {
        self.rows
            .iter()
            .filter(|r| !r.strong_holds)
            .map(|r| (r.n, r.delta))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,delta,N,S,holds\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{},{}\n", r.n, r.delta, r.total, r.s, r.holds));
        }
        out
    }
}

/// Evaluates `N > S` for every even `12 <= n < n_max` at the
/// smallest `delta` with `46 delta > 24 n`. Rows are ordered by `n`.
pub fn scan_count_bound(n_max: u64) -> ScanReport {
    let ns: Vec<u64> = (12..n_max).step_by(2).collect();
    let rows = ns
        .par_iter()
        .map(|&n| {
            let r = verify_count_bound(n, scan_delta(n)).expect("delta < n for n >= 12");
            ScanRow {
                n,
                delta: r.delta,
                total: r.total,
                s: r.s,
                holds: r.holds,
                strong_holds: r.strong_holds,
            }
        })
        .collect();
    ScanReport { rows }
}

fn rising(x: &BigRational, s: u64) -> BigRational {
    (0..=s).fold(BigRational::one(), |acc, j| acc * (x + BigRational::from_integer(BigInt::from(j))))
}

/// Checks `x(x+1)...(x+s) / (y(y+1)...(y+s)) >= ((x + s/2) / (y + s/2))^2`
/// exactly, for `x >= y > s/2 > 0` and `s` a positive even integer.
pub fn product_inequality_holds(x: &BigRational, y: &BigRational, s: &BigRational) -> Result<bool, CountError> {
    let half = s / BigInt::from(2);
    if !s.is_integer() || !s.is_positive() || !half.is_integer() {
        return Err(CountError::Precondition(format!("s = {s} is not a positive even integer")));
    }
    if x < y || y <= &half {
        return Err(CountError::Precondition(format!("need x >= y > s/2, got x = {x}, y = {y}, s = {s}")));
    }
    let steps = s.to_integer().to_u64().ok_or_else(|| CountError::Precondition("s too large".into()))?;
    let lhs = rising(x, steps) / rising(y, steps);
    let r = (x + &half) / (y + &half);
    Ok(lhs >= &r * &r)
}

/// `A_i = n_{delta/2 + i}`.
#[allow(non_snake_case)]
pub fn ratio_A(n: u64, delta: u64, i: u64) -> Result<BigUint, CountError> {
    count_nk(n, delta, delta / 2 + i)
}

/// `B_i = n_{n/4 - i - 1}`.
#[allow(non_snake_case)]
pub fn ratio_B(n: u64, delta: u64, i: u64) -> Result<BigUint, CountError> {
    match (n / 4).checked_sub(i + 1) {
        Some(k) => count_nk(n, delta, k),
        None => Ok(BigUint::zero()),
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn ratio(a: &BigUint, b: &BigUint) -> BigRational {
    Ratio::new(BigInt::from(a.clone()), BigInt::from(b.clone()))
}

fn ratio_regime(n: u64, delta: u64) -> Result<(), CountError> {
    check(n, delta)?;
    if n % 4 != 0 || delta % 2 != 0 || delta <= n / 2 || n < 8 {
        return Err(CountError::Precondition(format!(
            "need n = 0 mod 4, n >= 8, delta even and delta > n/2, got n = {n}, delta = {delta}"
        )));
    }
    Ok(())
}

/// Outcome of the ratio checks at one `(n, delta, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioCheck {
    /// Product form of `A_{k+1}/A_k` equals the direct quotient.
    pub a_closed_form: bool,
    /// Product form of `B_{k+1}/B_k` equals the direct quotient, or
    /// `B_k = 0` so there is no quotient to compare.
    pub b_closed_form: bool,
    /// The `s = delta - n/2` form of the quotient of the two ratios agrees
    /// with the direct one (vacuous when `B_k = 0` or `B_{k+1} = 0`).
    pub s_form: bool,
    /// `A_{k+1}/A_k >= ((n/4-k-1)/(n/4-k-2)) B_{k+1}/B_k`; vacuous when
    /// `B_k = 0`.
    pub inequality: bool,
}

impl RatioCheck {
    pub fn all(&self) -> bool {
        self.a_closed_form && self.b_closed_form && self.s_form && self.inequality
    }
}

/// Checks the ratio recursion step at `k`: closed forms for
/// `A_{k+1}/A_k` and `B_{k+1}/B_k` against direct binomial quotients, and
/// the step inequality between them.
pub fn ratio_recursion_check(n: u64, delta: u64, k: u64) -> Result<RatioCheck, CountError> {
    ratio_regime(n, delta)?;
    if k + 3 >= n / 4 {
        return Err(CountError::Precondition(format!("need k < n/4 - 3, got k = {k}")));
    }
    let (a0, a1) = (ratio_A(n, delta, k)?, ratio_A(n, delta, k + 1)?);
    let (b0, b1) = (ratio_B(n, delta, k)?, ratio_B(n, delta, k + 1)?);
    let (ni, di, ki) = (n as i64, delta as i64, k as i64);
    let m = ni / 4;
    let s = di - ni / 2;

    if b0.is_zero() {
        // A_k = 0 forces B_k = 0, so both quotients may be undefined here.
        let a_closed_form = a0.is_zero() || a_quotient(&a0, &a1, ni, di, ki);
        return Ok(RatioCheck {
            a_closed_form,
            b_closed_form: true,
            s_form: true,
            inequality: true,
        });
    }
    let a_direct = ratio(&a1, &a0);
    let a_closed_form = a_quotient(&a0, &a1, ni, di, ki);
    let step = q(m - ki - 1) / q(m - ki - 2);
    let b_direct = ratio(&b1, &b0);
    let b_closed = q((m - ki - 1) * (3 * m - di - ki - 2)) / q((di - m + ki + 2) * (m + ki + 2));
    let b_closed_form = b_direct == b_closed;

    let s_form = if b1.is_zero() {
        true
    } else {
        // Rewritten with delta = n/2 + s; here s is even.
        let num = q((2 * m + s - 2 * ki) * (2 * m - s - 2 * ki) * (m + s + ki + 2) * (m + ki + 2));
        let den = q((m - ki - 1) * (m - s - ki - 2) * (2 * m + s + 2 * ki + 2) * (2 * m - s + 2 * ki));
        &a_direct / &b_direct == num / den
    };
    Ok(RatioCheck {
        a_closed_form,
        b_closed_form,
        s_form,
        inequality: a_direct >= step * b_direct,
    })
}

fn a_quotient(a0: &BigUint, a1: &BigUint, n: i64, d: i64, k: i64) -> bool {
    let closed = q((d / 2 - k) * (n / 2 - d / 2 - k)) / q((d / 2 + k + 1) * (n / 2 - d / 2 + k));
    ratio(a1, a0) == closed
}

/// Base of the recursion: `A_0 (n/4 - 1) > n B_0`.
pub fn ratio_base_case(n: u64, delta: u64) -> Result<bool, CountError> {
    ratio_regime(n, delta)?;
    let a0 = ratio_A(n, delta, 0)?;
    let b0 = ratio_B(n, delta, 0)?;
    Ok(a0 * (n / 4 - 1) > b0 * n)
}
