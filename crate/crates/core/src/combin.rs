//! Fixed-size subset enumeration by rank.
//!
//! Subsets of `0..n` with `k` members are identified with `u64` masks and
//! ranked in colexicographic order, which is also increasing numeric order
//! of the masks. Rank `r` corresponds to the unique representation
//! `r = C(c_k, k) + ... + C(c_1, 1)` with `c_k > ... > c_1 >= 0`.

/// `C(n, k)` in `u64`; `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// The `rank`-th `k`-subset of `0..n` in colex order.
pub fn unrank(n: usize, k: usize, mut rank: u64) -> u64 {
    let mut mask = 0u64;
    let mut top = n;
    for j in (1..=k).rev() {
        // largest c < top with C(c, j) <= rank
        let mut c = top - 1;
        loop {
            let b = binomial_u64(c as u64, j as u64).expect("ranks fit in u64");
            if b <= rank {
                rank -= b;
                break;
            }
            c -= 1;
        }
        mask |= 1 << c;
        top = c;
    }
    mask
}

/// Next mask with the same popcount (Gosper's hack). Callers stop after the
/// known number of subsets.
pub fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    (((r ^ x) >> 2) / c) | r
}
