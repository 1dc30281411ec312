use num_bigint::BigUint;
use num_traits::One;
use std::cmp::Ordering;

/// Exact integer `k`-th root: `Some(m)` iff `m^k == n`.
///
/// Binary search over the bracket `[2^⌊(bits-1)/k⌋, 2^⌈bits/k⌉]`, which always
/// holds the floor root.
///
/// # Panics
///
/// If `k == 0`.
pub fn integer_kth_root(n: &BigUint, k: u64) -> Option<BigUint> {
    assert!(k >= 1, "root index must be at least 1");
    if k == 1 || n <= &BigUint::one() {
        return Some(n.clone());
    }
    let bits = n.bits();
    if k >= bits {
        // 2^k > n, and 1^k = 1 < n.
        return None;
    }
    let k32 = u32::try_from(k).expect("k < bits(n) fits in u32");
    let mut lo = BigUint::one() << ((bits - 1) / k);
    let mut hi = BigUint::one() << bits.div_ceil(k);
    // Invariant: lo^k <= n < hi^k.
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1u32;
        match mid.pow(k32).cmp(n) {
            Ordering::Equal => return Some(mid),
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
        }
    }
    (lo.pow(k32) == *n).then_some(lo)
}

/// Whether `n` is a perfect `k`-th power.
pub fn is_perfect_power(n: &BigUint, k: u64) -> bool {
    integer_kth_root(n, k).is_some()
}
