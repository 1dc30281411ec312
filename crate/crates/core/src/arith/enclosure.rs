//! Rigorous fixed-point enclosures of natural logarithms of rationals.
//!
//! Used when an exact integer comparison of self-powers would exceed the bit
//! cap. The enclosure is proven, so the sign decisions drawn from it are exact.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `lo / 2^scale <= value <= hi / 2^scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: BigInt,
    pub hi: BigInt,
    pub scale: u32,
}

impl Enclosure {
    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        let scaled = v * BigRational::from_integer(BigInt::one() << self.scale);
        BigRational::from_integer(self.lo.clone()) <= scaled
            && scaled <= BigRational::from_integer(self.hi.clone())
    }
}

fn pow2(e: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << e)
}

/// Bounds on `atanh(z)` for `|z| <= 1/2`, each within `2^-(prec)` of the value.
fn atanh_bounds(z: &BigRational, prec: u32) -> (BigRational, BigRational) {
    if z.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let eps = BigRational::one() / pow2(prec);
    let z2 = z * z;
    let one_minus_z2 = BigRational::one() - &z2;
    let mut sum = BigRational::zero();
    let mut power = z.clone();
    let mut j: u64 = 0;
    loop {
        sum += &power / BigRational::from_integer(BigInt::from(2 * j + 1));
        power *= &z2;
        // Remaining terms are bounded by a geometric series in z^2.
        let tail = power.abs() / (BigRational::from_integer(BigInt::from(2 * j + 3)) * &one_minus_z2);
        if tail < eps {
            return (&sum - &tail, &sum + &tail);
        }
        j += 1;
    }
}

/// Enclosure of `ln x` at `2^-scale` resolution (plus a few ulps of slack).
pub fn ln_enclosure(x: &BigRational, scale: u32) -> Result<Enclosure> {
    if !x.is_positive() {
        return Err(Error::domain("logarithm of a non-positive number"));
    }
    let u: BigUint = x.numer().magnitude().clone();
    let v: BigUint = x.denom().magnitude().clone();
    // x = 2^k * m with m in (1/2, 2).
    let k = u.bits() as i64 - v.bits() as i64;
    let (mu, mv) = if k >= 0 {
        (u, v << (k as u64))
    } else {
        (u << ((-k) as u64), v)
    };
    let (mu, mv) = (BigInt::from(mu), BigInt::from(mv));
    let z = BigRational::new(&mu - &mv, &mu + &mv);

    let k_bits = (k.unsigned_abs().max(1)).ilog2() + 1;
    let prec = scale + 4 + k_bits;
    let (zlo, zhi) = atanh_bounds(&z, prec);
    let two = BigRational::from_integer(BigInt::from(2));
    let mut lo = &two * zlo;
    let mut hi = &two * zhi;
    if k != 0 {
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        let (alo, ahi) = atanh_bounds(&third, prec);
        let kr = BigRational::from_integer(BigInt::from(k));
        let (l2lo, l2hi) = (&two * alo, &two * ahi);
        if k > 0 {
            lo += &kr * l2lo;
            hi += &kr * l2hi;
        } else {
            lo += &kr * l2hi;
            hi += &kr * l2lo;
        }
    }
    let s = pow2(scale);
    Ok(Enclosure {
        lo: (lo * &s).floor().to_integer(),
        hi: (hi * &s).ceil().to_integer(),
        scale,
    })
}

/// Sign of `weight_a * ln(x) - weight_b * ln(y)` when the enclosures at
/// `scale` separate it from zero.
pub(crate) fn weighted_log_sign(
    weight_a: &BigInt,
    x: &BigRational,
    weight_b: &BigInt,
    y: &BigRational,
    scale: u32,
) -> Result<Option<std::cmp::Ordering>> {
    use std::cmp::Ordering;
    debug_assert!(!weight_a.is_negative() && !weight_b.is_negative());
    let ex = ln_enclosure(x, scale)?;
    let ey = ln_enclosure(y, scale)?;
    let lo = weight_a * &ex.lo - weight_b * &ey.hi;
    let hi = weight_a * &ex.hi - weight_b * &ey.lo;
    Ok(if lo.is_positive() {
        Some(Ordering::Greater)
    } else if hi.is_negative() {
        Some(Ordering::Less)
    } else if lo.is_zero() && hi.is_zero() {
        Some(Ordering::Equal)
    } else {
        None
    })
}
