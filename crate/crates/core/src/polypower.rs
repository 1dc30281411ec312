//! When is `x^P(x)` rational, for rational `x > 0` and an integer polynomial `P`?
//!
//! A rational `x = a/b` with `b >= 2` can only work when `b` is small
//! relative to the leading coefficient `A` of `P`: `b = 1` if `|A| = 1`, and
//! `b < 3|A|·log₂|A|` otherwise.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, integer_kth_root, natural_to_u64, positive_parts, rational, Rational};
use crate::minpoly::IntPolynomial;
use crate::{Config, Error, Result};

/// Outcome of [`self_poly_power`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityVerdict {
    /// `x^P(x)` when it is rational.
    pub rational: Option<Rational>,
    /// `P(x)`, reduced.
    pub exponent: Rational,
}

/// One rational hit of an enumeration: `x^P(x) = value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerHit {
    pub x: Rational,
    pub value: Rational,
}

/// `P(x)` exactly.
///
/// Evaluated in cleared form `b^d·P(a/b) = Σ c_i a^i b^(d-i)`, so the
/// denominator of the result divides `b^d`.
pub fn eval_poly(p: &IntPolynomial, x: &Rational) -> Rational {
    let a = x.numer();
    let b = x.denom();
    let mut acc = BigInt::zero();
    let mut b_pow = BigInt::one();
    // Horner from the top, multiplying the lower terms by b as we go.
    for c in p.coeffs().iter().rev() {
        acc = acc * a + c * &b_pow;
        b_pow *= b;
    }
    let d = u32::try_from(p.degree()).expect("degree fits in u32");
    Rational::new(acc, b.pow(d))
}

/// `base^exp` when it is rational.
///
/// With `base = u/v` and `exp = p/q` reduced, the power is rational iff `u`
/// and `v` are both perfect `q`-th powers.
pub fn rational_power(base: &Rational, exp: &Rational, cfg: &Config) -> Result<Option<Rational>> {
    let (u, v) = positive_parts(base)?;
    if exp.is_zero() {
        return Ok(Some(Rational::one()));
    }
    let q = exp.denom().magnitude();
    let Some(q) = q.to_u64() else {
        // A root of index beyond 64 bits exists only for u = v = 1.
        return Ok((u.is_one() && v.is_one()).then(Rational::one));
    };
    let (Some(ru), Some(rv)) = (integer_kth_root(&u, q), integer_kth_root(&v, q)) else {
        return Ok(None);
    };
    let p_abs = exp.numer().magnitude();
    let value = if ru.is_one() && rv.is_one() {
        Rational::one()
    } else {
        let p = natural_to_u64(p_abs, "exponent numerator")?;
        rational(arith::checked_pow(&ru, p, cfg)?, arith::checked_pow(&rv, p, cfg)?)
    };
    Ok(Some(if exp.is_negative() { value.recip() } else { value }))
}

/// Whether `x^P(x)` is rational, and its value if so.
pub fn self_poly_power(p: &IntPolynomial, x: &Rational, cfg: &Config) -> Result<RationalityVerdict> {
    if p.is_constant() {
        return Err(Error::domain("P must be non-constant"));
    }
    positive_parts(x)?;
    let exponent = eval_poly(p, x);
    let rational = rational_power(x, &exponent, cfg)?;
    Ok(RationalityVerdict { rational, exponent })
}

/// Largest denominator `b` for which `x^P(x)` can be rational, given the
/// leading coefficient `A` of `P`: 1 when `|A| = 1`, otherwise the largest
/// integer strictly below `3|A|·log₂|A|`.
pub fn polypower_denominator_bound(leading: &BigInt) -> Result<u64> {
    if leading.is_zero() {
        return Err(Error::domain("leading coefficient must be nonzero"));
    }
    let a = leading.magnitude();
    if a.is_one() {
        return Ok(1);
    }
    let bound_err = || Error::resource(format!("denominator bound for |A| = {a} overflows"));
    if a.count_ones() == 1 {
        // |A| = 2^k makes the bound the integer 3·2^k·k exactly.
        let k = a.bits() - 1;
        let v = a.to_u64().ok_or_else(bound_err)?;
        return (3u64)
            .checked_mul(v)
            .and_then(|x| x.checked_mul(k))
            .map(|x| x - 1)
            .ok_or_else(bound_err);
    }
    let af = a.to_f64().filter(|f| *f < 2f64.powi(50)).ok_or_else(bound_err)?;
    // log₂|A| is irrational here; rounding up only over-scans.
    let v = 3.0 * af * af.log2() * (1.0 + 8.0 * f64::EPSILON);
    Ok(v.floor() as u64)
}

/// Denominator bound for the special case `P(a/b) = 0`: `b <= |A|`.
pub fn zero_exponent_denominator_bound(leading: &BigInt) -> BigUint {
    leading.magnitude().clone()
}

/// Every `a/b` with `1 <= a <= a_max`, `2 <= b <= bound(A)`, for which
/// `(a/b)^P(a/b)` is rational, sorted by `(b, a)`.
pub fn enumerate_rational_powers(p: &IntPolynomial, a_max: u64, cfg: &Config) -> Result<Vec<PowerHit>> {
    let bound = polypower_denominator_bound(p.leading())?;
    let hits = sweep_rational_powers(p, a_max, bound, cfg)?;
    debug_assert!(bound_violations(&hits, bound).is_empty());
    Ok(hits)
}

/// [`enumerate_rational_powers`] with an explicit denominator ceiling, for
/// probing beyond the bound.
pub fn sweep_rational_powers(
    p: &IntPolynomial,
    a_max: u64,
    b_max: u64,
    cfg: &Config,
) -> Result<Vec<PowerHit>> {
    if p.is_constant() {
        return Err(Error::domain("P must be non-constant"));
    }
    if a_max == 0 {
        return Err(Error::domain("a_max must be at least 1"));
    }
    let mut hits = Vec::new();
    for b in 2..=b_max {
        for a in 1..=a_max {
            if a.gcd(&b) != 1 {
                continue;
            }
            let x = rational(BigUint::from(a), BigUint::from(b));
            if let Some(value) = self_poly_power(p, &x, cfg)?.rational {
                hits.push(PowerHit { x, value });
            }
        }
    }
    Ok(hits)
}

/// Hits whose denominator exceeds `bound`.
pub fn bound_violations(hits: &[PowerHit], bound: u64) -> Vec<&PowerHit> {
    hits.iter()
        .filter(|h| h.x.denom() > &BigInt::from(bound))
        .collect()
}
