//! Integer and rational primitives: reduction, factorization, exact roots,
//! the common-base decomposition of `x^a = y^b`, and exact orderings of
//! self-powers `t^t` against rationals and against real roots `(r/s)^(1/d)`.

mod enclosure;
mod factor;
mod root;

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Config, Error, Result};

pub use enclosure::{ln_enclosure, Enclosure};
pub use factor::{factorize, is_prime, padic_valuation, Factorization};
pub(crate) use factor::valuation_unchecked;
pub use root::{integer_kth_root, is_perfect_power};

pub type Natural = BigUint;
pub type Integer = BigInt;
pub type Rational = BigRational;

/// Largest working precision, in bits, for certified logarithm comparisons.
const MAX_ENCLOSURE_SCALE: u32 = 1 << 14;

/// The reduced fraction `p/q` with positive denominator.
pub fn reduce(p: &BigInt, q: &BigInt) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::domain("zero denominator"));
    }
    Ok(BigRational::new(p.clone(), q.clone()))
}

/// `(numerator, denominator)` of a positive rational.
pub fn positive_parts(x: &Rational) -> Result<(BigUint, BigUint)> {
    if !x.is_positive() {
        return Err(Error::domain(format!("{x} is not positive")));
    }
    Ok((x.numer().magnitude().clone(), x.denom().magnitude().clone()))
}

pub(crate) fn natural_to_u64(n: &BigUint, what: &str) -> Result<u64> {
    n.to_u64()
        .ok_or_else(|| Error::resource(format!("{what} = {n} does not fit in 64 bits")))
}

pub(crate) fn rational(n: BigUint, d: BigUint) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Upper bound on the bit length of `base^exp`.
fn pow_bits(base: &BigUint, exp: u64) -> u128 {
    base.bits() as u128 * exp as u128
}

fn ensure_bits(bits: u128, cfg: &Config, what: &str) -> Result<()> {
    if bits == u128::MAX {
        return Err(Error::resource(format!("{what} has an exponent beyond 64 bits")));
    }
    if bits > cfg.bit_cap as u128 {
        return Err(Error::resource(format!(
            "{what} needs about {bits} bits, above the cap of {}",
            cfg.bit_cap
        )));
    }
    Ok(())
}

/// `base^exp`, refusing results above the bit cap.
pub fn checked_pow(base: &BigUint, exp: u64, cfg: &Config) -> Result<BigUint> {
    ensure_bits(pow_bits(base, exp), cfg, "power")?;
    Ok(pow_u64(base, exp))
}

pub(crate) fn pow_u64(base: &BigUint, exp: u64) -> BigUint {
    if base.is_zero() || base.is_one() {
        return if exp == 0 { BigUint::one() } else { base.clone() };
    }
    let e = u32::try_from(exp).expect("exponent bounded by the bit cap");
    base.pow(e)
}

/// Decides `x^e1 == y^e2` for `x, y >= 1` and `e1, e2 >= 1`.
///
/// Cancels `gcd(e1, e2)` from the exponents, after which equality holds iff
/// `x = λ^e2'` and `y = λ^e1'` for a common base `λ`. Nothing larger than
/// about twice the inputs is ever built, whatever the exponents.
pub fn pow_eq(x: &BigUint, e1: &BigUint, y: &BigUint, e2: &BigUint) -> bool {
    debug_assert!(!x.is_zero() && !y.is_zero() && !e1.is_zero() && !e2.is_zero());
    if x.is_one() || y.is_one() {
        return x.is_one() && y.is_one();
    }
    let g = e1.gcd(e2);
    let (e1, e2) = (e1 / &g, e2 / &g);
    // x >= 2 needs e2 < bits(x) to be a perfect e2-th power.
    let Some(k) = e2.to_u64().filter(|&k| k < x.bits() || k == 1) else {
        return false;
    };
    let Some(lambda) = integer_kth_root(x, k) else {
        return false;
    };
    // bits(λ^e1) >= (bits(λ) - 1) * e1 + 1 with λ >= 2.
    let min_bits = BigUint::from(lambda.bits() - 1) * &e1 + 1u32;
    if min_bits > BigUint::from(y.bits()) {
        return false;
    }
    let e1 = e1.to_u64().expect("e1 <= bits(y)");
    pow_u64(&lambda, e1) == *y
}

/// The common base `λ` with `λ^b = x` and `λ^a = y`, given `x^a = y^b` and
/// `gcd(a, b) = 1`.
pub fn lambda_decompose(x: &BigUint, y: &BigUint, a: &BigUint, b: &BigUint) -> Result<BigUint> {
    if x.is_zero() || y.is_zero() || a.is_zero() || b.is_zero() {
        return Err(Error::domain("x, y, a, b must all be at least 1"));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::domain(format!("gcd({a}, {b}) != 1")));
    }
    if !pow_eq(x, a, y, b) {
        return Err(Error::Precondition(format!("{x}^{a} != {y}^{b}")));
    }
    let k = natural_to_u64(b, "b")?;
    let lambda = integer_kth_root(x, k)
        .expect("x^a = y^b with coprime a, b makes x a perfect b-th power");
    debug_assert!(pow_eq(&lambda, a, y, &BigUint::one()));
    Ok(lambda)
}

/// Exact ordering of `t^t` against `q`, both positive.
///
/// With `t = a/b` and `q = m/n` reduced, `t^t` vs `q` is decided as the
/// integer comparison `a^a·n^b` vs `b^a·m^b`.
pub fn cmp_pow_xx(t: &Rational, q: &Rational, cfg: &Config) -> Result<Ordering> {
    let (m, n) = positive_parts(q)?;
    cmp_pow_xx_vs_root(t, 1, &m, &n, cfg)
}

/// Exact ordering of `t^t` against the positive real `(r/s)^(1/d)`.
///
/// Decided as `a^(ad)·s^b` vs `b^(ad)·r^b` with `t = a/b`.
pub fn cmp_pow_xx_vs_root(
    t: &Rational,
    d: u64,
    r: &BigUint,
    s: &BigUint,
    cfg: &Config,
) -> Result<Ordering> {
    let forms = CrossForm::new(t, d, r, s)?;
    ensure_bits(forms.bits(), cfg, "self-power comparison")?;
    Ok(forms.exact())
}

/// [`cmp_pow_xx_vs_root`] that falls back to certified logarithm enclosures
/// when the integer cross form would exceed the bit cap.
///
/// The fallback compares `d·a·ln(a/b)` with `b·ln(r/s)`, doubling the working
/// precision until the enclosure excludes zero. It cannot separate equal
/// values, so an exact tie beyond the cap is reported as a resource error.
pub fn cmp_pow_xx_vs_root_certified(
    t: &Rational,
    d: u64,
    r: &BigUint,
    s: &BigUint,
    cfg: &Config,
) -> Result<Ordering> {
    let forms = CrossForm::new(t, d, r, s)?;
    if forms.bits() <= cfg.bit_cap as u128 {
        return Ok(forms.exact());
    }
    let weight_t = BigInt::from(d) * BigInt::from(forms.a.clone());
    let weight_q = BigInt::from(forms.b.clone());
    let q = rational(r.clone(), s.clone());
    let mut scale = 64;
    while scale <= MAX_ENCLOSURE_SCALE {
        if let Some(ord) = enclosure::weighted_log_sign(&weight_t, t, &weight_q, &q, scale)? {
            return Ok(ord);
        }
        scale *= 2;
    }
    Err(Error::resource(format!(
        "could not separate {t}^{t} from ({r}/{s})^(1/{d}) at {MAX_ENCLOSURE_SCALE} bits"
    )))
}

/// [`cmp_pow_xx`] with the certified fallback.
pub fn cmp_pow_xx_certified(t: &Rational, q: &Rational, cfg: &Config) -> Result<Ordering> {
    let (m, n) = positive_parts(q)?;
    cmp_pow_xx_vs_root_certified(t, 1, &m, &n, cfg)
}

/// Operands of the cross form `a^(ad)·s^b` vs `b^(ad)·r^b`.
struct CrossForm<'a> {
    a: BigUint,
    b: BigUint,
    ad: Option<u64>,
    b_exp: Option<u64>,
    r: &'a BigUint,
    s: &'a BigUint,
}

impl<'a> CrossForm<'a> {
    fn new(t: &Rational, d: u64, r: &'a BigUint, s: &'a BigUint) -> Result<Self> {
        let (a, b) = positive_parts(t)?;
        if d == 0 {
            return Err(Error::domain("root degree must be at least 1"));
        }
        if r.is_zero() || s.is_zero() {
            return Err(Error::domain("r and s must be at least 1"));
        }
        if !r.gcd(s).is_one() {
            return Err(Error::domain(format!("gcd({r}, {s}) != 1")));
        }
        // Exponents past 64 bits leave the cross form uncomputable; only the
        // logarithmic fallback can handle them.
        let ad = a.to_u64().and_then(|a| a.checked_mul(d));
        let b_exp = b.to_u64();
        Ok(CrossForm { a, b, ad, b_exp, r, s })
    }

    fn bits(&self) -> u128 {
        let (Some(ad), Some(b_exp)) = (self.ad, self.b_exp) else {
            return u128::MAX;
        };
        let lhs = pow_bits(&self.a, ad) + pow_bits(self.s, b_exp);
        let rhs = pow_bits(&self.b, ad) + pow_bits(self.r, b_exp);
        lhs.max(rhs)
    }

    fn exact(&self) -> Ordering {
        let (ad, b_exp) = (self.ad.expect("bounded form"), self.b_exp.expect("bounded form"));
        let lhs = pow_u64(&self.a, ad) * pow_u64(self.s, b_exp);
        let rhs = pow_u64(&self.b, ad) * pow_u64(self.r, b_exp);
        lhs.cmp(&rhs)
    }
}

/// Exact test of `t^t = (r/s)^(1/d)` for reduced `t = a/b`, `gcd(r, s) = 1`.
///
/// Both sides are reduced fractions after raising to the power `b·d`, so the
/// equation splits into `a^(ad) = r^b` and `b^(ad) = s^b`, each decided by
/// [`pow_eq`] without forming the powers.
pub fn self_power_equals_root(t: &Rational, d: u64, r: &BigUint, s: &BigUint) -> Result<bool> {
    let (a, b) = positive_parts(t)?;
    if d == 0 || r.is_zero() || s.is_zero() {
        return Err(Error::domain("degree, r and s must be at least 1"));
    }
    let ad = &a * BigUint::from(d);
    Ok(pow_eq(&a, &ad, r, &b) && pow_eq(&b, &ad, s, &b))
}

/// Exact test of `t^t = q` for positive rationals.
pub fn self_power_equals(t: &Rational, q: &Rational) -> Result<bool> {
    let (m, n) = positive_parts(q)?;
    self_power_equals_root(t, 1, &m, &n)
}
