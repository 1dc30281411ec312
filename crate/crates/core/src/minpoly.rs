//! Integer polynomials, the binomial shape `sX^d - r`, and the closed-form
//! minimal polynomial of a self-power `(a/b)^(a/b)`.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, factorize, is_perfect_power, natural_to_u64};
use crate::{Config, Error, Result};

/// Polynomial with integer coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are dropped; the zero polynomial is rejected.
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::domain("the zero polynomial has no degree"));
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("non-empty")
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders in the expression grammar accepted by [`crate::parse::parse_polynomial`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `sX^d - r` with `r, s >= 1`, `d >= 1` and `gcd(r, s) = 1`.
///
/// Its unique positive real root is `(r/s)^(1/d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinomialMinPoly {
    s: BigUint,
    d: u64,
    r: BigUint,
}

impl BinomialMinPoly {
    pub fn new(s: BigUint, d: u64, r: BigUint) -> Result<Self> {
        if s.is_zero() || r.is_zero() || d == 0 {
            return Err(Error::domain("s, d and r must all be at least 1"));
        }
        if !r.gcd(&s).is_one() {
            return Err(Error::domain(format!("gcd(r, s) = gcd({r}, {s}) != 1")));
        }
        Ok(BinomialMinPoly { s, d, r })
    }

    pub fn s(&self) -> &BigUint {
        &self.s
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn r(&self) -> &BigUint {
        &self.r
    }

    /// Leading coefficient one.
    pub fn is_monic(&self) -> bool {
        self.s.is_one()
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        let d = usize::try_from(self.d).expect("degree fits in memory");
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = -BigInt::from(self.r.clone());
        coeffs[d] = BigInt::from(self.s.clone());
        IntPolynomial { coeffs }
    }
}

impl fmt::Display for BinomialMinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = if self.s.is_one() {
            String::new()
        } else {
            format!("{}*", self.s)
        };
        match self.d {
            1 => write!(f, "{lead}x - {}", self.r),
            d => write!(f, "{lead}x^{d} - {}", self.r),
        }
    }
}

/// `g = gcd(b, α_1, …, α_s, β_1, …, β_t)` over the prime exponents of `a`
/// and `b`, together with both factorizations.
fn exponent_gcd(
    a: &BigUint,
    b: &BigUint,
    cfg: &Config,
) -> Result<(u64, arith::Factorization, arith::Factorization)> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::domain("a and b must be at least 1"));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::domain(format!("gcd({a}, {b}) != 1")));
    }
    let b64 = natural_to_u64(b, "denominator")?;
    let fa = factorize(a, cfg)?;
    let fb = factorize(b, cfg)?;
    let g = fa
        .exponents()
        .chain(fb.exponents())
        .fold(b64, |g, e| g.gcd(&e));
    Ok((g, fa, fb))
}

/// `∏ p^(e·num/g)` where `g` divides every exponent `e`.
fn scaled_power(f: &arith::Factorization, num: u64, g: u64, cfg: &Config) -> Result<BigUint> {
    let mut out = BigUint::one();
    for (p, e) in f.iter() {
        let exp = (e / g)
            .checked_mul(num)
            .ok_or_else(|| Error::resource("exponent overflows 64 bits"))?;
        out *= arith::checked_pow(p, exp, cfg)?;
    }
    arith::checked_pow(&out, 1, cfg)
}

/// Minimal polynomial of `(a/b)^(a/b)` over the integers:
/// `b^(a/g) X^(b/g) - a^(a/g)`.
///
/// The exponent `a/g` is fractional when `g > 1`; the powers are assembled
/// prime by prime, where `g` divides every exponent.
pub fn minimal_polynomial_of_self_power(
    a: &BigUint,
    b: &BigUint,
    cfg: &Config,
) -> Result<BinomialMinPoly> {
    let (g, fa, fb) = exponent_gcd(a, b, cfg)?;
    let a64 = natural_to_u64(a, "numerator")?;
    let b64 = natural_to_u64(b, "denominator")?;
    let s = scaled_power(&fb, a64, g, cfg)?;
    let r = scaled_power(&fa, a64, g, cfg)?;
    BinomialMinPoly::new(s, b64 / g, r)
}

/// Degree of `(a/b)^(a/b)`, namely `b/g`.
pub fn degree_of_self_power(a: &BigUint, b: &BigUint, cfg: &Config) -> Result<u64> {
    let (g, _, _) = exponent_gcd(a, b, cfg)?;
    Ok(natural_to_u64(b, "denominator")? / g)
}

/// Reads `P` as `sX^d - r` after making the leading coefficient positive.
///
/// `None` when `P` has other nonzero terms, a non-negative constant term, or
/// content other than one.
pub fn as_binomial(p: &IntPolynomial) -> Option<BinomialMinPoly> {
    if p.is_constant() {
        return None;
    }
    let flip = p.leading().sign() == Sign::Minus;
    let coeff = |c: &BigInt| if flip { -c } else { c.clone() };
    let coeffs = p.coeffs();
    if coeffs[1..coeffs.len() - 1].iter().any(|c| !c.is_zero()) {
        return None;
    }
    let s = coeff(p.leading());
    let neg_r = coeff(&coeffs[0]);
    if !neg_r.is_negative() {
        return None;
    }
    let (s, r) = (s.magnitude().clone(), neg_r.magnitude().clone());
    if !s.gcd(&r).is_one() {
        return None;
    }
    BinomialMinPoly::new(s, p.degree() as u64, r).ok()
}

/// Whether `sX^d - r` is irreducible over the rationals.
///
/// For positive `r` and `s` this holds iff, for every prime `p | d`, `r` and
/// `s` are not both perfect `p`-th powers.
pub fn is_irreducible_binomial(poly: &BinomialMinPoly, cfg: &Config) -> Result<bool> {
    let fd = factorize(&BigUint::from(poly.d), cfg)?;
    for p in fd.primes() {
        let p = natural_to_u64(p, "prime")?;
        if is_perfect_power(&poly.r, p) && is_perfect_power(&poly.s, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn bin(s: u64, d: u64, r: u64) -> BinomialMinPoly {
        BinomialMinPoly::new(n(s), d, n(r)).unwrap()
    }

    #[test]
    fn listed_minimal_polynomials() {
        let cfg = Config::default();
        let mp = |a, b| minimal_polynomial_of_self_power(&n(a), &n(b), &cfg).unwrap();
        assert_eq!(mp(1, 2), bin(2, 2, 1));
        assert_eq!(mp(1, 1), bin(1, 1, 1));
        assert_eq!(mp(2, 3), bin(9, 3, 4));
        assert_eq!(mp(8, 27), bin(6561, 9, 256));
        assert!(matches!(
            minimal_polynomial_of_self_power(&n(2), &n(4), &cfg),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn listed_degrees() {
        let cfg = Config::default();
        let deg = |a, b| degree_of_self_power(&n(a), &n(b), &cfg).unwrap();
        assert_eq!(deg(1, 2), 2);
        assert_eq!(deg(5, 1), 1);
        assert_eq!(deg(8, 27), 9);
    }

    #[test]
    fn binomial_recognition() {
        let p = |c: &[i64]| IntPolynomial::from_i64s(c).unwrap();
        assert_eq!(as_binomial(&p(&[-1, 0, 2])), Some(bin(2, 2, 1)));
        assert_eq!(as_binomial(&p(&[1, 0, -2])), Some(bin(2, 2, 1)));
        assert_eq!(as_binomial(&p(&[1, 0, 1])), None);
        assert_eq!(as_binomial(&p(&[-2, 0, 4])), None);
        assert_eq!(as_binomial(&p(&[-1, 1, 2])), None);
        assert_eq!(as_binomial(&p(&[0, 3])), None);
        assert_eq!(as_binomial(&p(&[5])), None);
    }

    #[test]
    fn irreducibility() {
        let cfg = Config::default();
        assert!(is_irreducible_binomial(&bin(2, 2, 1), &cfg).unwrap());
        assert!(!is_irreducible_binomial(&bin(1, 2, 4), &cfg).unwrap());
        assert!(is_irreducible_binomial(&bin(6561, 9, 256), &cfg).unwrap());
        assert!(!is_irreducible_binomial(&bin(8, 6, 27), &cfg).unwrap());
        assert!(is_irreducible_binomial(&bin(3, 1, 7), &cfg).unwrap());
    }

    #[test]
    fn display_forms() {
        assert_eq!(bin(9, 3, 4).to_string(), "9*x^3 - 4");
        assert_eq!(bin(1, 1, 5).to_string(), "x - 5");
        let p = IntPolynomial::from_i64s(&[-4, 0, -1, 9]).unwrap();
        assert_eq!(p.to_string(), "9*x^3 - x^2 - 4");
        let p = IntPolynomial::from_i64s(&[0, -1]).unwrap();
        assert_eq!(p.to_string(), "-x");
        assert_eq!(bin(2, 2, 1).to_polynomial().coeffs(), &[-1, 0, 2].map(BigInt::from));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(IntPolynomial::from_i64s(&[0, 0]).is_err());
        assert_eq!(IntPolynomial::from_i64s(&[3, 0, 0]).unwrap().degree(), 0);
    }
}
