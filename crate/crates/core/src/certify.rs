//! Transcendence certificates for the real solution of `x^x = q`, `q > 1`.
//!
//! If no integer `n` has `n^n = q`, the unique real `x > 1` with `x^x = q` is
//! not an integer, and a non-integer rational `x` never has a rational `x^x`.
//! So `x` is irrational, and the Gelfond–Schneider theorem (assumed, not
//! verified here) makes it transcendental. This module verifies the
//! decidable premises and isolates `x` in a rational interval.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use crate::arith::{cmp_pow_xx, cmp_pow_xx_certified, Rational};
use crate::{Config, Error, Result};

/// Bisection halvings allowed before giving up.
const MAX_BISECTION_STEPS: u32 = 4096;

/// Evidence that the real solution of `x^x = q` is transcendental.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub q: Rational,
    /// `(n, ordering of n^n against q)` for `n = 1, …, N`; none is `Equal`.
    pub integer_scan_trace: Vec<(u64, Ordering)>,
    /// `lo^lo < q < hi^hi`, `1 <= lo < hi`.
    pub interval: (Rational, Rational),
    pub statement: String,
}

/// Result of [`classify_preimage`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preimage {
    /// `n^n = q`.
    Integer(BigUint),
    Transcendental(Box<Certificate>),
}

fn require_above_one(q: &Rational) -> Result<()> {
    if q <= &Rational::one() {
        return Err(Error::Unsupported(format!(
            "certificates cover q > 1 only, got {q}"
        )));
    }
    Ok(())
}

/// `n = 1, 2, …` until `n^n >= q`, with each ordering.
fn scan_trace(q: &Rational, cfg: &Config) -> Result<Vec<(u64, Ordering)>> {
    let mut trace = Vec::new();
    for n in 1u64.. {
        let ord = cmp_pow_xx(&Rational::from_integer(n.into()), q, cfg)?;
        trace.push((n, ord));
        if ord != Ordering::Less {
            break;
        }
    }
    Ok(trace)
}

/// Returns `n` when `n^n = q`, otherwise a transcendence certificate whose
/// interval has width at most [`Config::bisect_width`].
pub fn classify_preimage(q: &Rational, cfg: &Config) -> Result<Preimage> {
    require_above_one(q)?;
    let trace = scan_trace(q, cfg)?;
    let &(last, ord) = trace.last().expect("scan tests at least n = 1");
    if ord == Ordering::Equal {
        return Ok(Preimage::Integer(BigUint::from(last)));
    }
    let interval = bisect_from(q, &cfg.bisect_width, cfg)?;
    let statement = format!(
        "The unique real x > 1 with x^x = {q} lies in ({lo}, {hi}). No integer n has n^n = {q} \
         (scan up to n = {last}), and a non-integer rational x never has rational x^x, so x is \
         irrational; by the Gelfond-Schneider theorem (assumed) x is transcendental.",
        lo = interval.0,
        hi = interval.1,
    );
    Ok(Preimage::Transcendental(Box::new(Certificate {
        q: q.clone(),
        integer_scan_trace: trace,
        interval,
        statement,
    })))
}

/// Rational `lo < hi` with `hi - lo <= width`, `lo^lo < q < hi^hi`.
///
/// Refuses when `q = n^n` for an integer `n`, since then no strict bracket
/// converges on a rational-free root.
pub fn bisect_preimage(q: &Rational, width: &Rational, cfg: &Config) -> Result<(Rational, Rational)> {
    require_above_one(q)?;
    let trace = scan_trace(q, cfg)?;
    if let Some(&(n, Ordering::Equal)) = trace.last() {
        return Err(Error::Precondition(format!("{q} = {n}^{n} has an exact integer preimage")));
    }
    bisect_from(q, width, cfg)
}

fn bisect_from(q: &Rational, width: &Rational, cfg: &Config) -> Result<(Rational, Rational)> {
    if !width.is_positive() {
        return Err(Error::domain("width must be positive"));
    }
    // x^x is increasing on [1, ∞) and ⌈q⌉^⌈q⌉ >= q.
    let two = Rational::from_integer(BigInt::from(2));
    let mut lo = Rational::one();
    let mut hi = std::cmp::max(two.clone(), q.ceil());
    for _ in 0..MAX_BISECTION_STEPS {
        if &hi - &lo <= *width {
            debug_assert_eq!(cmp_pow_xx_certified(&lo, q, cfg)?, Ordering::Less);
            debug_assert_eq!(cmp_pow_xx_certified(&hi, q, cfg)?, Ordering::Greater);
            return Ok((lo, hi));
        }
        let mid = (&lo + &hi) / &two;
        match cmp_pow_xx_certified(&mid, q, cfg)? {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => {
                return Err(Error::Precondition(format!("{mid}^{mid} = {q} exactly")));
            }
        }
    }
    Err(Error::resource(format!(
        "bisection did not reach width {width} within {MAX_BISECTION_STEPS} steps"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn classify_cases() {
        let cfg = Config::default();
        assert_eq!(classify_preimage(&q(4, 1), &cfg).unwrap(), Preimage::Integer(2u32.into()));
        let Preimage::Transcendental(c) = classify_preimage(&q(2, 1), &cfg).unwrap() else {
            panic!("2 is not n^n");
        };
        assert_eq!(c.integer_scan_trace, vec![(1, Ordering::Less), (2, Ordering::Greater)]);
        let Preimage::Transcendental(c) = classify_preimage(&q(5, 2), &cfg).unwrap() else {
            panic!("5/2 is not n^n");
        };
        assert_eq!(c.integer_scan_trace, vec![(1, Ordering::Less), (2, Ordering::Greater)]);
        assert!(matches!(classify_preimage(&q(1, 1), &cfg), Err(Error::Unsupported(_))));
        assert!(matches!(classify_preimage(&q(1, 2), &cfg), Err(Error::Unsupported(_))));
    }

    #[test]
    fn bisect_cases() {
        let cfg = Config::default();
        let (lo, hi) = bisect_preimage(&q(2, 1), &q(1, 8), &cfg).unwrap();
        assert!(&hi - &lo <= q(1, 8));
        assert!(lo < q(15596, 10000) && q(15597, 10000) < hi);

        let (lo, hi) = bisect_preimage(&q(27, 8), &q(1, 1), &cfg).unwrap();
        assert!(&hi - &lo <= q(1, 1));
        assert!(q(1, 1) <= lo && hi <= q(4, 1));
        assert_eq!(cmp_pow_xx(&lo, &q(27, 8), &cfg).unwrap(), Ordering::Less);
        assert_eq!(cmp_pow_xx(&hi, &q(27, 8), &cfg).unwrap(), Ordering::Greater);

        assert!(matches!(
            bisect_preimage(&q(4, 1), &q(1, 8), &cfg),
            Err(Error::Precondition(_))
        ));
    }
}
