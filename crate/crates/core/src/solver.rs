//! Positive rational solutions of `x^x = α`.
//!
//! Two independent procedures are provided:
//!
//! * [`solve_enumerative`] scans integers until `n^n >= α`, then tests every
//!   reduced `a/b` with `2 <= b <= ⌊4d·ln d⌋` and `a <= N·b`, where `d` is the
//!   degree of `α` and `N` the length of the integer scan;
//! * [`solve_by_divisors`] reads `α` off its minimal polynomial `sX^d - r`
//!   and tries each divisor `λ` of `s` as the base with `λ^a = s`,
//!   `b^d = λ^b`.
//!
//! [`solve`] dispatches to the second and, when [`Config::cross_check`] is
//! set, runs the first as well and asserts agreement.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{
    self, cmp_pow_xx, cmp_pow_xx_vs_root, factorize, positive_parts, rational,
    self_power_equals_root, valuation_unchecked, Rational,
};
use crate::minpoly::{
    as_binomial, is_irreducible_binomial, minimal_polynomial_of_self_power, BinomialMinPoly,
    IntPolynomial,
};
use crate::{Config, Error, Result};

/// The right-hand side `α` of `x^x = α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraicTarget {
    /// A positive rational.
    RationalValue(Rational),
    /// The positive real root of an irreducible `sX^d - r` with `d >= 2`.
    PositiveRoot(BinomialMinPoly),
}

impl AlgebraicTarget {
    pub fn rational(q: Rational) -> Result<Self> {
        positive_parts(&q)?;
        Ok(AlgebraicTarget::RationalValue(q))
    }

    /// Target from a minimal polynomial.
    ///
    /// Non-binomial and reducible inputs are rejected with
    /// [`Error::NotBinomial`] and [`Error::Reducible`]; a degree-one binomial
    /// becomes a rational target.
    pub fn from_polynomial(p: &IntPolynomial, cfg: &Config) -> Result<Self> {
        if p.is_constant() {
            return Err(Error::domain("constant polynomial has no roots"));
        }
        let b = as_binomial(p).ok_or_else(|| {
            Error::NotBinomial(format!(
                "{p} is not of the form s*x^d - r with r, s > 0 and gcd(r, s) = 1"
            ))
        })?;
        Self::from_binomial(b, cfg)
    }

    pub fn from_binomial(b: BinomialMinPoly, cfg: &Config) -> Result<Self> {
        if !is_irreducible_binomial(&b, cfg)? {
            return Err(Error::Reducible(format!("{b} factors over the rationals")));
        }
        if b.d() == 1 {
            return Ok(AlgebraicTarget::RationalValue(rational(b.r().clone(), b.s().clone())));
        }
        Ok(AlgebraicTarget::PositiveRoot(b))
    }

    /// `(s, d, r)` with `α = (r/s)^(1/d)`.
    pub fn binomial(&self) -> BinomialMinPoly {
        match self {
            AlgebraicTarget::RationalValue(q) => {
                let (r, s) = positive_parts(q).expect("validated at construction");
                BinomialMinPoly::new(s, 1, r).expect("reduced fraction")
            }
            AlgebraicTarget::PositiveRoot(b) => b.clone(),
        }
    }

    /// Degree of `α` over the rationals.
    pub fn degree(&self) -> u64 {
        match self {
            AlgebraicTarget::RationalValue(_) => 1,
            AlgebraicTarget::PositiveRoot(b) => b.d(),
        }
    }

    /// Exact ordering of `t^t` against `α`.
    pub fn cmp_self_power(&self, t: &Rational, cfg: &Config) -> Result<Ordering> {
        match self {
            AlgebraicTarget::RationalValue(q) => cmp_pow_xx(t, q, cfg),
            AlgebraicTarget::PositiveRoot(b) => cmp_pow_xx_vs_root(t, b.d(), b.r(), b.s(), cfg),
        }
    }

    /// Exact test of `t^t = α`.
    pub fn is_solution(&self, t: &Rational) -> Result<bool> {
        let b = self.binomial();
        self_power_equals_root(t, b.d(), b.r(), b.s())
    }

    /// `ln α` in floating point, for reporting only.
    pub fn ln_approx(&self) -> f64 {
        let b = self.binomial();
        (ln_natural(b.r()) - ln_natural(b.s())) / b.d() as f64
    }
}

/// Natural log of a big natural, to about double precision.
fn ln_natural(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    (n >> shift).to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Solutions sorted ascending, with the number of candidate tests performed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolutionSet {
    pub solutions: Vec<Rational>,
    pub scan_count: u64,
}

impl SolutionSet {
    fn from_unsorted(mut solutions: Vec<Rational>, scan_count: u64) -> Self {
        solutions.sort();
        solutions.dedup();
        debug_assert!(solutions.len() <= 2, "x^x takes each value at most twice");
        SolutionSet {
            solutions,
            scan_count,
        }
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Step one: test `n = 1, 2, …` until `n^n >= α`.
///
/// Returns the integer solution if the scan hit `α` exactly, and the number
/// `N` of integers tested.
pub fn integer_scan(target: &AlgebraicTarget, cfg: &Config) -> Result<(Option<BigUint>, u64)> {
    let mut n = 1u64;
    loop {
        let t = Rational::from_integer(n.into());
        match target.cmp_self_power(&t, cfg)? {
            Ordering::Less => n += 1,
            Ordering::Equal => return Ok((Some(BigUint::from(n)), finish_scan(target, n))),
            Ordering::Greater => return Ok((None, finish_scan(target, n))),
        }
    }
}

fn finish_scan(target: &AlgebraicTarget, n: u64) -> u64 {
    debug_assert!(
        n as f64 <= 3f64.max(1.0 + target.ln_approx().ceil()) + 1e-9,
        "integer scan ran past max(3, 1 + ⌈ln α⌉)"
    );
    n
}

/// Largest denominator a non-integer solution can have for `α` of degree `d`:
/// `⌊4d·ln d⌋`, or 1 when `d = 1`.
pub fn denominator_bound(d: u64) -> u64 {
    if d <= 1 {
        return 1;
    }
    let df = d as f64;
    let v = 4.0 * df * df.ln();
    // Round the product up by a few ulps so the floor never lands one short.
    (v * (1.0 + 8.0 * f64::EPSILON)).floor() as u64
}

/// Per-`b` data for the enumeration test: `b^(ad) = s^b` forces every prime
/// of `s` to divide `b`, and then fixes `a` through the valuations.
struct DenominatorProbe {
    b: u64,
    /// `(p, v_p(b), v_p(s))` over the primes of `b`; `None` when `s` has a
    /// prime outside `b`.
    valuations: Option<Vec<(u64, u64, u64)>>,
}

impl DenominatorProbe {
    fn new(b: u64, s: &BigUint, cfg: &Config) -> Result<Self> {
        let fb = factorize(&BigUint::from(b), cfg)?;
        let mut rest = s.clone();
        let mut vals = Vec::with_capacity(fb.len());
        for (p, e) in fb.iter() {
            let vs = valuation_unchecked(p, &rest);
            rest /= arith::pow_u64(p, vs);
            vals.push((p.to_u64().expect("p <= b"), e, vs));
        }
        Ok(DenominatorProbe {
            b,
            valuations: rest.is_one().then_some(vals),
        })
    }

    /// Necessary condition `a·d·v_p(b) = b·v_p(s)` for every prime of `b`.
    fn admits(&self, a: u64, d: u64) -> bool {
        let Some(vals) = &self.valuations else {
            return false;
        };
        vals.iter().all(|&(_, vb, vs)| {
            (a as u128) * (d as u128) * (vb as u128) == (self.b as u128) * (vs as u128)
        })
    }
}

/// All positive rational solutions by integer scan plus bounded enumeration.
pub fn solve_enumerative(target: &AlgebraicTarget, cfg: &Config) -> Result<SolutionSet> {
    let (int_sol, n_scan) = integer_scan(target, cfg)?;
    let mut solutions: Vec<Rational> = int_sol.into_iter().map(|n| rational(n, BigUint::one())).collect();
    let mut tests = n_scan;
    let d = target.degree();
    if d > 1 {
        let binomial = target.binomial();
        let big_b = denominator_bound(d);
        for b in 2..=big_b {
            let probe = DenominatorProbe::new(b, binomial.s(), cfg)?;
            let a_max = n_scan
                .checked_mul(b)
                .ok_or_else(|| Error::resource("enumeration range overflows"))?;
            for a in 1..=a_max {
                if a.gcd(&b) != 1 {
                    continue;
                }
                tests += 1;
                if !probe.admits(a, d) {
                    continue;
                }
                let x = rational(BigUint::from(a), BigUint::from(b));
                if target.is_solution(&x)? {
                    solutions.push(x);
                }
            }
        }
        debug_assert!(tests <= n_scan + n_scan * big_b * big_b);
    }
    let set = SolutionSet::from_unsorted(solutions, tests);
    verify_solutions(target, &set, cfg)?;
    Ok(set)
}

/// All positive rational solutions via the divisors of the leading
/// coefficient `s` of `α`'s minimal polynomial.
pub fn solve_by_divisors(poly: &BinomialMinPoly, cfg: &Config) -> Result<SolutionSet> {
    if !is_irreducible_binomial(poly, cfg)? {
        return Err(Error::Reducible(format!("{poly} factors over the rationals")));
    }
    let target = AlgebraicTarget::from_binomial(poly.clone(), cfg)?;
    let d = poly.d();
    let s = poly.s();
    if s.is_one() {
        // Algebraic integers only admit integer solutions, whose self-powers
        // are rational.
        if d == 1 {
            let (int_sol, n_scan) = integer_scan(&target, cfg)?;
            let sols = int_sol.into_iter().map(|n| rational(n, BigUint::one())).collect();
            return Ok(SolutionSet::from_unsorted(sols, n_scan));
        }
        return Ok(SolutionSet::default());
    }

    let big_b = denominator_bound(d);
    let mut tests = 0u64;
    let mut solutions = Vec::new();
    for lambda in factorize(s, cfg)?.divisors().into_iter().skip(1) {
        let Some(a) = exponent_of_power(&lambda, s) else {
            continue;
        };
        for b in 2..=big_b {
            tests += 1;
            let bb = BigUint::from(b);
            // b^d = λ^b
            if !arith::pow_eq(&bb, &BigUint::from(d), &lambda, &bb) {
                continue;
            }
            let a_nat = BigUint::from(a);
            if !a_nat.gcd(&bb).is_one() {
                continue;
            }
            if minimal_polynomial_of_self_power(&a_nat, &bb, cfg)? == *poly {
                solutions.push(rational(a_nat, bb));
            }
        }
    }
    let set = SolutionSet::from_unsorted(solutions, tests);
    verify_solutions(&target, &set, cfg)?;
    Ok(set)
}

/// The `a >= 1` with `λ^a = s`, by repeated multiplication.
fn exponent_of_power(lambda: &BigUint, s: &BigUint) -> Option<u64> {
    let mut acc = lambda.clone();
    let mut a = 1u64;
    while &acc < s {
        acc *= lambda;
        a += 1;
    }
    (&acc == s).then_some(a)
}

fn verify_solutions(target: &AlgebraicTarget, set: &SolutionSet, cfg: &Config) -> Result<()> {
    for x in &set.solutions {
        if !target.is_solution(x)? {
            return Err(Error::Precondition(format!("candidate {x} failed verification")));
        }
        // The ordering check is redundant; skip it where it would hit the cap.
        match target.cmp_self_power(x, cfg) {
            Ok(ord) => assert_eq!(ord, Ordering::Equal, "{x} verified but compares {ord:?}"),
            Err(Error::Resource(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

/// Which procedure produced a [`SolutionSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Divisors,
    Enumeration,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Divisors => "divisors",
            Method::Enumeration => "enumeration",
        }
    }
}

/// Solves `x^x = α`, cross-checking the two procedures when configured.
pub fn solve(target: &AlgebraicTarget, cfg: &Config) -> Result<SolutionSet> {
    solve_with_method(target, cfg).map(|(set, _)| set)
}

/// [`solve`], also reporting the procedure whose result is returned.
pub fn solve_with_method(target: &AlgebraicTarget, cfg: &Config) -> Result<(SolutionSet, Method)> {
    let by_divisors = solve_by_divisors(&target.binomial(), cfg)?;
    if cfg.cross_check {
        let enumerated = solve_enumerative(target, cfg)?;
        assert_eq!(
            by_divisors.solutions, enumerated.solutions,
            "divisor and enumeration methods disagree on {target:?}"
        );
    }
    Ok((by_divisors, Method::Divisors))
}

/// `(x, y) = ((m/(m+1))^m, (m/(m+1))^(m+1))`, a solution of `x^x = y^y`.
pub fn equal_self_power_pair(m: u64, cfg: &Config) -> Result<(Rational, Rational)> {
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    let (mb, m1) = (BigUint::from(m), BigUint::from(m + 1));
    let x = rational(arith::checked_pow(&mb, m, cfg)?, arith::checked_pow(&m1, m, cfg)?);
    let y = rational(arith::checked_pow(&mb, m + 1, cfg)?, arith::checked_pow(&m1, m + 1, cfg)?);
    Ok((x, y))
}

/// Reciprocals of [`equal_self_power_pair`], a solution of `x^y = y^x`.
pub fn commuting_pair(m: u64, cfg: &Config) -> Result<(Rational, Rational)> {
    let (x, y) = equal_self_power_pair(m, cfg)?;
    Ok((x.recip(), y.recip()))
}

/// Exact test of `x^x = y^y` for positive rationals.
///
/// With `x = a/b`, `y = c/d`, raising to the power `b·d` gives
/// `(a/b)^(ad) = (c/d)^(cb)`; both sides are reduced, so this is
/// `a^(ad) = c^(cb)` and `b^(ad) = d^(cb)`.
pub fn verify_equal_self_powers(x: &Rational, y: &Rational) -> Result<bool> {
    let (a, b) = positive_parts(x)?;
    let (c, d) = positive_parts(y)?;
    let ad = &a * &d;
    let cb = &c * &b;
    Ok(arith::pow_eq(&a, &ad, &c, &cb) && arith::pow_eq(&b, &ad, &d, &cb))
}

/// Exact test of `x^y = y^x` for positive rationals, via
/// `(a/b)^(cb) = (c/d)^(ad)`.
pub fn verify_commuting(x: &Rational, y: &Rational) -> Result<bool> {
    let (a, b) = positive_parts(x)?;
    let (c, d) = positive_parts(y)?;
    let ad = &a * &d;
    let cb = &c * &b;
    Ok(arith::pow_eq(&a, &cb, &c, &ad) && arith::pow_eq(&b, &cb, &d, &ad))
}

/// Natural `n` as a [`BigUint`] if `x` is a positive integer.
pub fn as_natural(x: &Rational) -> Option<BigUint> {
    (x.is_integer() && !x.numer().is_zero()).then(|| x.numer().magnitude().clone())
}

/// Checks `|solutions| <= 2` and that two solutions share their self-power.
pub fn check_multiplicity(set: &SolutionSet) -> Result<bool> {
    Ok(match set.solutions.as_slice() {
        [] | [_] => true,
        [x, y] => verify_equal_self_powers(x, y)?,
        _ => false,
    })
}
