//! Prime factorization: trial division by the primes below 10^6, then
//! Brent's variant of Pollard rho on what is left.
//!
//! Every prime reported is certified. Cofactors too large for the
//! deterministic Miller-Rabin base set are refused with a resource error
//! rather than reported on a probabilistic verdict.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::root::integer_kth_root;
use crate::{Config, Error, Result};

const TRIAL_LIMIT: u32 = 1_000_000;

/// Miller-Rabin with the first 13 prime bases is exact below this bound.
const MR_EXACT_BELOW: u128 = 3_317_044_064_679_887_385_961_981;
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_LIMIT as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::with_capacity(80_000);
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(BigUint, u64)>,
}

impl Factorization {
    fn from_map(map: BTreeMap<BigUint, u64>) -> Self {
        Factorization {
            factors: map.into_iter().collect(),
        }
    }

    pub fn factors(&self) -> &[(BigUint, u64)] {
        &self.factors
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BigUint, u64)> {
        self.factors.iter().map(|(p, e)| (p, *e))
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponents(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|(_, e)| *e)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Exponent of `p`, zero when absent.
    pub fn exponent_of(&self, p: &BigUint) -> u64 {
        self.factors
            .binary_search_by(|(q, _)| q.cmp(p))
            .map_or(0, |i| self.factors[i].1)
    }

    /// Multiplies the factorization back out.
    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e as u32))
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<BigUint> {
        let mut divs = vec![BigUint::one()];
        for (p, e) in &self.factors {
            let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
            for d in &divs {
                let mut cur = d.clone();
                next.push(cur.clone());
                for _ in 0..*e {
                    cur *= p;
                    next.push(cur.clone());
                }
            }
            divs = next;
        }
        divs.sort();
        divs
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

fn miller_rabin(n: &BigUint, bases: &[u32]) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in bases {
        let a = BigUint::from(a) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Certified primality test.
///
/// Exact below about 3.3·10^24. Larger inputs that pass every base cannot be
/// certified here and yield [`Error::Resource`].
pub fn is_prime(n: &BigUint) -> Result<bool> {
    if let Some(v) = n.to_u32() {
        if v <= TRIAL_LIMIT {
            return Ok(small_primes().binary_search(&v).is_ok());
        }
    }
    for &p in small_primes().iter().take(168) {
        if (n % p).is_zero() {
            return Ok(false);
        }
    }
    if !miller_rabin(n, &MR_BASES) {
        return Ok(false);
    }
    match n.to_u128() {
        Some(v) if v < MR_EXACT_BELOW => Ok(true),
        _ => Err(Error::resource(format!(
            "{n} is a probable prime but too large to certify"
        ))),
    }
}

/// Exponent `a` with `p^a || n`.
pub fn padic_valuation(p: &BigUint, n: &BigUint) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::domain("valuation of zero is undefined"));
    }
    if !is_prime(p)? {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    Ok(valuation_unchecked(p, n))
}

/// `p`-adic valuation without the primality check; `p >= 2`, `n >= 1`.
pub(crate) fn valuation_unchecked(p: &BigUint, n: &BigUint) -> u64 {
    let mut count = 0;
    let mut rem = n.clone();
    loop {
        let (q, r) = rem.div_rem(p);
        if !r.is_zero() {
            return count;
        }
        rem = q;
        count += 1;
    }
}

struct Rho {
    rng: ChaCha8Rng,
    spent: u64,
    budget: u64,
}

impl Rho {
    fn charge(&mut self, n: &BigUint) -> Result<()> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(Error::resource(format!(
                "factorization budget of {} rho steps exhausted on {n}",
                self.budget
            )));
        }
        Ok(())
    }

    /// A nontrivial divisor of the odd composite `n`, not a perfect power.
    fn split(&mut self, n: &BigUint) -> Result<BigUint> {
        let one = BigUint::one();
        let step = |y: &BigUint, c: &BigUint| (y * y + c) % n;
        let abs_diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
        loop {
            let c = self.rng.gen_biguint_range(&one, n);
            let mut y = self.rng.gen_biguint_below(n);
            let batch = 128u64;
            let mut g = one.clone();
            let mut r = 1u64;
            let mut q = one.clone();
            let mut x = y.clone();
            let mut ys = y.clone();
            while g == one {
                x = y.clone();
                for _ in 0..r {
                    y = step(&y, &c);
                    self.charge(n)?;
                }
                let mut k = 0;
                while k < r && g == one {
                    ys = y.clone();
                    for _ in 0..batch.min(r - k) {
                        y = step(&y, &c);
                        q = (q * abs_diff(&x, &y)) % n;
                        self.charge(n)?;
                    }
                    g = q.gcd(n);
                    k += batch;
                }
                r *= 2;
            }
            if &g == n {
                loop {
                    ys = step(&ys, &c);
                    self.charge(n)?;
                    g = abs_diff(&x, &ys).gcd(n);
                    if g != one {
                        break;
                    }
                }
            }
            if &g != n {
                return Ok(g);
            }
        }
    }

    fn factor_into(&mut self, n: BigUint, mult: u64, out: &mut BTreeMap<BigUint, u64>) -> Result<()> {
        if n.is_one() {
            return Ok(());
        }
        if is_prime(&n)? {
            *out.entry(n).or_insert(0) += mult;
            return Ok(());
        }
        // Rho cannot split prime powers; peel perfect powers first.
        for k in (2..=n.bits() / 20).rev() {
            if let Some(root) = integer_kth_root(&n, k) {
                return self.factor_into(root, mult * k, out);
            }
        }
        let d = self.split(&n)?;
        let other = &n / &d;
        self.factor_into(d, mult, out)?;
        self.factor_into(other, mult, out)
    }
}

/// Exact prime factorization; `factorize(1)` is empty.
pub fn factorize(n: &BigUint, cfg: &Config) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::domain("cannot factorize zero"));
    }
    let mut map = BTreeMap::new();
    let mut rem = n.clone();
    let mut exhausted = true;
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > rem {
            exhausted = false;
            break;
        }
        let mut e = 0u64;
        loop {
            let (q, r) = rem.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rem = q;
            e += 1;
        }
        if e > 0 {
            map.insert(pb, e);
        }
    }
    if rem.is_one() {
        return Ok(Factorization::from_map(map));
    }
    let limit_sq = BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT);
    if !exhausted || rem < limit_sq {
        *map.entry(rem).or_insert(0) += 1;
        return Ok(Factorization::from_map(map));
    }
    let mut rho = Rho {
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        spent: 0,
        budget: cfg.factor_budget,
    };
    rho.factor_into(rem, 1, &mut map)?;
    Ok(Factorization::from_map(map))
}
