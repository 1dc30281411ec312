//! End-to-end acceptance suite. Each criterion prints one `PASS`/`FAIL` line
//! (written straight to stderr so it shows even when output is captured),
//! and the test fails if any criterion does.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::cmp::Ordering;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{q, Oracle};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use selfpow::arith::{cmp_pow_xx, cmp_pow_xx_certified, lambda_decompose};
use selfpow::certify::{bisect_preimage, classify_preimage};
use selfpow::minpoly::{degree_of_self_power, minimal_polynomial_of_self_power};
use selfpow::polypower::{polypower_denominator_bound, sweep_rational_powers};
use selfpow::solver::{
    commuting_pair, equal_self_power_pair, solve, solve_by_divisors, solve_enumerative,
    verify_commuting, verify_equal_self_powers,
};
use selfpow::{AlgebraicTarget, Config, IntPolynomial, Preimage, Rational};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn n(v: u64) -> BigUint {
    BigUint::from(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn two_solutions() -> Verdict {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_selfpow"))
        .args(["--json", "solve", "--alpha", "[−1, 0, 2]"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(v["solutions"] == serde_json::json!(["1/4", "1/2"]), || format!("got {}", v["solutions"]))?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{{1/4, 1/2}} in {elapsed:.2?}"))
}

fn round_trip_sweep() -> Verdict {
    let cfg = Config { cross_check: false, ..Config::default() };
    let start = Instant::now();
    let mut pairs = 0;
    for a in 1u64..=40 {
        for b in 1u64..=40 {
            if a.gcd(&b) != 1 {
                continue;
            }
            pairs += 1;
            let t = q(a as i64, b as i64);
            let mp = minimal_polynomial_of_self_power(&n(a), &n(b), &cfg).map_err(|e| e.to_string())?;
            let target = AlgebraicTarget::from_binomial(mp, &cfg).map_err(|e| e.to_string())?;
            let by_divisors = solve_by_divisors(&target.binomial(), &cfg).map_err(|e| e.to_string())?;
            let enumerated = solve_enumerative(&target, &cfg).map_err(|e| e.to_string())?;
            ensure(by_divisors.solutions.contains(&t), || format!("{t} missing from {:?}", by_divisors.solutions))?;
            ensure(by_divisors.solutions == enumerated.solutions, || {
                format!("{t}: divisors {:?} vs enumeration {:?}", by_divisors.solutions, enumerated.solutions)
            })?;
            let solved = solve(&target, &cfg).map_err(|e| e.to_string())?;
            ensure(solved.solutions == by_divisors.solutions, || format!("{t}: solve disagrees"))?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!("{pairs} coprime pairs, both methods agree, {elapsed:.2?}"))
}

fn common_base_brute_force() -> Verdict {
    let start = Instant::now();
    let mut hits = 0;
    for a in 1u64..=6 {
        for b in 1u64..=6 {
            if a.gcd(&b) != 1 {
                continue;
            }
            for x in 1u64..=256 {
                let xa = n(x).pow(a as u32);
                for y in 1u64..=256 {
                    if xa != n(y).pow(b as u32) {
                        continue;
                    }
                    hits += 1;
                    let l = lambda_decompose(&n(x), &n(y), &n(a), &n(b))
                        .map_err(|e| format!("x={x} y={y} a={a} b={b}: {e}"))?;
                    ensure(l.pow(b as u32) == n(x) && l.pow(a as u32) == n(y), || {
                        format!("λ={l} fails for x={x} y={y} a={a} b={b}")
                    })?;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{hits} solutions of x^a = y^b decomposed, {elapsed:.2?}"))
}

fn bound_soundness() -> Verdict {
    let cfg = Config::default();
    let mut checked = 0;
    let mut tight = Vec::new();
    for b in 2u64..=200 {
        for a in 1u64..=50 {
            if a.gcd(&b) != 1 {
                continue;
            }
            checked += 1;
            let d = degree_of_self_power(&n(a), &n(b), &cfg).map_err(|e| e.to_string())?;
            // b·ln 2 <= d·ln b, decided exactly as 2^b <= b^d.
            let lhs = n(2).pow(b as u32);
            let rhs = n(b).pow(d as u32);
            ensure(lhs <= rhs, || format!("2^{b} > {b}^{d} at a={a}"))?;
            if lhs == rhs {
                tight.push((a, b));
            }
            let (bf, df) = (b as f64, d as f64);
            ensure(bf < 4.0 * df * df.ln(), || format!("b={b} >= 4·{d}·ln {d} at a={a}"))?;
        }
    }
    ensure(tight.contains(&(1, 2)), || format!("equality cases {tight:?} miss (1, 2)"))?;
    Ok(format!("{checked} pairs; 2^b = b^d at {} pairs including (1, 2)", tight.len()))
}

fn polynomial_power_sweep() -> Verdict {
    let cfg = Config::default();
    let two_x = IntPolynomial::from_i64s(&[0, 2]).unwrap();
    let bound = polypower_denominator_bound(two_x.leading()).map_err(|e| e.to_string())?;
    ensure(bound == 5, || format!("bound for A = 2 is {bound}"))?;
    let hits = sweep_rational_powers(&two_x, 100, 15, &cfg).map_err(|e| e.to_string())?;
    let mut dens: Vec<BigInt> = hits.iter().map(|h| h.x.denom().clone()).collect();
    dens.dedup();
    ensure(dens == [BigInt::from(2), BigInt::from(4)], || format!("denominators {dens:?}"))?;

    let monic = IntPolynomial::from_i64s(&[1, 0, 1]).unwrap();
    let hits = sweep_rational_powers(&monic, 60, 60, &cfg).map_err(|e| e.to_string())?;
    ensure(hits.is_empty(), || format!("x^2 + 1 has non-integer hits {hits:?}"))?;
    Ok(format!("2x: hits only at b in {{2, 4}} <= {bound}; x^2+1: none for a, b <= 60"))
}

fn comparator_oracle() -> Verdict {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(20_241_015);
    let mut oracle = Oracle::new();
    let threshold = oracle.dec("1e-30");
    let (mut decided, mut disagreements) = (0, Vec::new());
    for _ in 0..1000 {
        let mut c = || rng.gen_range(1i64..=50);
        let (t, v) = (q(c(), c()), q(c(), c()));
        let exact = cmp_pow_xx(&t, &v, &cfg).map_err(|e| e.to_string())?;
        if let Some(numeric) = oracle.cmp_self_power(&t, &v, &threshold) {
            decided += 1;
            if numeric != exact {
                disagreements.push((t, v));
            }
        }
    }
    ensure(disagreements.is_empty(), || format!("disagreements {disagreements:?}"))?;
    Ok(format!("1000 pairs, {decided} numerically decided, 0 disagreements"))
}

fn transcendence_certificate() -> Verdict {
    let cfg = Config::default();
    let two = q(2, 1);
    let Preimage::Transcendental(cert) = classify_preimage(&two, &cfg).map_err(|e| e.to_string())? else {
        return Err("2 classified as n^n".into());
    };
    let (lo, hi) = cert.interval.clone();
    let width = &hi - &lo;
    ensure(width <= q(1, 1_000_000_000), || format!("width {width}"))?;

    let mut oracle = Oracle::new();
    let root = oracle.self_power_preimage(&two);
    let (lf, hf) = (oracle.rat(&lo), oracle.rat(&hi));
    ensure(Oracle::lt(&lf, &root) && Oracle::lt(&root, &hf), || "oracle root outside interval".into())?;
    let root_f = oracle.approx_f64(&root);
    ensure((root_f - 1.559610469).abs() < 1e-9, || format!("oracle root {root_f}"))?;

    // The endpoint cross forms at this width run to ~5·10^10 bits, so the
    // strict signs come from the certified enclosure comparator.
    ensure(cmp_pow_xx_certified(&lo, &two, &cfg) == Ok(Ordering::Less), || "lo^lo < 2 fails".into())?;
    ensure(cmp_pow_xx_certified(&hi, &two, &cfg) == Ok(Ordering::Greater), || "hi^hi > 2 fails".into())?;

    // A coarser bracket is small enough for the literal integer comparison,
    // and must enclose the fine one.
    let wide = Config { bit_cap: 1 << 22, ..Config::default() };
    let (clo, chi) = bisect_preimage(&two, &q(1, 65536), &wide).map_err(|e| e.to_string())?;
    ensure(cmp_pow_xx(&clo, &two, &wide) == Ok(Ordering::Less), || "coarse lo fails".into())?;
    ensure(cmp_pow_xx(&chi, &two, &wide) == Ok(Ordering::Greater), || "coarse hi fails".into())?;
    ensure(clo <= lo && hi <= chi, || "fine interval escapes the coarse one".into())?;
    Ok(format!("({lo}, {hi}), width {width}, contains {root_f:.12}"))
}

fn families() -> Verdict {
    let cfg = Config::default();
    for m in 1..=4 {
        let (x, y) = equal_self_power_pair(m, &cfg).map_err(|e| e.to_string())?;
        let (u, v) = commuting_pair(m, &cfg).map_err(|e| e.to_string())?;
        ensure(verify_equal_self_powers(&x, &y) == Ok(true), || format!("x^x = y^y fails at m={m}"))?;
        ensure(verify_commuting(&u, &v) == Ok(true), || format!("x^y = y^x fails at m={m}"))?;
        let one = Rational::from_integer(1.into());
        ensure(&x * &u == one && &y * &v == one, || format!("reciprocity fails at m={m}"))?;
    }
    Ok("m = 1..4 verified, families reciprocal componentwise".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("two-solution reproduction", two_solutions),
        ("round-trip sweep", round_trip_sweep),
        ("common-base brute force", common_base_brute_force),
        ("bound soundness", bound_soundness),
        ("polynomial power sweep", polynomial_power_sweep),
        ("comparator oracle", comparator_oracle),
        ("transcendence certificate", transcendence_certificate),
        ("family verification", families),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let verdict = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let line = match &verdict {
            Ok(detail) => format!("PASS {} {name}: {detail}", i + 1),
            Err(why) => format!("FAIL {} {name}: {why}", i + 1),
        };
        writeln!(err, "{line}").unwrap();
        if verdict.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
