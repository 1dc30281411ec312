//! Independent high-precision numeric oracle, built on astro-float rather
//! than on anything in the crate under test.

#![allow(dead_code)]

use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use selfpow::Rational;

/// Working precision in bits: comfortably more than 50 significant digits.
pub const PREC: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

pub struct Oracle {
    cc: Consts,
}

impl Oracle {
    pub fn new() -> Self {
        Oracle {
            cc: Consts::new().expect("astro-float constants"),
        }
    }

    pub fn int(&mut self, n: &BigInt) -> BigFloat {
        BigFloat::parse(&n.to_string(), Radix::Dec, PREC, RM, &mut self.cc)
    }

    pub fn rat(&mut self, q: &Rational) -> BigFloat {
        let n = self.int(q.numer());
        let d = self.int(q.denom());
        n.div(&d, PREC, RM)
    }

    pub fn dec(&mut self, s: &str) -> BigFloat {
        BigFloat::parse(s, Radix::Dec, PREC, RM, &mut self.cc)
    }

    pub fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(PREC, RM, &mut self.cc)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(PREC, RM, &mut self.cc)
    }

    /// `base^exp` for positive base.
    pub fn pow(&mut self, base: &BigFloat, exp: &BigFloat) -> BigFloat {
        let l = self.ln(base);
        let e = l.mul(exp, PREC, RM);
        self.exp(&e)
    }

    /// `t^t`.
    pub fn self_power(&mut self, t: &Rational) -> BigFloat {
        let t = self.rat(t);
        self.pow(&t, &t)
    }

    /// Ordering of `t^t` against `q` when `|t^t - q|` exceeds `threshold`.
    pub fn cmp_self_power(&mut self, t: &Rational, q: &Rational, threshold: &BigFloat) -> Option<Ordering> {
        let lhs = self.self_power(t);
        let rhs = self.rat(q);
        let diff = lhs.sub(&rhs, PREC, RM);
        if diff.abs().cmp(threshold)? <= 0 {
            return None;
        }
        Some(if diff.is_negative() { Ordering::Less } else { Ordering::Greater })
    }

    /// Root of `x·ln x = ln q` on `x > 1` by Newton's method.
    pub fn self_power_preimage(&mut self, q: &Rational) -> BigFloat {
        let target = {
            let q = self.rat(q);
            self.ln(&q)
        };
        let one = BigFloat::from_u64(1, PREC);
        let mut x = BigFloat::from_f64(1.5, PREC);
        for _ in 0..60 {
            let lx = self.ln(&x);
            let f = x.mul(&lx, PREC, RM).sub(&target, PREC, RM);
            let fp = lx.add(&one, PREC, RM);
            x = x.sub(&f.div(&fp, PREC, RM), PREC, RM);
        }
        x
    }

    /// `|x - y| / |y|` as a float.
    pub fn relative_error(&mut self, x: &BigFloat, y: &BigFloat) -> f64 {
        let diff = x.sub(y, PREC, RM).div(y, PREC, RM).abs();
        self.approx_f64(&diff)
    }

    pub fn lt(a: &BigFloat, b: &BigFloat) -> bool {
        a.cmp(b).is_some_and(|c| c < 0)
    }

    pub fn approx_f64(&mut self, x: &BigFloat) -> f64 {
        let s = x.format(Radix::Dec, RM, &mut self.cc).expect("format");
        s.parse::<f64>().unwrap_or_else(|_| panic!("unparseable float {s}"))
    }
}

pub fn q(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}
