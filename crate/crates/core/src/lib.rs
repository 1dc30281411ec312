//! Exact arithmetic for self-powers.
//!
//! The crate answers four related questions over the positive rationals,
//! without floating point anywhere in a decision:
//!
//! * which rational `x` satisfy `x^x = α` for a positive real algebraic `α`
//!   ([`solver`], by two independent procedures);
//! * what the minimal polynomial of `(a/b)^(a/b)` is ([`minpoly`]);
//! * when `x^P(x)` is rational for an integer polynomial `P` ([`polypower`]);
//! * why the real solution of `x^x = q` is transcendental when `q > 1` is not
//!   of the form `n^n` ([`certify`]).
//!
//! All integers are arbitrary precision. Operations that would build
//! integers beyond [`Config::bit_cap`] bits refuse with
//! [`Error::Resource`] instead of stalling.

pub mod arith;
pub mod certify;
mod config;
mod error;
pub mod minpoly;
pub mod parse;
pub mod polypower;
pub mod solver;

pub use arith::{Factorization, Integer, Natural, Rational};
pub use certify::{Certificate, Preimage};
pub use config::Config;
pub use error::{Error, Result};
pub use minpoly::{BinomialMinPoly, IntPolynomial};
pub use polypower::{PowerHit, RationalityVerdict};
pub use solver::{AlgebraicTarget, SolutionSet};
