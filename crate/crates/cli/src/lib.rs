//! Library half of the `selfpow` binary, so that tests can drive the exact
//! code path the executable runs without spawning a process.
//!
//! Exit codes: 0 success, 2 malformed input or usage, 3 domain and
//! precondition failures (including non-binomial or reducible targets and
//! unsupported inputs), 4 resource limits. Errors are written to stderr as a
//! single line of JSON.

mod args;
mod render;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use num_bigint::BigUint;
use num_traits::Signed;
use serde_json::Value;
use selfpow::certify::classify_preimage;
use selfpow::minpoly::minimal_polynomial_of_self_power;
use selfpow::parse::{parse_polynomial, parse_rational};
use selfpow::polypower::{
    enumerate_rational_powers, polypower_denominator_bound, self_poly_power,
    zero_exponent_denominator_bound,
};
use selfpow::solver::{
    commuting_pair, denominator_bound, equal_self_power_pair, solve_with_method,
    verify_commuting, verify_equal_self_powers,
};
use selfpow::{arith, AlgebraicTarget, Config, Error, Preimage, Rational};

pub use args::{Cli, Command};
use render::{natural, object, rational, rationals};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Resource(_) => EXIT_RESOURCE,
        Error::Domain(_)
        | Error::Precondition(_)
        | Error::NotBinomial(_)
        | Error::Reducible(_)
        | Error::Unsupported(_) => EXIT_DOMAIN,
    }
}

/// A library error tagged with the argument it came from.
struct Failure {
    error: Error,
    argument: Option<&'static str>,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, argument: None }
    }
}

trait Tag<T> {
    fn arg(self, name: &'static str) -> Result<T, Failure>;
}

impl<T> Tag<T> for selfpow::Result<T> {
    fn arg(self, name: &'static str) -> Result<T, Failure> {
        self.map_err(|error| Failure { error, argument: Some(name) })
    }
}

fn error_json(f: &Failure) -> Value {
    let message = match &f.error {
        Error::Domain(m)
        | Error::Precondition(m)
        | Error::Resource(m)
        | Error::NotBinomial(m)
        | Error::Reducible(m)
        | Error::Unsupported(m) => m.clone(),
        Error::Parse { message, .. } => message.clone(),
    };
    let position = match &f.error {
        Error::Parse { position, .. } => Value::from(*position),
        _ => Value::Null,
    };
    let argument = f.argument.map_or(Value::Null, Value::from);
    object([(
        "error",
        object([
            ("argument", argument),
            ("kind", Value::from(f.error.kind())),
            ("message", Value::from(message)),
            ("position", position),
        ]),
    )])
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return clap_outcome(&e),
    };
    let result = config(&cli).and_then(|cfg| execute(&cli.command, &cfg));
    match result {
        Ok(v) => Outcome {
            code: EXIT_OK,
            stdout: if cli.json { render::json_line(&v) } else { render::table(&v) },
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: exit_code(&f.error),
            stdout: String::new(),
            stderr: render::json_line(&error_json(&f)),
        },
    }
}

fn clap_outcome(e: &clap::Error) -> Outcome {
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
            code: EXIT_OK,
            stdout: e.to_string(),
            stderr: String::new(),
        },
        _ => {
            let text = e.to_string();
            let message = text.lines().next().unwrap_or_default();
            let message = message.strip_prefix("error: ").unwrap_or(message);
            let v = object([(
                "error",
                object([
                    ("argument", Value::Null),
                    ("kind", Value::from("usage")),
                    ("message", Value::from(message)),
                    ("position", Value::Null),
                ]),
            )]);
            Outcome {
                code: EXIT_PARSE,
                stdout: String::new(),
                stderr: render::json_line(&v),
            }
        }
    }
}

fn config(cli: &Cli) -> Result<Config, Failure> {
    let mut cfg = Config::default();
    if let Some(v) = cli.bit_cap {
        cfg.bit_cap = v;
    }
    if let Some(v) = cli.factor_budget {
        cfg.factor_budget = v;
    }
    if let Some(v) = cli.seed {
        cfg.seed = v;
    }
    if let Some(w) = &cli.width {
        let w = parse_rational(w).arg("--width")?;
        if !w.is_positive() {
            return Err(Failure {
                error: Error::Domain(format!("width must be positive, got {w}")),
                argument: Some("--width"),
            });
        }
        cfg.bisect_width = w;
    }
    cfg.cross_check |= cli.cross_check;
    Ok(cfg)
}

/// Positive integer argument.
fn natural_arg(text: &str, name: &'static str) -> Result<BigUint, Failure> {
    let q = parse_rational(text).arg(name)?;
    if !q.is_integer() || !q.is_positive() {
        return Err(Failure {
            error: Error::Domain(format!("expected a positive integer, got {q}")),
            argument: Some(name),
        });
    }
    Ok(q.numer().magnitude().clone())
}

fn positive_rational_arg(text: &str, name: &'static str) -> Result<Rational, Failure> {
    let q = parse_rational(text).arg(name)?;
    if !q.is_positive() {
        return Err(Failure {
            error: Error::Domain(format!("expected a positive rational, got {q}")),
            argument: Some(name),
        });
    }
    Ok(q)
}

/// A bare rational unless the text looks like a polynomial.
fn target_arg(text: &str, cfg: &Config) -> Result<AlgebraicTarget, Failure> {
    if text.contains(['x', 'X', '[']) {
        let p = parse_polynomial(text).arg("--alpha")?;
        AlgebraicTarget::from_polynomial(&p, cfg).arg("--alpha")
    } else {
        let q = positive_rational_arg(text, "--alpha")?;
        Ok(AlgebraicTarget::rational(q)?)
    }
}

fn target_json(t: &AlgebraicTarget) -> Value {
    match t {
        AlgebraicTarget::RationalValue(q) => rational(q),
        AlgebraicTarget::PositiveRoot(b) => Value::from(format!("root of {b}")),
    }
}

fn execute(cmd: &Command, cfg: &Config) -> Result<Value, Failure> {
    Ok(match cmd {
        Command::Solve { alpha } => {
            let target = target_arg(alpha, cfg)?;
            let (set, method) = solve_with_method(&target, cfg)?;
            object([
                ("alpha", target_json(&target)),
                ("degree", Value::from(target.degree())),
                ("method", Value::from(method.name())),
                ("scan_count", Value::from(set.scan_count)),
                ("solutions", rationals(&set.solutions)),
            ])
        }
        Command::Minpoly { x } => {
            let t = positive_rational_arg(x, "A/B")?;
            let (a, b) = (t.numer().magnitude().clone(), t.denom().magnitude().clone());
            let mp = minimal_polynomial_of_self_power(&a, &b, cfg)?;
            object([
                ("d", Value::from(mp.d())),
                ("polynomial", Value::from(mp.to_string())),
                ("r", natural(mp.r())),
                ("s", natural(mp.s())),
                ("x", rational(&t)),
            ])
        }
        Command::Powcheck { poly, x } => {
            let p = parse_polynomial(poly).arg("--poly")?;
            let x = positive_rational_arg(x, "--x")?;
            let v = self_poly_power(&p, &x, cfg)?;
            object([
                ("exponent", rational(&v.exponent)),
                ("polynomial", Value::from(p.to_string())),
                ("rational", Value::from(v.rational.is_some())),
                ("value", v.rational.as_ref().map_or(Value::Null, rational)),
                ("x", rational(&x)),
            ])
        }
        Command::Powsearch { poly, a_max } => {
            let p = parse_polynomial(poly).arg("--poly")?;
            let bound = polypower_denominator_bound(p.leading())?;
            let hits = enumerate_rational_powers(&p, *a_max, cfg)?;
            let hits = hits
                .iter()
                .map(|h| object([("value", rational(&h.value)), ("x", rational(&h.x))]))
                .collect();
            object([
                ("a_max", Value::from(*a_max)),
                ("denominator_bound", Value::from(bound)),
                ("hits", Value::Array(hits)),
                ("polynomial", Value::from(p.to_string())),
            ])
        }
        Command::Bound { degree: Some(d), .. } => {
            if *d == 0 {
                return Err(Failure {
                    error: Error::Domain("degree must be at least 1".into()),
                    argument: Some("--degree"),
                });
            }
            object([
                ("degree", Value::from(*d)),
                ("denominator_bound", Value::from(denominator_bound(*d))),
            ])
        }
        Command::Bound { leading, .. } => {
            let text = leading.as_deref().expect("clap requires --degree or --leading");
            let a = parse_rational(text).arg("--leading")?;
            if !a.is_integer() {
                return Err(Failure {
                    error: Error::Domain(format!("leading coefficient must be an integer, got {a}")),
                    argument: Some("--leading"),
                });
            }
            let lead = a.numer();
            object([
                ("denominator_bound", Value::from(polypower_denominator_bound(lead).arg("--leading")?)),
                ("leading", Value::from(lead.to_string())),
                ("zero_exponent_bound", natural(&zero_exponent_denominator_bound(lead))),
            ])
        }
        Command::Classify { q } => {
            let q = parse_rational(q).arg("--q")?;
            match classify_preimage(&q, cfg).arg("--q")? {
                Preimage::Integer(n) => object([
                    ("kind", Value::from("integer")),
                    ("preimage", natural(&n)),
                    ("q", rational(&q)),
                ]),
                Preimage::Transcendental(c) => {
                    let scan = c
                        .integer_scan_trace
                        .iter()
                        .map(|(n, ord)| {
                            let rel = match ord {
                                std::cmp::Ordering::Less => "less",
                                std::cmp::Ordering::Equal => "equal",
                                std::cmp::Ordering::Greater => "greater",
                            };
                            object([("n", Value::from(*n)), ("n_pow_n_vs_q", Value::from(rel))])
                        })
                        .collect();
                    let (lo, hi) = &c.interval;
                    object([
                        ("interval", rationals([lo, hi])),
                        ("kind", Value::from("transcendental")),
                        ("q", rational(&c.q)),
                        ("scan", Value::Array(scan)),
                        ("statement", Value::from(c.statement.clone())),
                        ("width", rational(&(hi - lo))),
                    ])
                }
            }
        }
        Command::Pairs { m, commuting } => {
            let (x, y, relation, verified) = if *commuting {
                let (x, y) = commuting_pair(*m, cfg).arg("--m")?;
                let ok = verify_commuting(&x, &y)?;
                (x, y, "x^y = y^x", ok)
            } else {
                let (x, y) = equal_self_power_pair(*m, cfg).arg("--m")?;
                let ok = verify_equal_self_powers(&x, &y)?;
                (x, y, "x^x = y^y", ok)
            };
            object([
                ("m", Value::from(*m)),
                ("relation", Value::from(relation)),
                ("verified", Value::from(verified)),
                ("x", rational(&x)),
                ("y", rational(&y)),
            ])
        }
        Command::Decompose { x, y, a, b } => {
            let (x, y) = (natural_arg(x, "--x")?, natural_arg(y, "--y")?);
            let (a, b) = (natural_arg(a, "--a")?, natural_arg(b, "--b")?);
            let lambda = arith::lambda_decompose(&x, &y, &a, &b)?;
            object([
                ("a", natural(&a)),
                ("b", natural(&b)),
                ("lambda", natural(&lambda)),
                ("x", natural(&x)),
                ("y", natural(&y)),
            ])
        }
    })
}
