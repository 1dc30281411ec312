use clap::{ArgGroup, Parser, Subcommand};

/// Exact arithmetic for x^x = α, self-power minimal polynomials, rationality
/// of x^P(x) and transcendence certificates.
#[derive(Debug, Parser)]
#[command(name = "selfpow", version)]
pub struct Cli {
    /// Emit a single line of JSON with sorted keys instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest integer, in bits, an exact comparison may build.
    #[arg(long, global = true, env = "XX_BIT_CAP", value_name = "BITS")]
    pub bit_cap: Option<u64>,

    /// Pollard rho iterations allowed per factorization.
    #[arg(long, global = true, env = "XX_FACTOR_BUDGET", value_name = "STEPS")]
    pub factor_budget: Option<u64>,

    /// Seed for the factorization random walk.
    #[arg(long, global = true, env = "XX_SEED")]
    pub seed: Option<u64>,

    /// Width of certificate intervals, as a rational such as 1/1000000000.
    #[arg(long, global = true, env = "XX_BISECT_WIDTH", value_name = "RATIONAL")]
    pub width: Option<String>,

    /// Run both solution procedures and fail loudly if they disagree.
    #[arg(long, global = true)]
    pub cross_check: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rational solutions of x^x = α, for α a rational or a binomial minimal polynomial.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Minimal polynomial of (a/b)^(a/b).
    Minpoly {
        #[arg(allow_hyphen_values = true, value_name = "A/B")]
        x: String,
    },
    /// Whether x^P(x) is rational.
    Powcheck {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// All a/b with a <= a-max and b up to the denominator bound where x^P(x) is rational.
    Powsearch {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        a_max: u64,
    },
    /// Denominator bounds, by degree of α or by leading coefficient of P.
    #[command(group(ArgGroup::new("which").required(true).args(["degree", "leading"])))]
    Bound {
        #[arg(long)]
        degree: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        leading: Option<String>,
    },
    /// Integer preimage of q under x^x, or a transcendence certificate.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// The m-th rational pair with x^x = y^y, or x^y = y^x with --commuting.
    Pairs {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        commuting: bool,
    },
    /// λ with x = λ^b and y = λ^a, given x^a = y^b and gcd(a, b) = 1.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}
