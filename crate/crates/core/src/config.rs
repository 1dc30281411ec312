use num_bigint::BigInt;
use num_rational::BigRational;

/// Limits and knobs shared by every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Largest integer, in bits, an exact comparison may construct.
    pub bit_cap: u64,
    /// Total Pollard rho iterations allowed per factorization.
    pub factor_budget: u64,
    /// Seed for the rho walk starting points.
    pub seed: u64,
    /// Target width of certificate isolating intervals.
    pub bisect_width: BigRational,
    /// Run both solution procedures in [`crate::solver::solve`] and assert they agree.
    pub cross_check: bool,
}

impl Config {
    pub const DEFAULT_BIT_CAP: u64 = 1 << 20;
    pub const DEFAULT_FACTOR_BUDGET: u64 = 1 << 22;
    pub const DEFAULT_SEED: u64 = 0x5E_ED0F_5E1F;
}

impl Default for Config {
    fn default() -> Self {
        Config {
            bit_cap: Self::DEFAULT_BIT_CAP,
            factor_budget: Self::DEFAULT_FACTOR_BUDGET,
            seed: Self::DEFAULT_SEED,
            bisect_width: BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64)),
            cross_check: cfg!(debug_assertions),
        }
    }
}
