use crate::scalar::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("no rational function within the degree bounds fits every sample")]
    NoConsistentFit,
    #[error("polynomial is not strictly positive on the interval")]
    NotPositive,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("adjacent value-function pieces meet at an irrational point in [{lo}, {hi}]")]
    IrrationalBreakpoint { lo: Rat, hi: Rat },
    #[error("kernel enumeration needs {needed} square submatrices, budget is {budget}")]
    TooLarge { needed: u128, budget: u64 },
    #[error("invalid sample range: need lo < hi and count >= 2")]
    BadRange,
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScalar(String),
    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(String),
    #[error("no splice witness with N <= {max_n} and c <= 2^{max_c_exp} ({side} side)")]
    WitnessSearchBudgetExceeded {
        side: &'static str,
        max_n: u32,
        max_c_exp: u32,
    },
    #[error("splice values differ at z0 = {z0}: left {left}, right {right}")]
    ValueMismatchAtZ0 { z0: Rat, left: Rat, right: Rat },
    #[error("a factor changes sign at an irrational point in [{lo}, {hi}]")]
    IrrationalSignChange { lo: Rat, hi: Rat },
    #[error("denominator of piece {piece} vanishes in [{lo}, {hi}]")]
    DenominatorVanishes { piece: usize, lo: Rat, hi: Rat },
    #[error("discontinuous at breakpoint {breakpoint}: left piece gives {left}, right piece gives {right}")]
    Discontinuous { breakpoint: Rat, left: Rat, right: Rat },
    #[error("game of {rows}x{cols} exceeds the limit of {limit} entries")]
    GameTooLarge { rows: usize, cols: usize, limit: u64 },
    #[error("malformed piecewise function: {0}")]
    MalformedPiecewise(String),
}
