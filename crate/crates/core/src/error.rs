//! Error type shared by every numeric module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// zeta(s) has its pole at s = 1.
    #[error("zeta has a pole at s = 1")]
    PoleAtOne,

    /// An argument left the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested absolute tolerance cannot be met within configured limits.
    #[error("precision target {target:e} unreachable (best bound {best:e})")]
    PrecisionUnreachable { target: f64, best: f64 },

    /// Adaptive integration exhausted its panel budget above tolerance.
    #[error("quadrature tolerance {tol:e} not met on [{lower}, {upper}]: error estimate {estimate:e}")]
    ToleranceNotMet {
        lower: f64,
        upper: f64,
        tol: f64,
        estimate: f64,
    },

    /// The integrand returned NaN or infinity inside a panel.
    #[error("non-finite integrand value at t = {at}")]
    NonFiniteIntegrand { at: f64 },

    /// A root finder could not establish or keep a sign-change bracket.
    #[error("bracket failure solving {context}: [{lo}, {hi}]")]
    BracketFailure { context: String, lo: f64, hi: f64 },

    /// Sign-change scan found fewer zeros than the counting identity requires.
    #[error("missed zeros on [{lo}, {hi}]: found {found}, counting identity gives {expected}")]
    MissedZeros {
        lo: f64,
        hi: f64,
        found: usize,
        expected: usize,
    },

    /// The argument function is not defined on a zero ordinate.
    #[error("t = {t} is within zero tolerance of a zero ordinate")]
    OnZeroOrdinate { t: f64 },

    /// Argument continuation could not keep per-step increments below pi/2.
    #[error("argument continuation step failure at t = {t}, sigma = {sigma}")]
    ContinuationStepFailure { t: f64, sigma: f64 },

    /// A Dirichlet-series partial sum failed its numeric convergence check.
    #[error("series convergence failure for `{name}`: {detail}")]
    SeriesConvergence { name: String, detail: String },

    /// Coefficient growth metadata is missing or inconsistent, so no
    /// rigorous truncation point can be chosen.
    #[error("tail bound not computable for `{name}`: {detail}")]
    TailBoundUnavailable { name: String, detail: String },

    /// A declared closed form disagrees with the computed partial sums.
    #[error("closed form mismatch for `{name}`: computed {computed}, declared {declared}")]
    ClosedFormMismatch {
        name: String,
        computed: f64,
        declared: f64,
    },

    /// x^n + y^n = z^n held exactly; reported, never silently ignored.
    #[error("Fermat equality at ({x}, {y}, {z}, {n})")]
    FermatEquality { x: u64, y: u64, z: u64, n: u32 },

    /// Malformed coefficient file or configuration input.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
