//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a valid discriminant (need D > 0, D ≡ 0 or 1 mod 4, D not a square)")]
    InvalidDiscriminant(i64),

    #[error("discriminant {d} exceeds the class-count oracle bound {bound}")]
    OracleBound { d: i64, bound: i64 },

    #[error("norm bound must be > 1, got {0}")]
    NormBound(f64),

    #[error("first-hit trace enumeration disagrees with the Pell solution at D = {d}")]
    FirstHitMismatch { d: i64 },

    #[error("test functions are defined for t > 0, got t = {0}")]
    EvalPoint(f64),

    #[error("Mellin transform diverges: Re(s) = {re} is not below the decay exponent {mu}")]
    MellinDomain { re: f64, mu: f64 },

    #[error("the Dirichlet series for Z'/Z diverges for Re(s) ≤ 1, got Re(s) = {0}")]
    ZetaDomain(f64),

    #[error("contour abscissa C = {c} must lie strictly between 1 and the decay exponent {mu}")]
    ContourPlacement { c: f64, mu: f64 },

    #[error("Mellin transform undefined at zero datum '{label}' (s0 = {re}+{im}i, decay exponent {mu})")]
    ResidueDatum {
        label: String,
        re: f64,
        im: f64,
        mu: f64,
    },

    #[error("principal series parameter s = {0} is reducible; use composition_factors")]
    ReducibleParameter(String),

    #[error("zero-data line {line}: {msg}")]
    ZeroData { line: usize, msg: String },

    #[error("duplicate zero datum s0 = {re}+{im}i (line {line})")]
    DuplicateZero { re: f64, im: f64, line: usize },

    #[error("spectrum cache line {line}: {msg}")]
    Cache { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
