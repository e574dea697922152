//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("empty window: {0}")]
    EmptyWindow(String),

    #[error("index {index} outside word window [{lo}, {hi})")]
    OutOfWindow { index: i64, lo: i64, hi: i64 },

    #[error("matrices do not commute at tolerance: commutator residual {residual:.3e}")]
    NonCommuting { residual: f64 },

    #[error("not critical: both transfer matrices parabolic but not +/-I")]
    MixedParabolic,

    #[error("energy is not interior to the spectrum: {0}")]
    NotInterior(String),

    #[error("phase condition violated: eta0 - eta1 = {gap:.6e} mod pi")]
    PhaseCondition { gap: f64 },

    #[error("numerical failure: {0}")]
    Numerics(String),

    #[error("matrix lacks the conjugate-symmetric (a, conj b; b, conj a) form: defect {0:.3e}")]
    NotSymmetricForm(f64),

    #[error("window saturated at {0} cells with tail above tolerance")]
    WindowSaturation(usize),

    #[error("residual too large: {0:.3e} (input does not solve the equation)")]
    ResidualTooLarge(f64),

    #[error("root certificate failed: {0}")]
    RootResidual(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
