use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mass must be positive and finite, got {0}")]
    NonPositiveMass(f64),
    #[error("transversality k·ε = 0 violated (|k·ε| = {residual:e}, tolerance {tolerance:e})")]
    Constraint { residual: f64, tolerance: f64 },
    #[error("wave vector is not time-like (k·k = {0:e})")]
    NotTimelike(f64),
    #[error("wave vector is off the mass shell (k·k − m² = {0:e})")]
    OffShell(f64),
    #[error("boost plane is not orthonormal (defect {0:e})")]
    NonOrthonormalPlane(f64),
    #[error("standing wave needs |k1| = |k2| (got {0}, {1})")]
    UnequalWaveNumbers(f64, f64),
    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),
    #[error("inside the crossover band (λ² = {0:e})")]
    Crossover(f64),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("eigenvalue iteration did not converge")]
    NoConvergence,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_mass(m: f64) -> Result<()> {
    if m.is_finite() && m > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveMass(m))
    }
}
