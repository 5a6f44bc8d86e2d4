use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{function} is undefined at {value}")]
    Domain { function: &'static str, value: f64 },

    /// `|log(S/X)|` is inside the at-the-money band; use the ATM formulas.
    #[error("log-moneyness {log_moneyness:e} is inside the at-the-money band")]
    AtmDegenerate { log_moneyness: f64 },

    #[error("surrogate coefficients are ill-conditioned at alpha={alpha:e} (chi(1)={chi_at_one:e})")]
    Conditioning { alpha: f64, chi_at_one: f64 },

    #[error("price {price} is outside the no-arbitrage interval ({lower}, {upper})")]
    BoundViolation { price: f64, lower: f64, upper: f64 },

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub(crate) fn require_positive(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::invalid(format!("{name} must be positive and finite, got {value}")))
    }
}

pub(crate) fn require_finite(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::invalid(format!("{name} must be finite, got {value}")))
    }
}
