use std::path::PathBuf;

use crate::quantities::Dimension;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{what} must be finite, got {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("{what} must be non-negative, got {value}")]
    Negative { what: &'static str, value: f64 },

    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: f64 },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: Dimension,
        found: Dimension,
    },

    #[error("cannot raise negative magnitude {base} to power {power} with an even denominator")]
    NegativeFractionalBase { base: f64, power: String },

    #[error("clock radius {r} does not exceed its Schwarzschild radius {r_s} (Planck lengths)")]
    InsideHorizon { r: f64, r_s: f64 },

    #[error("speed {v} is outside (0, c] (Planck units)")]
    Superluminal { v: f64 },

    #[error("invalid bracket [{lo}, {hi}]: need 0 < lo < hi")]
    InvalidBracket { lo: f64, hi: f64 },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("model parameter `{0}` has no matching ParamSpec")]
    MissingParameter(String),

    #[error("ParamSpec `{0}` does not match any model parameter")]
    UnknownParameter(String),

    #[error("failed to read constants file {path}: {source}")]
    ConstantsIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed constants document: {0}")]
    ConstantsFormat(#[from] serde_json::Error),
}

pub(crate) fn finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { what, value })
    }
}

pub(crate) fn non_negative(what: &'static str, value: f64) -> Result<f64> {
    finite(what, value)?;
    if value < 0.0 {
        Err(Error::Negative { what, value })
    } else {
        Ok(value)
    }
}

pub(crate) fn positive(what: &'static str, value: f64) -> Result<f64> {
    finite(what, value)?;
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositive { what, value })
    }
}
