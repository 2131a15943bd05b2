//! Truncated Puiseux series with exact rational (or Q(√2), Q(ζ₈))
//! coefficients, builders for the modular-function catalog, and the
//! catalog-driven identity verifier.

pub mod builders;
pub mod catalog;
pub mod coeff;
pub mod serial;
pub mod series;

pub use catalog::{residual_for, verify_all, verify_identity, IdentityOutcome, Residual};
pub use coeff::{SeriesCoeff, Zeta8};
pub use series::{rational, PuiseuxSeries};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QSeriesError {
    #[error("series has no invertible leading term")]
    NotInvertible,
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("{0}")]
    Internal(String),
}
