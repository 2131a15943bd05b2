//! Unramified 2-adic arithmetic at finite precision, the Frobenius lift
//! T(x), Hensel/Newton lifting of its periodic points, and valuation
//! checks against the periodic-point polynomials.

pub mod context;
pub mod frobenius;
pub mod serial;

pub use context::{least_irreducible, PadicElem, UnramifiedContext};
pub use frobenius::{
    eval_t, find_periodic_points, orbit_period, verify_against_rn, CatalanTable, Orbit,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PadicError {
    #[error("invalid context: {0}")]
    BadContext(String),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("x - 3 must be a unit for the series to converge")]
    OutsideDomain,
    #[error("iteration did not converge within the budget")]
    NoConvergence,
}
