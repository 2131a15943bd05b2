//! Exact algebra layer: big rationals, the quadratic field Q(√2), dense
//! univariate and bivariate polynomials, subresultant-PRS resultants, the
//! iterated-resultant periodic-point polynomials R_n, and the exact
//! functional-equation checks built on them.
//!
//! Everything in this crate is a pure function of immutable inputs and is
//! safe to call concurrently.

pub mod bipoly;
pub mod error;
pub mod identities;
pub mod mobius;
pub mod periodic;
pub mod quadext;
pub mod resultant;
pub mod ring;
pub mod serial;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use error::{ExactAlgError, Result};
pub use mobius::MobiusMap;
pub use quadext::QuadExt;
pub use ring::{Field, Gf2, IntegralDomain, Ring};
pub use resultant::{discriminant, resultant};
pub use unipoly::UniPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
