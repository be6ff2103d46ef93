//! Exact computation of graph and matroid polynomials: Potts partition
//! functions, Tutte, characteristic, flow, chromatic and order polynomials,
//! and the sigma/w/tau transforms of the chromatic polynomial, together with
//! machine checks of the identities that relate them.
//!
//! Polynomial types are generic over a [`scalar::Scalar`] coefficient ring.
//! Graph algorithms work over the concrete aliases below.

pub mod basespoly;
pub mod error;
pub mod exactpoly;
pub mod flowchrom;
pub mod matroid;
pub mod multigraph;
pub mod orderpoly;
pub mod potts;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod tutte;

pub use error::{Error, Result};
pub use report::{IdentityReport, Status};

/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer scalar.
pub type Integer = num_bigint::BigInt;
pub type QPoly = exactpoly::Poly<Rational>;
pub type ZPoly = exactpoly::Poly<Integer>;
pub type QBiPoly = exactpoly::BiPoly<Rational>;
pub type ZBiPoly = exactpoly::BiPoly<Integer>;
