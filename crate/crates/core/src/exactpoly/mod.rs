//! Exact polynomial algebra: dense univariate and sparse bivariate
//! polynomials, coefficient bases, Stirling machinery and Sturm chains.

pub mod basis;
pub mod bipoly;
pub mod poly;
pub mod serial;
pub mod stirling;
pub mod sturm;

pub use basis::{convert_basis, from_power, series_coeffs, to_power, BasisTag};
pub use bipoly::BiPoly;
pub use poly::Poly;
pub use stirling::{bell_number, bell_poly, binomial, factorial, stirling1_unsigned, stirling2};
pub use sturm::{
    all_roots_real, cauchy_bound, isolate_real_roots, root_multiplicity_at, sturm_chain,
    sturm_real_roots, Interval,
};

use crate::{QPoly, Rational, ZPoly};

pub fn to_rational(p: &ZPoly) -> QPoly {
    p.map(|c| Rational::from_integer(c.clone()))
}

/// Converts back to integer coefficients; `None` if any coefficient is fractional.
pub fn to_integer(p: &QPoly) -> Option<ZPoly> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect::<Option<Vec<_>>>()?;
    Some(ZPoly::new(coeffs))
}
