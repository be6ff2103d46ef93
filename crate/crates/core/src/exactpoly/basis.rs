//! Change of basis among the four polynomial bases used for chromatic-type
//! polynomials of degree at most `p`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::stirling::binomial;
use crate::scalar::int_to_rational;
use crate::{QPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisTag {
    /// `x^i`
    Power,
    /// `(x)_i = x(x-1)...(x-i+1)`
    FallingFactorial,
    /// `<x>_i = x(x+1)...(x+i-1)`
    RisingFactorial,
    /// `C(x+p-i, p)` for the fixed degree bound `p`
    ShiftedBinomial,
}

impl BasisTag {
    pub const ALL: [BasisTag; 4] = [
        BasisTag::Power,
        BasisTag::FallingFactorial,
        BasisTag::RisingFactorial,
        BasisTag::ShiftedBinomial,
    ];

    /// The `i`-th basis element for degree bound `p`.
    pub fn element(self, i: usize, p: usize) -> QPoly {
        match self {
            BasisTag::Power => QPoly::monomial(Rational::one(), i),
            BasisTag::FallingFactorial => QPoly::falling_factorial(i),
            BasisTag::RisingFactorial => QPoly::rising_factorial(i),
            BasisTag::ShiftedBinomial => QPoly::binomial(p as i64 - i as i64, p),
        }
    }
}

/// Coefficients of `sum_i coeffs[i] * element(i)` expressed in `to`.
/// The result always has length `p + 1`.
pub fn convert_basis(coeffs: &[Rational], from: BasisTag, to: BasisTag, p: usize) -> Vec<Rational> {
    assert!(coeffs.len() <= p + 1, "coefficient vector longer than p + 1");
    let poly = to_power(coeffs, from, p);
    from_power(&poly, to, p)
}

pub fn to_power(coeffs: &[Rational], from: BasisTag, p: usize) -> QPoly {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(QPoly::zero(), |acc, (i, c)| acc + from.element(i, p).scale(c))
}

/// Expresses a polynomial of degree at most `p` in the basis `to`.
pub fn from_power(poly: &QPoly, to: BasisTag, p: usize) -> Vec<Rational> {
    assert!(poly.degree().is_none_or(|d| d <= p), "degree exceeds bound p");
    match to {
        BasisTag::Power => poly.padded(p + 1),
        BasisTag::FallingFactorial | BasisTag::RisingFactorial => peel(poly, to, p),
        BasisTag::ShiftedBinomial => shifted_binomial_coeffs(poly, p),
    }
}

/// Triangular elimination for bases whose `i`-th element is monic of degree `i`.
fn peel(poly: &QPoly, to: BasisTag, p: usize) -> Vec<Rational> {
    let mut rest = poly.clone();
    let mut out = vec![Rational::zero(); p + 1];
    while let Some(d) = rest.degree() {
        let c = rest.leading().cloned().expect("nonzero");
        rest -= to.element(d, p).scale(&c);
        out[d] = c;
    }
    out
}

/// `w_i = sum_{j<=i} (-1)^j C(p+1, j) f(i-j)`, the inverse of
/// `f(x) = sum_i w_i C(x+p-i, p)`.
fn shifted_binomial_coeffs(poly: &QPoly, p: usize) -> Vec<Rational> {
    let values: Vec<Rational> = (0..=p)
        .map(|k| poly.eval(&Rational::from_integer(k.into())))
        .collect();
    (0..=p)
        .map(|i| {
            (0..=i).fold(Rational::zero(), |acc, j| {
                let c = int_to_rational(&binomial(p as i64 + 1, j as i64));
                let term = c * values[i - j].clone();
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

/// First `k_max + 1` coefficients of `numerator / (1-x)^(p+1)`.
pub fn series_coeffs(numerator: &QPoly, p: usize, k_max: usize) -> Vec<Rational> {
    (0..=k_max)
        .map(|k| {
            numerator
                .coeffs()
                .iter()
                .enumerate()
                .take(k + 1)
                .fold(Rational::zero(), |acc, (j, c)| {
                    acc + c.clone() * int_to_rational(&binomial((p + k - j) as i64, p as i64))
                })
        })
        .collect()
}
