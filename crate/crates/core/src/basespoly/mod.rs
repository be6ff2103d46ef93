//! The sigma-, w- and tau-polynomials: the coefficients of the chromatic
//! polynomial in the falling-factorial, shifted-binomial and signed
//! rising-factorial bases, read back as ordinary polynomials.

mod census;
mod checks;
mod recursion;

use num_traits::Zero;

pub use census::{census, conjecture_harness, realness, CensusRow, ConjectureReport, Realness, Witness};
pub use checks::{
    basis_consistency_check, coefficient_findings, complement_path_check, identity_suite, join_rule_check,
    map_enumeration_check, simplicial_recursion_check, IDENTITY_ORDER_LIMIT,
};
pub use recursion::{
    sigma_by_identification, sigma_by_partitions, tau_by_deletion_contraction, tau_by_partitions, tau_by_simplicial,
    w_by_identification, CROSS_CHECK_ORDER_LIMIT, TAU_PARTITION_ORDER_LIMIT,
};

use crate::error::{Error, Result};
use crate::exactpoly::{factorial, from_power, to_integer, to_power, to_rational, BasisTag};
use crate::flowchrom::chromatic_poly;
use crate::multigraph::generators::complement;
use crate::multigraph::Multigraph;
use crate::{Integer, Rational, ZPoly};

/// A polynomial `sum coeffs[i] x^i` of a graph of order `order`, where the
/// coefficients are one of the chromatic coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientPoly {
    pub order: usize,
    pub coeffs: Vec<Integer>,
}

/// `(a_i)` with `chi = sum a_i (x)_i`.
pub type SigmaPoly = CoefficientPoly;
/// `(w_i)` with `chi = sum w_i C(x+p-i, p)`.
pub type WPoly = CoefficientPoly;
/// `(c_i)` with `chi = sum (-1)^(p-i) c_i <x>_i`.
pub type TauPoly = CoefficientPoly;

impl CoefficientPoly {
    pub fn poly(&self) -> ZPoly {
        ZPoly::new(self.coeffs.clone())
    }

    /// `sum i! coeffs[i] x^i`.
    pub fn bar(&self) -> ZPoly {
        ZPoly::new(self.coeffs.iter().enumerate().map(|(i, c)| factorial(i) * c).collect())
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_else(Integer::zero)
    }
}

/// The chromatic polynomial of a simple graph with its three coordinate
/// vectors, all read off the single polynomial by exact basis conversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticBases {
    pub order: usize,
    pub size: usize,
    pub chromatic: ZPoly,
    pub sigma: SigmaPoly,
    pub w: WPoly,
    pub tau: TauPoly,
}

fn require_simple(g: &Multigraph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::Precondition("a simple graph is required".into()));
    }
    Ok(())
}

fn integral(coeffs: Vec<Rational>) -> Result<Vec<Integer>> {
    coeffs
        .into_iter()
        .map(|c| {
            c.is_integer()
                .then(|| c.to_integer())
                .ok_or_else(|| Error::Precondition(format!("fractional basis coefficient {c}")))
        })
        .collect()
}

impl ChromaticBases {
    pub fn new(g: &Multigraph) -> Result<Self> {
        require_simple(g)?;
        Self::from_chromatic(g.order(), g.size(), chromatic_poly(g)?)
    }

    /// Coordinates of a given chromatic polynomial of a graph with `order`
    /// vertices and `size` edges.
    pub fn from_chromatic(order: usize, size: usize, chromatic: ZPoly) -> Result<Self> {
        if chromatic.degree().is_some_and(|d| d > order) {
            return Err(Error::Precondition("chromatic polynomial degree exceeds the order".into()));
        }
        let q = to_rational(&chromatic);
        let a = integral(from_power(&q, BasisTag::FallingFactorial, order))?;
        let w = integral(from_power(&q, BasisTag::ShiftedBinomial, order))?;
        let rising = integral(from_power(&q, BasisTag::RisingFactorial, order))?;
        let c = rising.into_iter().enumerate().map(|(i, r)| if (order - i).is_multiple_of(2) { r } else { -r }).collect();
        let wrap = |coeffs| CoefficientPoly { order, coeffs };
        Ok(ChromaticBases { order, size, chromatic, sigma: wrap(a), w: wrap(w), tau: wrap(c) })
    }

    /// The least `k >= 0` with `chi(G, k) != 0`.
    pub fn chromatic_number(&self) -> usize {
        (0..=self.order)
            .find(|&k| !self.chromatic.eval(&Integer::from(k)).is_zero())
            .unwrap_or(self.order)
    }

    /// `chi` rebuilt from one coordinate vector.
    pub fn reconstruct(&self, tag: BasisTag) -> ZPoly {
        let p = self.order;
        let coeffs: Vec<Integer> = match tag {
            BasisTag::Power => return self.chromatic.clone(),
            BasisTag::FallingFactorial => self.sigma.coeffs.clone(),
            BasisTag::ShiftedBinomial => self.w.coeffs.clone(),
            BasisTag::RisingFactorial => {
                self.tau.coeffs.iter().enumerate().map(|(i, c)| if (p - i).is_multiple_of(2) { c.clone() } else { -c }).collect()
            }
        };
        let lifted: Vec<Rational> = coeffs.into_iter().map(Rational::from_integer).collect();
        to_integer(&to_power(&lifted, tag, p)).expect("integral combination of integral basis elements")
    }
}

pub fn sigma_poly(g: &Multigraph) -> Result<SigmaPoly> {
    Ok(ChromaticBases::new(g)?.sigma)
}

/// `sum i! a_i x^i`.
pub fn sigma_bar(g: &Multigraph) -> Result<ZPoly> {
    Ok(ChromaticBases::new(g)?.sigma.bar())
}

/// `h(G, x) = sigma(complement of G, x)`.
pub fn adjoint_poly(g: &Multigraph) -> Result<ZPoly> {
    require_simple(g)?;
    Ok(sigma_poly(&complement(g))?.poly())
}

pub fn w_poly(g: &Multigraph) -> Result<WPoly> {
    Ok(ChromaticBases::new(g)?.w)
}

pub fn tau_poly(g: &Multigraph) -> Result<TauPoly> {
    Ok(ChromaticBases::new(g)?.tau)
}

/// `sum i! c_i x^i`.
pub fn tau_bar(g: &Multigraph) -> Result<ZPoly> {
    Ok(ChromaticBases::new(g)?.tau.bar())
}

/// `sum_k coeffs[k] B_k(x)` with `B_k` the Bell polynomials.
pub fn bell_combination(coeffs: &[Integer]) -> ZPoly {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(ZPoly::zero(), |acc, (k, c)| acc + crate::exactpoly::bell_poly(k).scale(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{bell_poly, binomial, stirling2};
    use crate::multigraph::generators::{complete, complete_multipartite, cycle, empty, path, star};

    fn ints(v: &[i64]) -> ZPoly {
        ZPoly::from_ints(v)
    }

    #[test]
    fn sigma_golden_values() {
        for p in 1..=6 {
            assert_eq!(sigma_poly(&complete(p)).unwrap().poly(), ZPoly::monomial(1.into(), p));
            let expected = (1..=p).fold(ZPoly::zero(), |acc, k| acc + ZPoly::monomial(stirling2(p, k), k));
            assert_eq!(sigma_poly(&empty(p)).unwrap().poly(), expected);
            assert_eq!(sigma_poly(&empty(p)).unwrap().poly(), bell_poly(p));
        }
        let k23 = complete_multipartite(&[2, 3]);
        assert_eq!(sigma_poly(&k23).unwrap().poly(), bell_poly(2) * bell_poly(3));
        let k122 = complete_multipartite(&[1, 2, 2]);
        assert_eq!(sigma_poly(&k122).unwrap().poly(), bell_poly(1) * bell_poly(2) * bell_poly(2));
    }

    #[test]
    fn w_golden_values() {
        for p in 1..=6 {
            assert_eq!(w_poly(&complete(p)).unwrap().poly(), ZPoly::monomial(factorial(p), p));
        }
        assert_eq!(w_poly(&path(3)).unwrap().poly(), ints(&[0, 0, 2, 4]));
        assert_eq!(w_poly(&empty(3)).unwrap().poly(), ints(&[0, 1, 4, 1]));
        assert_eq!(w_poly(&cycle(4)).unwrap().poly(), ints(&[0, 0, 2, 8, 14]));
    }

    #[test]
    fn tau_golden_values() {
        assert_eq!(tau_poly(&complete(2)).unwrap().poly(), ints(&[0, 2, 1]));
        let p3 = bell_poly(3) + bell_poly(2).scale(&2.into()) + bell_poly(1);
        assert_eq!(tau_poly(&path(3)).unwrap().poly(), p3);
        for p in 1..=6 {
            assert_eq!(tau_poly(&empty(p)).unwrap().poly(), bell_poly(p));
            let tree = (1..=p).fold(ZPoly::zero(), |acc, k| acc + bell_poly(k).scale(&binomial(p as i64 - 1, k as i64 - 1)));
            assert_eq!(tau_poly(&star(p - 1)).unwrap().poly(), tree);
            assert_eq!(tau_poly(&path(p)).unwrap().poly(), tree);
        }
    }

    #[test]
    fn bars_and_adjoint() {
        assert_eq!(sigma_bar(&path(3)).unwrap(), ints(&[0, 0, 2, 6]));
        assert_eq!(tau_bar(&complete(2)).unwrap(), ints(&[0, 2, 2]));
        assert_eq!(adjoint_poly(&empty(4)).unwrap(), ZPoly::monomial(1.into(), 4));
        assert_eq!(adjoint_poly(&complete(3)).unwrap(), bell_poly(3));
    }

    #[test]
    fn reconstruction_and_limits() {
        let b = ChromaticBases::new(&cycle(5)).unwrap();
        for tag in BasisTag::ALL {
            assert_eq!(b.reconstruct(tag), b.chromatic, "{tag:?}");
        }
        assert_eq!(b.chromatic_number(), 3);
        assert_eq!((b.sigma.coeff(5), b.tau.coeff(5)), (1.into(), 1.into()));
        let multi = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(sigma_poly(&multi).is_err());
        assert!(w_poly(&multi).is_err());
        assert!(adjoint_poly(&multi).is_err());
    }
}
