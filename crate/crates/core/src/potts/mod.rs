//! The multivariate Potts partition function `Z_G(q, {w_e})`.
//!
//! Three evaluation modes share one deletion-contraction engine: symbolic in
//! `q` with rational edge weights, symbolic in `(q, y)` with every weight
//! equal to `y`, and fully numeric. Only the numeric mode applies series
//! reduction, since it divides by `q + w1 + w2`.

mod engine;
mod independence;
mod probes;

pub use independence::{
    fp_condition_check, independence_poly, independence_poly_subset, polymer_graph, potts_to_independence,
    VertexWeightedGraph,
};
pub use probes::{block_factorization_check, series_reduction_check, sign_probe, sign_probes, SignRegime};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph};
use crate::{QPoly, Rational, ZBiPoly};

use engine::{Engine, WeightedGraph};

/// Edge weights `w_e`, keyed by edge id.
pub type WeightMap = BTreeMap<EdgeId, Rational>;

pub const SUBSET_EDGE_LIMIT: usize = 22;

/// The same weight on every edge of `g`.
pub fn uniform_weights(g: &Multigraph, w: &Rational) -> WeightMap {
    g.edge_ids().into_iter().map(|id| (id, w.clone())).collect()
}

fn weights_in_order(g: &Multigraph, weights: &WeightMap) -> Result<Vec<Rational>> {
    g.edges()
        .iter()
        .map(|e| weights.get(&e.id).cloned().ok_or_else(|| Error::Precondition(format!("no weight for edge {}", e.id))))
        .collect()
}

fn check_subset_bound(g: &Multigraph) -> Result<()> {
    if g.size() > SUBSET_EDGE_LIMIT {
        return Err(Error::TooLarge { what: "edge count for subset expansion", limit: SUBSET_EDGE_LIMIT });
    }
    Ok(())
}

/// `Z_G(q, {w_e}) = sum over A of q^c(A) prod_{e in A} w_e`, as a polynomial
/// in `q`.
pub fn potts_subset(g: &Multigraph, weights: &WeightMap) -> Result<QPoly> {
    check_subset_bound(g)?;
    let w = weights_in_order(g, weights)?;
    let mut by_components = vec![Rational::zero(); g.order() + 1];
    // Depth-first over edges, carrying the weight product.
    let mut stack = vec![(0usize, 0u64, Rational::one())];
    while let Some((i, mask, product)) = stack.pop() {
        if product.is_zero() {
            continue;
        }
        if i == w.len() {
            by_components[g.components_mask(mask)] += product;
            continue;
        }
        stack.push((i + 1, mask | 1 << i, &product * &w[i]));
        stack.push((i + 1, mask, product));
    }
    Ok(QPoly::new(by_components))
}

/// `Z_G(q, y) = sum over A of q^c(A) y^|A|` (every weight equal to `y`);
/// `x` carries `q`.
pub fn potts_subset_uniform(g: &Multigraph) -> Result<ZBiPoly> {
    check_subset_bound(g)?;
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for mask in 0..1u64 << g.size() {
        *counts.entry((g.components_mask(mask) as u32, mask.count_ones())).or_default() += 1;
    }
    Ok(ZBiPoly::from_terms(counts.into_iter().map(|(k, c)| (k, BigInt::from(c)))))
}

/// `Z_G(q, {w_e})` in `q` by deletion-contraction with eager parallel
/// reduction.
pub fn potts_dc(g: &Multigraph, weights: &WeightMap) -> Result<QPoly> {
    let w = weights_in_order(g, weights)?;
    let wg = WeightedGraph::new(g, |i| QPoly::constant(w[i].clone()));
    Ok(Engine::new(QPoly::x(), false).solve(wg))
}

/// `Z_G(q, y)` with every weight equal to `y`, by deletion-contraction.
pub fn potts_dc_uniform(g: &Multigraph) -> ZBiPoly {
    let wg = WeightedGraph::new(g, |_| ZBiPoly::y());
    Engine::new(ZBiPoly::x(), false).solve(wg)
}

/// `Z_G(q, {w_e})` at a rational `q`. With `series` set, degree-2 vertices
/// are suppressed whenever `q + w1 + w2` is nonzero.
pub fn potts_numeric(g: &Multigraph, q: &Rational, weights: &WeightMap, series: bool) -> Result<Rational> {
    let w = weights_in_order(g, weights)?;
    let wg = WeightedGraph::new(g, |i| w[i].clone());
    Ok(Engine::new(q.clone(), series).solve(wg))
}

/// Whitney rank polynomial `R_G(x, y) = sum over A of x^(r(E)-r(A)) y^(|A|-r(A))`,
/// read off `x^-c y^-|V| Z_G(xy, y)`.
pub fn whitney_rank(g: &Multigraph) -> ZBiPoly {
    let z = potts_dc_uniform(g);
    let (n, c) = (g.order() as u32, g.component_count() as u32);
    ZBiPoly::from_terms(z.terms().map(|(&(a, b), v)| ((a - c, a + b - n), v.clone())))
}

/// `T_G(x, y) = R_G(x - 1, y - 1)`.
pub fn tutte_from_potts(g: &Multigraph) -> ZBiPoly {
    let one = ZBiPoly::one();
    whitney_rank(g).compose(&(ZBiPoly::x() - one.clone()), &(ZBiPoly::y() - one))
}

/// `Z_G(x, -1)`, the chromatic polynomial.
pub fn chromatic_from_potts(g: &Multigraph) -> QPoly {
    potts_dc(g, &uniform_weights(g, &-Rational::one())).expect("weights are total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::to_rational;
    use crate::flowchrom::chromatic_poly;
    use crate::multigraph::generators::{complete, cycle, empty, path, star, wheel};
    use crate::scalar::rational;
    use crate::tutte::tutte_dc;

    fn ramp(g: &Multigraph) -> WeightMap {
        g.edge_ids().into_iter().enumerate().map(|(i, id)| (id, rational(2 * i as i64 - 3, i as i64 + 2))).collect()
    }

    fn linear(w: &Rational) -> QPoly {
        QPoly::new(vec![w.clone(), Rational::one()])
    }

    #[test]
    fn golden_values() {
        assert_eq!(potts_subset(&empty(3), &WeightMap::new()).unwrap(), QPoly::x().pow(3));
        let w = rational(5, 3);
        let k2 = complete(2);
        let expected = QPoly::x() * linear(&w);
        assert_eq!(potts_subset(&k2, &uniform_weights(&k2, &w)).unwrap(), expected);
        assert_eq!(potts_dc(&k2, &uniform_weights(&k2, &w)).unwrap(), expected);
        let looped = Multigraph::from_pairs(1, &[(0, 0)]).unwrap();
        let one_plus = QPoly::x().scale(&(Rational::one() + &w));
        assert_eq!(potts_subset(&looped, &uniform_weights(&looped, &w)).unwrap(), one_plus);
        assert_eq!(potts_dc(&looped, &uniform_weights(&looped, &w)).unwrap(), one_plus);
    }

    #[test]
    fn trees_and_cycles() {
        for g in [path(5), star(4)] {
            let ws = ramp(&g);
            let expected = ws.values().fold(QPoly::x(), |acc, w| acc * linear(w));
            assert_eq!(potts_dc(&g, &ws).unwrap(), expected);
            assert_eq!(potts_subset(&g, &ws).unwrap(), expected);
        }
        for n in 2..=6 {
            let g = cycle(n);
            let ws = ramp(&g);
            let prod = ws.values().fold(QPoly::one(), |acc, w| acc * linear(w));
            let all = ws.values().fold(Rational::one(), |acc, w| acc * w);
            let expected = prod + QPoly::from_ints(&[-1, 1]).scale(&all);
            assert_eq!(potts_subset(&g, &ws).unwrap(), expected, "C_{n}");
            assert_eq!(potts_dc(&g, &ws).unwrap(), expected, "C_{n}");
        }
    }

    #[test]
    fn parallel_pair_merges() {
        let (a, b) = (rational(1, 2), rational(-2, 3));
        let pair = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        let ws: WeightMap = pair.edge_ids().into_iter().zip([a.clone(), b.clone()]).collect();
        let merged = (Rational::one() + a) * (Rational::one() + b) - Rational::one();
        let single = complete(2);
        let expected = potts_subset(&single, &uniform_weights(&single, &merged)).unwrap();
        assert_eq!(potts_subset(&pair, &ws).unwrap(), expected);
        assert_eq!(potts_dc(&pair, &ws).unwrap(), expected);
    }

    #[test]
    fn routes_agree_on_multigraphs() {
        let g = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 3), (0, 1), (1, 3), (0, 3)]).unwrap();
        let ws = ramp(&g);
        let sym = potts_subset(&g, &ws).unwrap();
        assert_eq!(potts_dc(&g, &ws).unwrap(), sym);
        for (qn, qd) in [(3, 1), (-1, 2), (7, 5)] {
            let q = rational(qn, qd);
            assert_eq!(potts_numeric(&g, &q, &ws, true).unwrap(), sym.eval(&q));
            assert_eq!(potts_numeric(&g, &q, &ws, false).unwrap(), sym.eval(&q));
        }
        assert_eq!(potts_dc_uniform(&g), potts_subset_uniform(&g).unwrap());
    }

    #[test]
    fn series_reduction_with_vanishing_denominator() {
        // q + w1 + w2 = 0 at the middle vertex of the path.
        let g = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let ws: WeightMap = g.edge_ids().into_iter().zip([rational(-1, 1), rational(-1, 1), rational(1, 3)]).collect();
        let q = rational(2, 1);
        let exact = potts_subset(&g, &ws).unwrap().eval(&q);
        assert_eq!(potts_numeric(&g, &q, &ws, true).unwrap(), exact);
    }

    #[test]
    fn missing_weight_is_an_error() {
        assert!(potts_dc(&complete(3), &WeightMap::new()).is_err());
        assert!(potts_subset(&complete(7), &WeightMap::new()).is_err());
    }

    #[test]
    fn rank_and_tutte() {
        let k2 = complete(2);
        assert_eq!(whitney_rank(&k2), ZBiPoly::from_terms([((1, 0), BigInt::one()), ((0, 0), BigInt::one())]));
        let c3 = tutte_from_potts(&cycle(3));
        let expected = ZBiPoly::from_terms([((2, 0), 1), ((1, 0), 1), ((0, 1), 1)].map(|(k, c)| (k, BigInt::from(c))));
        assert_eq!(c3, expected);
        let looped = Multigraph::from_pairs(4, &[(0, 1), (1, 2), (2, 0), (3, 3), (0, 1)]).unwrap();
        for g in [complete(4), wheel(5), looped] {
            assert_eq!(tutte_from_potts(&g), tutte_dc(&g), "{g}");
        }
    }

    #[test]
    fn chromatic_specialization() {
        for g in [complete(4), cycle(5), wheel(4), empty(2)] {
            assert_eq!(chromatic_from_potts(&g), to_rational(&chromatic_poly(&g).unwrap()), "{g}");
        }
    }
}
