//! Multivariate independent-set polynomials and the polymer representation
//! of the partition function.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use super::{potts_subset, WeightMap};
use crate::error::{Error, Result};
use crate::exactpoly::bipoly::pow_scalar;
use crate::multigraph::Multigraph;
use crate::report::IdentityReport;
use crate::Rational;

pub const INDEPENDENCE_VERTEX_LIMIT: usize = 64;
pub const SUBSET_VERTEX_LIMIT: usize = 25;
pub const POLYMER_VERTEX_LIMIT: usize = 6;
pub const FP_VERTEX_LIMIT: usize = 12;

/// A simple graph on `0..n` given by neighbor bitmasks, with a weight per
/// vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexWeightedGraph {
    adj: Vec<u64>,
    weights: Vec<Rational>,
}

impl VertexWeightedGraph {
    pub fn new(adj: Vec<u64>, weights: Vec<Rational>) -> Result<Self> {
        let n = adj.len();
        if n > INDEPENDENCE_VERTEX_LIMIT {
            return Err(Error::TooLarge { what: "vertex count of a weighted graph", limit: INDEPENDENCE_VERTEX_LIMIT });
        }
        if weights.len() != n {
            return Err(Error::Precondition("one weight per vertex is required".into()));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 || row >> v & 1 == 1 {
                return Err(Error::Precondition(format!("bad neighbor mask at vertex {v}")));
            }
            if (0..n).any(|u| row >> u & 1 != adj[u] >> v & 1) {
                return Err(Error::Precondition("adjacency must be symmetric".into()));
            }
        }
        Ok(VertexWeightedGraph { adj, weights })
    }

    /// Underlying simple graph of `g` (loops and multiplicities dropped).
    pub fn from_multigraph(g: &Multigraph, weights: Vec<Rational>) -> Result<Self> {
        Self::new(g.simplify().adjacency_masks(), weights)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn with_weights(&self, weights: Vec<Rational>) -> Result<Self> {
        Self::new(self.adj.clone(), weights)
    }

    fn full(&self) -> u64 {
        if self.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.order()) - 1
        }
    }

    fn closed(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    /// `I(H[S], w)` for the vertex set `mask`, branching on the lowest vertex.
    pub fn independence_on(&self, mask: u64) -> Rational {
        let mut memo = HashMap::new();
        self.branch(mask & self.full(), &mut memo)
    }

    fn branch(&self, mask: u64, memo: &mut HashMap<u64, Rational>) -> Rational {
        if mask == 0 {
            return Rational::one();
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let v = mask.trailing_zeros() as usize;
        let without = self.branch(mask & !(1 << v), memo);
        let with = if self.weights[v].is_zero() {
            Rational::zero()
        } else {
            &self.weights[v] * self.branch(mask & !self.closed(v), memo)
        };
        let out = without + with;
        memo.insert(mask, out.clone());
        out
    }
}

/// `I(H, w)`: the weighted sum over independent sets, the empty set
/// contributing 1.
pub fn independence_poly(h: &VertexWeightedGraph) -> Rational {
    h.independence_on(h.full())
}

/// `I(H, w)` by testing every vertex subset.
pub fn independence_poly_subset(h: &VertexWeightedGraph) -> Result<Rational> {
    let n = h.order();
    if n > SUBSET_VERTEX_LIMIT {
        return Err(Error::TooLarge { what: "vertex count for subset expansion", limit: SUBSET_VERTEX_LIMIT });
    }
    let mut total = Rational::zero();
    for set in 0..1u64 << n {
        let independent = (0..n).all(|v| set >> v & 1 == 0 || h.adj[v] & set == 0);
        if independent {
            total += (0..n).filter(|v| set >> v & 1 == 1).fold(Rational::one(), |acc, v| acc * &h.weights[v]);
        }
    }
    Ok(total)
}

fn induced_connected(g: &Multigraph, set: u64) -> bool {
    let start = set.trailing_zeros() as usize;
    let mut reached = 1u64 << start;
    loop {
        let mut next = reached;
        for e in g.edges() {
            if set >> e.u & 1 == 1 && set >> e.v & 1 == 1 && (reached >> e.u & 1 == 1 || reached >> e.v & 1 == 1) {
                next |= 1 << e.u | 1 << e.v;
            }
        }
        if next == reached {
            return reached == set;
        }
        reached = next;
    }
}

/// Polymers of a loopless `g`: vertex sets `S` with `|S| >= 2` inducing a
/// connected subgraph, adjacent when they intersect, weighted by
/// `q^(1-|S|)` times the weight sum over connected spanning subgraphs of
/// `G[S]`. Returns the weighted intersection graph and the polymer sets.
pub fn polymer_graph(g: &Multigraph, q: &Rational, weights: &WeightMap) -> Result<(VertexWeightedGraph, Vec<u64>)> {
    let n = g.order();
    if n > POLYMER_VERTEX_LIMIT {
        return Err(Error::TooLarge { what: "vertex count for the polymer graph", limit: POLYMER_VERTEX_LIMIT });
    }
    if q.is_zero() {
        return Err(Error::Precondition("q must be nonzero".into()));
    }
    if g.has_loops() {
        return Err(Error::Precondition("the polymer representation needs a loopless graph".into()));
    }
    let sets: Vec<u64> = (1..1u64 << n).filter(|s| s.count_ones() >= 2 && induced_connected(g, *s)).collect();
    let mut poly_weights = Vec::with_capacity(sets.len());
    for &s in &sets {
        let inside: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
        let sub = g.induced_subgraph(&inside);
        let z = potts_subset(&sub, weights)?;
        // Connected spanning subgraphs are the q^1 terms of Z(G[S]).
        let size = inside.len() as u32;
        poly_weights.push(z.coeff(1) / pow_scalar(q, size - 1));
    }
    let adj: Vec<u64> = sets
        .iter()
        .enumerate()
        .map(|(i, &a)| sets.iter().enumerate().filter(|&(j, &b)| j != i && a & b != 0).fold(0u64, |m, (j, _)| m | 1 << j))
        .collect();
    Ok((VertexWeightedGraph::new(adj, poly_weights)?, sets))
}

/// `Z_G(q, {w_e}) / q^|V| = I(polymer graph, w)` at a rational `q`.
pub fn potts_to_independence(g: &Multigraph, q: &Rational, weights: &WeightMap) -> Result<IdentityReport> {
    let (polymers, _) = polymer_graph(g, q, weights)?;
    let lhs = potts_subset(g, weights)?.eval(q) / pow_scalar(q, g.order() as u32);
    let rhs = independence_poly(&polymers);
    Ok(IdentityReport::compare("partition function as polymer gas", format!("{g} at q={q}"), &lhs, &rhs))
}

/// If `|w(u)| I(H[N[u]], mu) <= mu(u)` for every `u`, asserts that
/// `I(H[S], w)` is nonzero for every vertex subset `S`.
pub fn fp_condition_check(h: &VertexWeightedGraph, mu: &[Rational]) -> Result<IdentityReport> {
    let n = h.order();
    if n > FP_VERTEX_LIMIT {
        return Err(Error::TooLarge { what: "vertex count for the zero-free check", limit: FP_VERTEX_LIMIT });
    }
    if mu.len() != n || mu.iter().any(|m| !m.is_positive()) {
        return Err(Error::Precondition("mu must assign a positive value to every vertex".into()));
    }
    let name = "zero-free polymer condition";
    let instance = format!("{n} vertices");
    let radius = h.with_weights(mu.to_vec())?;
    for u in 0..n {
        let bound = h.weights[u].abs() * radius.independence_on(h.closed(u));
        if bound > mu[u] {
            return Ok(IdentityReport::skipped(name, instance, format!("hypothesis-failed at vertex {u}")));
        }
    }
    // values[S] = I(H[S], w), built up from the lowest vertex of S.
    let mut values = vec![Rational::one(); 1 << n];
    for s in 1..values.len() {
        let v = s.trailing_zeros() as usize;
        let rest = values[s & !(1 << v)].clone();
        let apart = values[s & !(h.closed(v) as usize)].clone();
        values[s] = rest + &h.weights[v] * apart;
    }
    let zero = values.iter().position(|x| x.is_zero());
    Ok(IdentityReport::check(name, instance, zero.is_none(), || {
        (format!("I(H[{:#b}], w)", zero.unwrap_or(0)), "0".into())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle, empty, path};
    use crate::potts::uniform_weights;
    use crate::scalar::rational;

    fn weighted(g: &Multigraph, ws: &[Rational]) -> VertexWeightedGraph {
        VertexWeightedGraph::from_multigraph(g, ws.to_vec()).unwrap()
    }

    #[test]
    fn small_independence_polynomials() {
        let ws = [rational(2, 1), rational(3, 1), rational(5, 1)];
        let k3 = weighted(&complete(3), &ws);
        assert_eq!(independence_poly(&k3), rational(11, 1));
        let p3 = weighted(&path(3), &ws);
        assert_eq!(independence_poly(&p3), rational(21, 1));
        assert_eq!(independence_poly_subset(&p3).unwrap(), rational(21, 1));
        let zeros = weighted(&cycle(5), &vec![Rational::zero(); 5]);
        assert_eq!(independence_poly(&zeros), Rational::one());
    }

    #[test]
    fn polymer_bridge() {
        let k2 = complete(2);
        let q = rational(2, 1);
        let (h, sets) = polymer_graph(&k2, &q, &uniform_weights(&k2, &Rational::one())).unwrap();
        assert_eq!(sets, vec![0b11]);
        assert_eq!(h.weights(), &[rational(1, 2)]);
        assert!(potts_to_independence(&k2, &q, &uniform_weights(&k2, &Rational::one())).unwrap().passed());
        let n3 = empty(3);
        assert!(potts_to_independence(&n3, &q, &WeightMap::new()).unwrap().passed());
        let c3 = cycle(3);
        let ws: WeightMap = c3.edge_ids().into_iter().zip([rational(1, 2), rational(-2, 3), rational(4, 1)]).collect();
        assert!(potts_to_independence(&c3, &rational(3, 1), &ws).unwrap().passed());
        assert!(potts_to_independence(&c3, &Rational::zero(), &ws).is_err());
    }

    #[test]
    fn zero_free_condition() {
        let single = VertexWeightedGraph::new(vec![0], vec![rational(-1, 4)]).unwrap();
        assert!(fp_condition_check(&single, &[rational(1, 2)]).unwrap().passed());
        let heavy = VertexWeightedGraph::new(vec![0], vec![rational(-2, 1)]).unwrap();
        let report = fp_condition_check(&heavy, &[rational(1, 2)]).unwrap();
        assert!(!report.passed() && !report.failed());
        let idle = weighted(&complete(4), &vec![Rational::zero(); 4]);
        assert!(fp_condition_check(&idle, &vec![rational(1, 3); 4]).unwrap().passed());
        assert!(fp_condition_check(&idle, &vec![Rational::zero(); 4]).is_err());
    }
}
