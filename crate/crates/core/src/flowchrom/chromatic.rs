//! Chromatic polynomials of simple graphs over bitmask adjacency.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::ZPoly;

const MAX_ORDER: usize = 63;

type Adj = Vec<u64>;

fn check_order(g: &Multigraph) -> Result<()> {
    if g.order() > MAX_ORDER {
        return Err(Error::TooLarge { what: "graph order for chromatic polynomial", limit: MAX_ORDER });
    }
    Ok(())
}

/// Adjacency masks of the underlying simple graph, or `None` when a loop
/// makes every colouring improper.
fn simple_adjacency(g: &Multigraph) -> Option<Adj> {
    if g.has_loops() {
        None
    } else {
        Some(g.adjacency_masks())
    }
}

fn edge_total(adj: &Adj) -> u32 {
    adj.iter().map(|m| m.count_ones()).sum::<u32>() / 2
}

fn remove_vertex(adj: &Adj, v: usize) -> Adj {
    let low = (1u64 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}

/// Merges `v` into `u`, dropping parallel copies.
fn identify(adj: &Adj, u: usize, v: usize) -> Adj {
    let mut a = adj.clone();
    let merged = (a[u] | a[v]) & !(1 << u) & !(1 << v);
    a[u] = merged;
    for x in 0..a.len() {
        if merged >> x & 1 == 1 {
            a[x] |= 1 << u;
        }
    }
    remove_vertex(&a, v)
}

fn component_of(adj: &Adj, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

fn restrict(adj: &Adj, mask: u64) -> Adj {
    let verts: Vec<usize> = (0..adj.len()).filter(|v| mask >> v & 1 == 1).collect();
    verts
        .iter()
        .map(|&v| verts.iter().enumerate().filter(|(_, &u)| adj[v] >> u & 1 == 1).fold(0u64, |m, (i, _)| m | 1 << i))
        .collect()
}

struct Engine {
    memo: HashMap<Adj, ZPoly>,
}

impl Engine {
    fn solve(&mut self, adj: Adj) -> ZPoly {
        let n = adj.len();
        if n == 0 {
            return ZPoly::one();
        }
        // Pendant and isolated vertices peel off with a linear factor.
        if let Some(v) = (0..n).find(|&v| adj[v].count_ones() <= 1) {
            let factor = if adj[v] == 0 { ZPoly::x() } else { ZPoly::from_ints(&[-1, 1]) };
            return factor * self.solve(remove_vertex(&adj, v));
        }
        let m = edge_total(&adj) as usize;
        if m == n * (n - 1) / 2 {
            return ZPoly::falling_factorial(n);
        }
        let comp = component_of(&adj, 0);
        if comp != (1u64 << n) - 1 {
            let rest = ((1u64 << n) - 1) & !comp;
            return self.solve(restrict(&adj, comp)) * self.solve(restrict(&adj, rest));
        }
        if let Some(hit) = self.memo.get(&adj) {
            return hit.clone();
        }
        let out = if 4 * m > n * (n - 1) {
            // Dense: add a missing edge and identify its ends.
            let (u, v) = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| adj[u] >> v & 1 == 0)
                .max_by_key(|&(u, v)| (adj[u] & adj[v]).count_ones())
                .expect("missing edge");
            let mut added = adj.clone();
            added[u] |= 1 << v;
            added[v] |= 1 << u;
            self.solve(added) + self.solve(identify(&adj, u, v))
        } else {
            let (u, v) = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| adj[u] >> v & 1 == 1)
                .max_by_key(|&(u, v)| (adj[u] & adj[v]).count_ones())
                .expect("an edge");
            let mut deleted = adj.clone();
            deleted[u] &= !(1 << v);
            deleted[v] &= !(1 << u);
            self.solve(deleted) - self.solve(identify(&adj, u, v))
        };
        self.memo.insert(adj, out.clone());
        out
    }
}

/// `chi(G, x)` by deletion-contraction on the underlying simple graph.
/// Parallel edges collapse; a loop gives the zero polynomial.
pub fn chromatic_poly(g: &Multigraph) -> Result<ZPoly> {
    check_order(g)?;
    let Some(adj) = simple_adjacency(g) else {
        return Ok(ZPoly::zero());
    };
    Ok(Engine { memo: HashMap::new() }.solve(adj))
}

/// `a_k`: the number of partitions of the vertex set into `k` nonempty
/// independent sets, for `k = 0..=n`. Then `chi = sum a_k (x)_k`.
pub fn independent_partition_counts(g: &Multigraph) -> Result<Vec<BigInt>> {
    const LIMIT: usize = 20;
    let n = g.order();
    if n > LIMIT {
        return Err(Error::TooLarge { what: "graph order for independent partitions", limit: LIMIT });
    }
    let Some(adj) = simple_adjacency(g) else {
        return Ok(vec![BigInt::zero(); n + 1]);
    };
    let size = 1usize << n;
    let independent: Vec<bool> = (0..size as u64)
        .map(|s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .collect();
    // table[s][k]: partitions of s into k independent blocks.
    let mut table: Vec<Vec<BigInt>> = vec![Vec::new(); size];
    table[0] = vec![BigInt::one()];
    for s in 1..size as u64 {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut row = vec![BigInt::zero(); s.count_ones() as usize + 1];
        let mut sub = rest;
        loop {
            let block = sub | low;
            if independent[block as usize] {
                for (k, c) in table[(s & !block) as usize].iter().enumerate() {
                    row[k + 1] += c;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        table[s as usize] = row;
    }
    let mut out = std::mem::take(&mut table[size - 1]);
    out.resize(n + 1, BigInt::zero());
    Ok(out)
}

/// `chi(G, x)` as `sum a_k (x)_k` from independent-set partitions.
pub fn chromatic_from_partitions(g: &Multigraph) -> Result<ZPoly> {
    let counts = independent_partition_counts(g)?;
    Ok(counts
        .iter()
        .enumerate()
        .fold(ZPoly::zero(), |acc, (k, a)| acc + ZPoly::falling_factorial(k).scale(a)))
}

/// Subset expansion `sum_A (-1)^|A| x^c(A)`.
pub fn chromatic_subset_expansion(g: &Multigraph) -> Result<ZPoly> {
    const LIMIT: usize = 20;
    if g.size() > LIMIT {
        return Err(Error::TooLarge { what: "edge count for subset expansion", limit: LIMIT });
    }
    let mut coeffs = vec![BigInt::zero(); g.order() + 1];
    for a in 0..1u64 << g.size() {
        let c = g.components_mask(a);
        if a.count_ones() % 2 == 0 {
            coeffs[c] += 1;
        } else {
            coeffs[c] -= 1;
        }
    }
    Ok(ZPoly::new(coeffs))
}

/// `(-1)^p chi(G, -k)`, the number of pairs of a colouring-like map and a
/// compatible acyclic orientation.
pub fn chi_tilde(g: &Multigraph, k: i64) -> Result<BigInt> {
    let chi = chromatic_poly(g)?;
    let value = chi.eval(&BigInt::from(-k));
    Ok(if g.order().is_multiple_of(2) { value } else { -value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle, empty, path, wheel};

    #[test]
    fn known_families() {
        assert_eq!(chromatic_poly(&complete(5)).unwrap(), ZPoly::falling_factorial(5));
        assert_eq!(chromatic_poly(&empty(4)).unwrap(), ZPoly::monomial(BigInt::one(), 4));
        let xm1 = ZPoly::from_ints(&[-1, 1]);
        assert_eq!(chromatic_poly(&cycle(4)).unwrap(), xm1.pow(4) + xm1.clone());
        assert_eq!(chromatic_poly(&path(5)).unwrap(), ZPoly::x() * xm1.pow(4));
    }

    #[test]
    fn loops_and_parallels() {
        let looped = Multigraph::from_pairs(2, &[(0, 1), (1, 1)]).unwrap();
        assert!(chromatic_poly(&looped).unwrap().is_zero());
        let doubled = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(chromatic_poly(&doubled).unwrap(), ZPoly::falling_factorial(2));
    }

    #[test]
    fn three_routes_agree() {
        for g in [wheel(5), cycle(7), complete(4), crate::multigraph::generators::complete_multipartite(&[2, 3])] {
            let dc = chromatic_poly(&g).unwrap();
            assert_eq!(dc, chromatic_from_partitions(&g).unwrap(), "{g}");
            assert_eq!(dc, chromatic_subset_expansion(&g).unwrap(), "{g}");
        }
    }

    #[test]
    fn partition_counts_of_path() {
        let counts = independent_partition_counts(&path(3)).unwrap();
        assert_eq!(counts, vec![0.into(), 0.into(), 1.into(), 1.into()]);
    }

    #[test]
    fn reciprocity_values() {
        assert_eq!(chi_tilde(&complete(3), 1).unwrap(), BigInt::from(6));
        assert_eq!(chi_tilde(&empty(3), 2).unwrap(), BigInt::from(8));
    }
}
