//! Orientation enumeration oracles.

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub const ORIENTATION_EDGE_LIMIT: usize = 14;
pub const CHI_TILDE_VERTEX_LIMIT: usize = 5;
pub const SOURCE_DP_VERTEX_LIMIT: usize = 16;

/// Arcs of the orientation selected by bit `i` of `bits` (set: `v -> u`).
fn arcs_of(g: &Multigraph, bits: u32) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| if bits >> i & 1 == 1 { (e.v, e.u) } else { (e.u, e.v) })
        .collect()
}

fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    for &(a, b) in arcs {
        if a == b {
            return false;
        }
        indeg[b] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = ready.pop() {
        removed += 1;
        for &(a, b) in arcs {
            if a == v {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(b);
                }
            }
        }
    }
    removed == n
}

fn acyclic_orientations(g: &Multigraph) -> Result<Vec<Vec<(usize, usize)>>> {
    if g.size() > ORIENTATION_EDGE_LIMIT {
        return Err(Error::TooLarge { what: "edge count for orientation enumeration", limit: ORIENTATION_EDGE_LIMIT });
    }
    Ok((0..1u32 << g.size())
        .map(|bits| arcs_of(g, bits))
        .filter(|arcs| is_acyclic(g.order(), arcs))
        .collect())
}

/// Number of acyclic orientations, by enumerating all `2^m` orientations.
pub fn acyclic_orientation_count(g: &Multigraph) -> Result<u64> {
    Ok(acyclic_orientations(g)?.len() as u64)
}

/// Acyclic orientations of the simple graph with neighbor masks `adj`,
/// restricted to each vertex set: `a(S)` sums `(-1)^(|I|+1) a(S - I)` over
/// nonempty independent `I` inside `S` (the possible source sets).
pub fn acyclic_counts_by_sources(adj: &[u64]) -> Result<Vec<u64>> {
    let n = adj.len();
    if n > SOURCE_DP_VERTEX_LIMIT {
        return Err(Error::TooLarge { what: "vertex count for the source recursion", limit: SOURCE_DP_VERTEX_LIMIT });
    }
    let size = 1usize << n;
    let independent: Vec<bool> = (0..size as u64).map(|s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)).collect();
    let mut counts = vec![0i128; size];
    counts[0] = 1;
    for s in 1..size {
        let mut total = 0i128;
        let mut sub = s;
        while sub != 0 {
            if independent[sub] {
                let sign = if sub.count_ones() % 2 == 1 { 1 } else { -1 };
                total += sign * counts[s & !sub];
            }
            sub = (sub - 1) & s;
        }
        counts[s] = total;
    }
    Ok(counts.into_iter().map(|c| c as u64).collect())
}

/// Pairs `(theta, O)` with `O` acyclic and `theta: V -> {1..k}` weakly
/// increasing along every arc.
pub fn chi_tilde_enum(g: &Multigraph, k: u32) -> Result<u64> {
    let n = g.order();
    if n > CHI_TILDE_VERTEX_LIMIT {
        return Err(Error::TooLarge { what: "vertex count for compatible-pair enumeration", limit: CHI_TILDE_VERTEX_LIMIT });
    }
    let orientations = acyclic_orientations(g)?;
    let total = (k as u64).pow(n as u32);
    let mut count = 0;
    let mut theta = vec![0u32; n];
    for code in 0..total {
        let mut c = code;
        for t in theta.iter_mut() {
            *t = (c % k as u64) as u32;
            c /= k as u64;
        }
        count += orientations.iter().filter(|arcs| arcs.iter().all(|&(a, b)| theta[a] <= theta[b])).count() as u64;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle, empty};

    #[test]
    fn small_counts() {
        assert_eq!(acyclic_orientation_count(&cycle(4)).unwrap(), 14);
        assert_eq!(acyclic_orientation_count(&complete(4)).unwrap(), 24);
        assert_eq!(chi_tilde_enum(&complete(3), 1).unwrap(), 6);
        assert_eq!(chi_tilde_enum(&empty(3), 4).unwrap(), 64);
        let looped = Multigraph::from_pairs(2, &[(0, 0), (0, 1)]).unwrap();
        assert_eq!(acyclic_orientation_count(&looped).unwrap(), 0);
    }

    #[test]
    fn source_recursion_matches_enumeration() {
        for g in [cycle(5), complete(4), empty(3), crate::multigraph::generators::wheel(4)] {
            let counts = acyclic_counts_by_sources(&g.adjacency_masks()).unwrap();
            assert_eq!(*counts.last().unwrap(), acyclic_orientation_count(&g).unwrap());
        }
    }
}
