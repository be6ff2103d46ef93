//! Standard graph families. Edge ids are assigned `0..m` in construction order.

use super::graph::Multigraph;
use crate::error::{Error, Result};

fn build(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Multigraph {
    let pairs: Vec<_> = pairs.into_iter().collect();
    Multigraph::from_pairs(n, &pairs).expect("generator produced in-range edges")
}

pub fn empty(n: usize) -> Multigraph {
    Multigraph::new(n)
}

pub fn complete(n: usize) -> Multigraph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Multigraph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle on `n` vertices; `n = 1` is a loop and `n = 2` a digon.
pub fn cycle(n: usize) -> Multigraph {
    match n {
        0 => Multigraph::new(0),
        1 => build(1, [(0, 0)]),
        _ => build(n, (0..n).map(|v| (v, (v + 1) % n))),
    }
}

/// Two vertices joined by `k` parallel edges.
pub fn bundle(k: usize) -> Multigraph {
    build(2, std::iter::repeat_n((0, 1), k))
}

pub fn star(leaves: usize) -> Multigraph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// Hub 0 joined to every vertex of a rim cycle on `rim` vertices.
pub fn wheel(rim: usize) -> Multigraph {
    join(&empty(1), &cycle(rim))
}

pub fn complete_multipartite(parts: &[usize]) -> Multigraph {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut n = 0;
    for &p in parts {
        offsets.push(n);
        n += p;
    }
    let mut pairs = Vec::new();
    for (i, &a) in parts.iter().enumerate() {
        for (j, &b) in parts.iter().enumerate().skip(i + 1) {
            for u in 0..a {
                for v in 0..b {
                    pairs.push((offsets[i] + u, offsets[j] + v));
                }
            }
        }
    }
    build(n, pairs)
}

/// Generalized Petersen graph: outer vertices `u_i = i`, inner `v_i = n + i`,
/// edges `u_i v_i`, `u_i u_{i+1}`, `v_i v_{i+k}`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Multigraph> {
    if n < 3 || k < 1 || k > (n - 1) / 2 {
        return Err(Error::Precondition(format!(
            "generalized Petersen needs n >= 3 and 1 <= k <= (n-1)/2, got n={n}, k={k}"
        )));
    }
    let spokes = (0..n).map(|i| (i, n + i));
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let inner = (0..n).map(|i| (n + i, n + (i + k) % n));
    Ok(build(2 * n, spokes.chain(outer).chain(inner)))
}

pub fn disjoint_union(g: &Multigraph, h: &Multigraph) -> Multigraph {
    g.disjoint_union(h)
}

/// Disjoint union plus every edge between the two parts.
pub fn join(g: &Multigraph, h: &Multigraph) -> Multigraph {
    let mut out = g.disjoint_union(h);
    for u in 0..g.order() {
        for v in 0..h.order() {
            out.add_edge(u, g.order() + v).expect("in range");
        }
    }
    out
}

/// Complement of the underlying simple graph.
pub fn complement(g: &Multigraph) -> Multigraph {
    let n = g.order();
    let adj = g.adjacency_masks();
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u] >> v & 1 == 0))
}

/// Theta graph: two poles joined by internally disjoint paths with the given
/// edge counts.
pub fn theta(lengths: &[usize]) -> Result<Multigraph> {
    if lengths.iter().filter(|&&l| l == 1).count() > 1 || lengths.contains(&0) {
        return Err(Error::Precondition("theta paths need length >= 1 and at most one direct edge".into()));
    }
    let mut g = Multigraph::new(2);
    for &len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            let v = g.add_vertex();
            g.add_edge(prev, v)?;
            prev = v;
        }
        g.add_edge(prev, 1)?;
    }
    Ok(g)
}

/// Two cycles of lengths `a` and `b` sharing one vertex.
pub fn figure_eight(a: usize, b: usize) -> Multigraph {
    let g = cycle(a).disjoint_union(&cycle(b));
    g.identify_vertices(0, a).expect("in range").0.renumbered()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_cubic() {
        let p = generalized_petersen(5, 2).unwrap();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert!(p.is_simple());
        assert!(generalized_petersen(5, 3).is_err());
        assert!(generalized_petersen(2, 1).is_err());
    }

    #[test]
    fn wheel_from_join() {
        let w = join(&empty(1), &cycle(4));
        assert_eq!((w.order(), w.size()), (5, 8));
    }

    #[test]
    fn complement_of_complete() {
        assert_eq!(complement(&complete(5)).size(), 0);
        assert_eq!(complement(&empty(4)).size(), 6);
    }

    #[test]
    fn multipartite_and_theta() {
        let k23 = complete_multipartite(&[2, 3]);
        assert_eq!((k23.order(), k23.size()), (5, 6));
        let t = theta(&[2, 3, 1]).unwrap();
        assert_eq!((t.order(), t.size()), (5, 6));
        assert!(theta(&[1, 1]).is_err());
        let f = figure_eight(3, 4);
        assert_eq!((f.order(), f.size()), (6, 7));
        assert_eq!(f.block_count(), 2);
    }
}
