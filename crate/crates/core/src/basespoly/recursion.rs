//! Independent routes to the coordinate polynomials, used to cross-check
//! the basis conversions.

use std::collections::HashMap;

use num_traits::Zero;

use super::require_simple;
use crate::error::{Error, Result};
use crate::exactpoly::{bell_poly, factorial};
use crate::flowchrom::{acyclic_counts_by_sources, independent_partition_counts};
use crate::multigraph::partitions::partitions_stream;
use crate::multigraph::Multigraph;
use crate::{Integer, ZPoly};

pub const CROSS_CHECK_ORDER_LIMIT: usize = 8;
pub const TAU_PARTITION_ORDER_LIMIT: usize = 6;

fn checked_masks(g: &Multigraph, limit: usize, what: &'static str) -> Result<Vec<u64>> {
    require_simple(g)?;
    if g.order() > limit {
        return Err(Error::TooLarge { what, limit });
    }
    Ok(g.adjacency_masks())
}

/// Drops bit `v` from `mask`, moving the higher bits down by one.
fn squeeze(mask: u64, v: usize) -> u64 {
    (mask & ((1u64 << v) - 1)) | ((mask >> (v + 1)) << v)
}

fn remove_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    adj.iter().enumerate().filter(|&(w, _)| w != v).map(|(_, &m)| squeeze(m, v)).collect()
}

/// Merges `v` into `u` and drops `v`; parallel edges collapse.
fn identify(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut out = adj.to_vec();
    let merged = (adj[u] | adj[v]) & !(1u64 << u | 1u64 << v);
    out[u] = merged;
    for (w, row) in out.iter_mut().enumerate() {
        if merged >> w & 1 == 1 {
            *row |= 1 << u;
        }
    }
    remove_vertex(&out, v)
}

fn non_edge(adj: &[u64]) -> Option<(usize, usize)> {
    let n = adj.len();
    (0..n).find_map(|u| (u + 1..n).find(|&v| adj[u] >> v & 1 == 0).map(|v| (u, v)))
}

fn add_edge(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut out = adj.to_vec();
    out[u] |= 1 << v;
    out[v] |= 1 << u;
    out
}

/// Adds or identifies a non-adjacent pair until the graph is complete:
/// `f(G) = f(G + uv) + factor * f(G . uv)` with `f(K_n) = base(n)`.
struct Completion<'a> {
    base: &'a dyn Fn(usize) -> ZPoly,
    factor: ZPoly,
    memo: HashMap<Vec<u64>, ZPoly>,
}

impl Completion<'_> {
    fn solve(&mut self, adj: Vec<u64>) -> ZPoly {
        let Some((u, v)) = non_edge(&adj) else {
            return (self.base)(adj.len());
        };
        if let Some(hit) = self.memo.get(&adj) {
            return hit.clone();
        }
        let added = self.solve(add_edge(&adj, u, v));
        let merged = self.solve(identify(&adj, u, v));
        let out = added + &self.factor * &merged;
        self.memo.insert(adj, out.clone());
        out
    }
}

/// `sigma(G) = sigma(G + uv) + sigma(G . uv)` down to `sigma(K_n) = x^n`.
pub fn sigma_by_identification(g: &Multigraph) -> Result<ZPoly> {
    let adj = checked_masks(g, CROSS_CHECK_ORDER_LIMIT, "graph order for the completion recursion")?;
    let base = |n: usize| ZPoly::monomial(Integer::from(1), n);
    Ok(Completion { base: &base, factor: ZPoly::one(), memo: HashMap::new() }.solve(adj))
}

/// `w(G) = w(G + uv) + (1 - x) w(G . uv)` down to `w(K_n) = n! x^n`.
pub fn w_by_identification(g: &Multigraph) -> Result<ZPoly> {
    let adj = checked_masks(g, CROSS_CHECK_ORDER_LIMIT, "graph order for the completion recursion")?;
    let base = |n: usize| ZPoly::monomial(factorial(n), n);
    Ok(Completion { base: &base, factor: ZPoly::from_ints(&[1, -1]), memo: HashMap::new() }.solve(adj))
}

/// `sum a_i x^i` with `a_i` counted as partitions into independent sets.
pub fn sigma_by_partitions(g: &Multigraph) -> Result<ZPoly> {
    require_simple(g)?;
    Ok(ZPoly::new(independent_partition_counts(g)?))
}

fn tau_dc(adj: Vec<u64>, memo: &mut HashMap<Vec<u64>, ZPoly>) -> ZPoly {
    let n = adj.len();
    let Some(u) = (0..n).find(|&u| adj[u] != 0) else {
        return bell_poly(n);
    };
    if let Some(hit) = memo.get(&adj) {
        return hit.clone();
    }
    let v = adj[u].trailing_zeros() as usize;
    let mut deleted = adj.clone();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);
    let out = tau_dc(deleted, memo) + tau_dc(identify(&adj, u, v), memo);
    memo.insert(adj, out.clone());
    out
}

/// `tau(G) = tau(G \ e) + tau(G / e)` with simple contraction, down to
/// `tau(N_n) = B_n(x)`.
pub fn tau_by_deletion_contraction(g: &Multigraph) -> Result<ZPoly> {
    let adj = checked_masks(g, CROSS_CHECK_ORDER_LIMIT, "graph order for deletion-contraction")?;
    Ok(tau_dc(adj, &mut HashMap::new()))
}

/// `sum over set partitions P of |A(G(P))| x^|P|`, where `G(P)` keeps only
/// the edges inside blocks.
pub fn tau_by_partitions(g: &Multigraph) -> Result<ZPoly> {
    let adj = checked_masks(g, TAU_PARTITION_ORDER_LIMIT, "graph order for the partition oracle")?;
    let n = adj.len();
    let acyclic = acyclic_counts_by_sources(&adj)?;
    let mut coeffs = vec![Integer::zero(); n + 1];
    for partition in partitions_stream(n) {
        let labels = partition.labels(n);
        let mut blocks = vec![0u64; partition.len()];
        for (v, &l) in labels.iter().enumerate() {
            blocks[l] |= 1 << v;
        }
        let count: Integer = blocks.iter().map(|&b| Integer::from(acyclic[b as usize])).product();
        coeffs[blocks.len()] += count;
    }
    Ok(ZPoly::new(coeffs))
}

fn simplicial_vertex(adj: &[u64]) -> Option<usize> {
    (0..adj.len()).find(|&u| {
        let nbrs = adj[u];
        (0..adj.len()).filter(|&v| nbrs >> v & 1 == 1).all(|v| nbrs & !(adj[v] | 1 << v) == 0)
    })
}

/// `tau(G) = x tau'(G - u) + (x + k) tau(G - u)` for a simplicial vertex `u`
/// of degree `k`, repeated along a perfect elimination ordering. Fails on
/// graphs that are not chordal.
pub fn tau_by_simplicial(g: &Multigraph) -> Result<ZPoly> {
    let adj = checked_masks(g, 64, "graph order")?;
    fn go(adj: &[u64]) -> Option<ZPoly> {
        if adj.is_empty() {
            return Some(ZPoly::one());
        }
        let u = simplicial_vertex(adj)?;
        let k = adj[u].count_ones() as i64;
        let rest = go(&remove_vertex(adj, u))?;
        Some(ZPoly::x() * rest.derivative() + ZPoly::from_ints(&[k, 1]) * rest)
    }
    go(&adj).ok_or_else(|| Error::Precondition("no perfect elimination ordering".into()))
}
