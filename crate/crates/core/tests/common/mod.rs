//! Strategies and property bodies shared by the proptest suite and the
//! acceptance runner. Each property returns `Err` with a witness on failure.

#![allow(dead_code)]

use polyforge::exactpoly::{convert_basis, to_power, BasisTag};
use polyforge::matroid::Matroid;
use polyforge::multigraph::{Digraph, Multigraph};
use polyforge::orderpoly::{omega_interpolated, omega_strict_expansion, omega_strict_recursion, omega_weak_expansion};
use polyforge::potts::{potts_dc, potts_dc_uniform, potts_subset, potts_subset_uniform, WeightMap};
use polyforge::scalar::rational;
use polyforge::tutte::{tutte_activities, tutte_dc};
use polyforge::Rational;
use proptest::prelude::*;
use proptest::sample::select;

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| rational(n, d))
}

/// Multigraphs on `1..=max_n` vertices with up to `max_m` edges, loops
/// and parallel edges allowed.
pub fn arb_multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m)
            .prop_map(move |pairs| Multigraph::from_pairs(n, &pairs).expect("endpoints in range"))
    })
}

pub fn arb_connected(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    arb_multigraph(max_n, max_m).prop_filter("connected", |g| g.is_connected())
}

/// A multigraph with a rational weight on every edge.
pub fn arb_weighted(max_n: usize, max_m: usize) -> impl Strategy<Value = (Multigraph, WeightMap)> {
    arb_multigraph(max_n, max_m).prop_flat_map(|g| {
        let ids = g.edge_ids();
        prop::collection::vec(arb_rational(), ids.len())
            .prop_map(move |ws| (g.clone(), ids.iter().copied().zip(ws).collect()))
    })
}

/// A connected multigraph with a permutation of its edge positions.
pub fn arb_ranked(max_n: usize, max_m: usize) -> impl Strategy<Value = (Multigraph, Vec<usize>)> {
    arb_connected(max_n, max_m).prop_flat_map(|g| {
        let rank: Vec<usize> = (0..g.size()).collect();
        (Just(g), Just(rank).prop_shuffle())
    })
}

/// An acyclic digraph on up to `max_p` vertices under an arbitrary labeling.
pub fn arb_dag(max_p: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_p).prop_flat_map(|p| {
        let pairs: Vec<(usize, usize)> = (0..p).flat_map(|i| (i + 1..p).map(move |j| (i, j))).collect();
        let perm: Vec<usize> = (0..p).collect();
        (prop::collection::vec(any::<bool>(), pairs.len()), Just(perm).prop_shuffle()).prop_map(move |(keep, perm)| {
            let arcs = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&a, _)| a);
            Digraph::new(p, arcs).expect("arcs in range").permuted(&perm)
        })
    })
}

pub fn arb_basis() -> impl Strategy<Value = BasisTag> {
    select(BasisTag::ALL.to_vec())
}

pub fn arb_coeffs(max_p: usize) -> impl Strategy<Value = Vec<Rational>> {
    (0..=max_p).prop_flat_map(|p| prop::collection::vec(arb_rational(), p + 1))
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, lhs: T, rhs: T) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs:?} != {rhs:?}"))
    }
}

/// Converting to another basis and back is the identity, and both
/// coordinate vectors describe the same polynomial.
pub fn basis_round_trip(coeffs: &[Rational], from: BasisTag, to: BasisTag) -> Result<(), String> {
    let p = coeffs.len() - 1;
    let there = convert_basis(coeffs, from, to, p);
    expect_eq("round trip", convert_basis(&there, to, from, p), coeffs.to_vec())?;
    expect_eq("same polynomial", to_power(&there, to, p), to_power(coeffs, from, p))
}

/// Rank axioms for the cycle matroid, its dual and its single-element minors.
pub fn rank_axioms(g: &Multigraph) -> Result<(), String> {
    let m = Matroid::cycle_matroid(g).map_err(|e| e.to_string())?;
    m.check_rank_axioms()?;
    m.dual().check_rank_axioms()?;
    for e in 0..m.size() {
        m.delete_element(e).map_err(|e| e.to_string())?.check_rank_axioms()?;
        m.contract_element(e).map_err(|e| e.to_string())?.check_rank_axioms()?;
    }
    expect_eq("dual rank", m.dual().full_rank(), m.size() - m.full_rank())
}

/// The activity expansion gives the Tutte polynomial whatever the edge order.
pub fn activity_invariance(g: &Multigraph, rank: &[usize]) -> Result<(), String> {
    let by_activity = tutte_activities(g, rank).map_err(|e| e.to_string())?.to_poly();
    expect_eq(&g.to_string(), by_activity, tutte_dc(g))
}

/// Linear-extension expansion, Stanley recursion and interpolated counts
/// agree, for both the strict and the weak polynomial.
pub fn order_routes(d: &Digraph) -> Result<(), String> {
    let err = |e: polyforge::Error| e.to_string();
    let strict = omega_strict_expansion(d).map_err(err)?.poly;
    expect_eq("recursion", omega_strict_recursion(d).map_err(err)?.poly, strict.clone())?;
    expect_eq("strict counts", omega_interpolated(d, true).map_err(err)?, strict)?;
    expect_eq("weak counts", omega_interpolated(d, false).map_err(err)?, omega_weak_expansion(d).map_err(err)?.poly)
}

/// Deletion-contraction and the subset expansion give the same Potts
/// polynomial, for the given weights and for a uniform symbolic weight.
pub fn potts_routes(g: &Multigraph, weights: &WeightMap) -> Result<(), String> {
    let err = |e: polyforge::Error| e.to_string();
    expect_eq(&g.to_string(), potts_dc(g, weights).map_err(err)?, potts_subset(g, weights).map_err(err)?)?;
    expect_eq("uniform", potts_dc_uniform(g), potts_subset_uniform(g).map_err(err)?)
}
