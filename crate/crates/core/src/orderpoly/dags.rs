//! Exhaustive acyclic digraphs of small order.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::multigraph::Digraph;

pub const DAG_ORDER_LIMIT: usize = 5;

fn check_order(p: usize) -> Result<()> {
    if p > DAG_ORDER_LIMIT {
        return Err(Error::TooLarge { what: "order for exhaustive digraph enumeration", limit: DAG_ORDER_LIMIT });
    }
    Ok(())
}

/// Every digraph whose arcs all go from a smaller to a larger label: one
/// per subset of the pairs `i < j`.
pub fn natural_dags(p: usize) -> Result<Vec<Digraph>> {
    check_order(p)?;
    let pairs: Vec<(usize, usize)> = (0..p).array_combinations().map(|[a, b]| (a, b)).collect();
    (0..1u32 << pairs.len())
        .map(|mask| Digraph::new(p, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a)))
        .collect()
}

/// Every labeled acyclic digraph on `p` vertices.
pub fn labeled_dags(p: usize) -> Result<Vec<Digraph>> {
    let mut seen = BTreeSet::new();
    for d in natural_dags(p)? {
        for perm in (0..p).permutations(p) {
            seen.insert(d.permuted(&perm));
        }
    }
    Ok(seen.into_iter().collect())
}
