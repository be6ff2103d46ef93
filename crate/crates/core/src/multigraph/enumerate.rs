//! Isomorphism classes of small simple graphs, generated by vertex
//! augmentation with canonical deduplication.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::canon::canonical_form;
use super::graph::Multigraph;
use crate::error::{Error, Result};

/// Largest order the built-in generator supports.
pub const MAX_GENERATED_ORDER: usize = 8;

fn extend_by_vertex(base: &[Multigraph], connected: bool) -> Vec<Multigraph> {
    let mut classes: BTreeMap<Vec<u32>, Multigraph> = BTreeMap::new();
    for g in base {
        let n = g.order();
        let first = u32::from(connected);
        for mask in first..(1u32 << n) {
            let mut h = g.clone();
            let v = h.add_vertex();
            for u in (0..n).filter(|u| mask >> u & 1 == 1) {
                h.add_edge(u, v).expect("in range");
            }
            let cf = canonical_form(&h);
            classes.entry(cf.code).or_insert_with(|| {
                let relabeled = h.permuted(&cf.perm);
                Multigraph::from_pairs(h.order(), &relabeled.edge_multiset()).expect("in range")
            });
        }
    }
    classes.into_values().rev().collect()
}

fn cached(connected: bool, n: usize) -> &'static [Multigraph] {
    static CONNECTED: [OnceLock<Vec<Multigraph>>; MAX_GENERATED_ORDER + 1] = [const { OnceLock::new() }; MAX_GENERATED_ORDER + 1];
    static ALL: [OnceLock<Vec<Multigraph>>; MAX_GENERATED_ORDER + 1] = [const { OnceLock::new() }; MAX_GENERATED_ORDER + 1];
    let table = if connected { &CONNECTED } else { &ALL };
    table[n].get_or_init(|| match n {
        0 => {
            if connected {
                Vec::new()
            } else {
                vec![Multigraph::new(0)]
            }
        }
        1 => vec![Multigraph::new(1)],
        _ => extend_by_vertex(cached(connected, n - 1), connected),
    })
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_GENERATED_ORDER {
        return Err(Error::TooLarge { what: "graph order for built-in generation", limit: MAX_GENERATED_ORDER });
    }
    Ok(())
}

/// One representative per isomorphism class of connected simple graphs of
/// order `n`, in a fixed deterministic order.
pub fn connected_graph_stream(n: usize) -> Result<impl Iterator<Item = Multigraph>> {
    check_order(n)?;
    Ok(cached(true, n).iter().cloned())
}

pub fn connected_graphs(n: usize) -> Result<&'static [Multigraph]> {
    check_order(n)?;
    Ok(cached(true, n))
}

/// One representative per isomorphism class of simple graphs (connected or not).
pub fn all_graphs(n: usize) -> Result<&'static [Multigraph]> {
    check_order(n)?;
    Ok(cached(false, n))
}
