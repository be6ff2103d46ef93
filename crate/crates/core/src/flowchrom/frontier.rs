//! Flow polynomial by a connectivity-state sweep, for graphs too large for
//! deletion-contraction but of small pathwidth.
//!
//! `F(G, x) = sum_A (-1)^(|E|-|A|) x^(nullity(A))`. Vertices enter in a fixed
//! order; the state is the partition of the active vertices (entered, with
//! edges still to come) into components of the chosen edges, and the value
//! is a polynomial in `x`. An edge inside one block raises the nullity.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::ZPoly;

pub const FRONTIER_WIDTH_LIMIT: usize = 20;

/// Block labels of the active vertices in entry order, renumbered by first
/// appearance.
type State = Vec<u8>;

fn normalize(labels: &mut [u8]) {
    let mut map = [u8::MAX; 32];
    let mut next = 0u8;
    for l in labels.iter_mut() {
        if map[*l as usize] == u8::MAX {
            map[*l as usize] = next;
            next += 1;
        }
        *l = map[*l as usize];
    }
}

fn add_into(target: &mut Vec<i64>, source: &[i64], shift: usize, negate: bool) -> Result<()> {
    if target.len() < source.len() + shift {
        target.resize(source.len() + shift, 0);
    }
    for (i, &c) in source.iter().enumerate() {
        let c = if negate { c.checked_neg() } else { Some(c) };
        target[i + shift] = c
            .and_then(|c| target[i + shift].checked_add(c))
            .ok_or(Error::TooLarge { what: "coefficient magnitude in the frontier sweep", limit: 63 })?;
    }
    Ok(())
}

/// Largest number of active vertices when entering vertices in `order`.
pub fn frontier_width(g: &Multigraph, order: &[usize]) -> usize {
    let n = g.order();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let last_needed: Vec<usize> =
        (0..n).map(|v| g.neighbors(v).into_iter().map(|w| position[w]).max().unwrap_or(0).max(position[v])).collect();
    (0..n).map(|step| (0..n).filter(|&v| position[v] <= step && last_needed[v] > step).count()).max().unwrap_or(0)
}

/// Greedy entry order: from each start vertex, repeatedly enter the vertex
/// that leaves the fewest active vertices; keeps the narrowest sweep.
pub fn greedy_order(g: &Multigraph) -> Vec<usize> {
    let n = g.order();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for start in 0..n {
        let mut entered = vec![false; n];
        let mut order = vec![start];
        entered[start] = true;
        while order.len() < n {
            let active = |entered: &[bool]| (0..n).filter(|&v| entered[v] && nbrs[v].iter().any(|&w| !entered[w])).count();
            let next = (0..n)
                .filter(|&v| !entered[v])
                .min_by_key(|&v| {
                    let mut trial = entered.clone();
                    trial[v] = true;
                    let links = nbrs[v].iter().filter(|&&w| entered[w]).count();
                    (active(&trial), usize::MAX - links, v)
                })
                .expect("a vertex remains");
            entered[next] = true;
            order.push(next);
        }
        let width = frontier_width(g, &order);
        if best.as_ref().is_none_or(|(w, _)| width < *w) {
            best = Some((width, order));
        }
    }
    best.map(|(_, o)| o).unwrap_or_default()
}

/// `F(G, x)` by the frontier sweep along `order` (a permutation of the
/// vertices). Loops contribute a factor `x - 1`.
pub fn flow_poly_frontier(g: &Multigraph, order: &[usize]) -> Result<ZPoly> {
    let n = g.order();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::Precondition("the entry order must list every vertex once".into()));
    }
    let width = frontier_width(g, order);
    if width > FRONTIER_WIDTH_LIMIT {
        return Err(Error::TooLarge { what: "frontier width", limit: FRONTIER_WIDTH_LIMIT });
    }
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut loops = 0u32;
    // Edges to earlier vertices, grouped by the later endpoint.
    let mut back: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges() {
        if e.is_loop() {
            loops += 1;
        } else {
            let (a, b) = if position[e.u] < position[e.v] { (e.u, e.v) } else { (e.v, e.u) };
            back[b].push(a);
        }
    }
    let last_needed: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).into_iter().map(|w| position[w]).max().unwrap_or(0).max(position[v]))
        .collect();

    let mut active: Vec<usize> = Vec::new();
    let mut table: HashMap<State, Vec<i64>> = HashMap::from([(Vec::new(), vec![1])]);
    for (step, &v) in order.iter().enumerate() {
        // Enter v as a singleton block.
        active.push(v);
        table = table
            .into_iter()
            .map(|(mut s, val)| {
                s.push(u8::try_from(active.len() - 1).expect("width below 256"));
                normalize(&mut s);
                (s, val)
            })
            .collect();
        for &u in &back[v] {
            let iu = active.iter().position(|&a| a == u).expect("earlier endpoint is active");
            let iv = active.len() - 1;
            let mut next: HashMap<State, Vec<i64>> = HashMap::with_capacity(table.len() * 2);
            for (s, val) in table {
                // Skip the edge: sign flip.
                add_into(next.entry(s.clone()).or_default(), &val, 0, true)?;
                // Take it.
                let (bu, bv) = (s[iu], s[iv]);
                if bu == bv {
                    add_into(next.entry(s).or_default(), &val, 1, false)?;
                } else {
                    let mut merged = s;
                    for l in merged.iter_mut() {
                        if *l == bv {
                            *l = bu;
                        }
                    }
                    normalize(&mut merged);
                    add_into(next.entry(merged).or_default(), &val, 0, false)?;
                }
            }
            table = next;
        }
        // Retire vertices with no edges left.
        let keep: Vec<bool> = active.iter().map(|&a| last_needed[a] > step).collect();
        if keep.iter().any(|k| !k) {
            active = active.iter().zip(&keep).filter(|(_, k)| **k).map(|(&a, _)| a).collect();
            let mut next: HashMap<State, Vec<i64>> = HashMap::with_capacity(table.len());
            for (s, val) in table {
                let mut reduced: State = s.iter().zip(&keep).filter(|(_, k)| **k).map(|(&l, _)| l).collect();
                normalize(&mut reduced);
                add_into(next.entry(reduced).or_default(), &val, 0, false)?;
            }
            table = next;
        }
    }
    let coeffs = table.remove(&Vec::new()).unwrap_or_default();
    let poly = ZPoly::new(coeffs.into_iter().map(BigInt::from).collect());
    Ok(poly * ZPoly::from_ints(&[-1, 1]).pow(loops))
}
