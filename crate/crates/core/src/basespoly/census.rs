//! Realness of the coordinate polynomials and the census of unreal graphs.

use rayon::prelude::*;
use serde::Serialize;

use super::{require_simple, ChromaticBases};
use crate::error::{Error, Result};
use crate::exactpoly::{all_roots_real, to_rational};
use crate::multigraph::enumerate::{connected_graphs, MAX_GENERATED_ORDER};
use crate::multigraph::generators::join;
use crate::multigraph::io::to_graph6;
use crate::multigraph::Multigraph;
use crate::ZPoly;

const GLUE_ORDER_LIMIT: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Realness {
    pub sigma_real: bool,
    pub w_real: bool,
    pub tau_real: bool,
}

impl Realness {
    pub fn all_real(&self) -> bool {
        self.sigma_real && self.w_real && self.tau_real
    }
}

fn real_roots(p: &ZPoly) -> Result<bool> {
    all_roots_real(&to_rational(p))
}

fn realness_of(b: &ChromaticBases) -> Result<Realness> {
    Ok(Realness {
        sigma_real: real_roots(&b.sigma.poly())?,
        w_real: real_roots(&b.w.poly())?,
        tau_real: real_roots(&b.tau.poly())?,
    })
}

/// Whether `sigma`, `w` and `tau` have only real zeros, by Sturm sequences.
pub fn realness(g: &Multigraph) -> Result<Realness> {
    realness_of(&ChromaticBases::new(g)?)
}

/// A graph with at least one unreal coordinate polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: String,
    #[serde(flatten)]
    pub realness: Realness,
    pub sigma: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub order: usize,
    pub graphs: usize,
    pub sigma_unreal: usize,
    pub w_unreal: usize,
    pub tau_unreal: usize,
    pub witnesses: Vec<Witness>,
}

/// Counts the sigma-, w- and tau-unreal graphs among the connected simple
/// graphs of order `n`. Orders up to 8 are generated; larger orders need
/// `source`, one graph per isomorphism class. Runs on the current rayon
/// pool and keeps witnesses in source order.
pub fn census(n: usize, source: Option<&[Multigraph]>) -> Result<CensusRow> {
    let graphs = match source {
        Some(gs) => gs,
        None if n <= MAX_GENERATED_ORDER => connected_graphs(n)?,
        None => {
            return Err(Error::Precondition(format!(
                "order {n} needs a graph6 source; built-in generation stops at {MAX_GENERATED_ORDER}"
            )))
        }
    };
    if let Some(bad) = graphs.iter().find(|g| g.order() != n) {
        return Err(Error::Precondition(format!("source graph {bad} has order {} instead of {n}", bad.order())));
    }
    let witnesses: Vec<Option<Witness>> = graphs
        .par_iter()
        .map(|g| {
            require_simple(g)?;
            let b = ChromaticBases::new(g)?;
            let realness = realness_of(&b)?;
            if realness.all_real() {
                return Ok(None);
            }
            Ok(Some(Witness { graph6: to_graph6(g)?, realness, sigma: b.sigma.poly().to_string() }))
        })
        .collect::<Result<_>>()?;
    let witnesses: Vec<Witness> = witnesses.into_iter().flatten().collect();
    let count = |f: fn(&Realness) -> bool| witnesses.iter().filter(|w| !f(&w.realness)).count();
    Ok(CensusRow {
        order: n,
        graphs: graphs.len(),
        sigma_unreal: count(|r| r.sigma_real),
        w_unreal: count(|r| r.w_real),
        tau_unreal: count(|r| r.tau_real),
        witnesses,
    })
}

/// Outcome of scanning a corpus for counterexamples to one open statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub statement: String,
    pub instances: usize,
    pub max_order: usize,
    pub counterexamples: Vec<String>,
}

impl ConjectureReport {
    pub fn summary(&self) -> String {
        if self.counterexamples.is_empty() {
            format!("{}: no counterexample found at order <= {} ({} instances)", self.statement, self.max_order, self.instances)
        } else {
            format!("{}: {} counterexamples, first {}", self.statement, self.counterexamples.len(), self.counterexamples[0])
        }
    }
}

fn first_clique(g: &Multigraph, size: usize) -> Option<Vec<usize>> {
    let adj = g.adjacency_masks();
    fn extend(adj: &[u64], chosen: &mut Vec<usize>, from: usize, size: usize) -> bool {
        if chosen.len() == size {
            return true;
        }
        for v in from..adj.len() {
            if chosen.iter().all(|&u| adj[u] >> v & 1 == 1) {
                chosen.push(v);
                if extend(adj, chosen, v + 1, size) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    extend(&adj, &mut chosen, 0, size).then_some(chosen)
}

/// `g` and `h` glued along cliques: `h`'s clique vertices are identified
/// with `g`'s in order.
fn glue(g: &Multigraph, h: &Multigraph, in_g: &[usize], in_h: &[usize]) -> Result<Multigraph> {
    let mut map = vec![usize::MAX; h.order()];
    for (&a, &b) in in_g.iter().zip(in_h) {
        map[b] = a;
    }
    let mut next = g.order();
    for slot in map.iter_mut().filter(|m| **m == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut pairs = g.edge_multiset();
    pairs.extend(h.edge_multiset().into_iter().map(|(u, v)| (map[u], map[v])));
    Ok(Multigraph::from_pairs(next, &pairs)?.simplify())
}

struct Tally {
    statement: &'static str,
    instances: usize,
    max_order: usize,
    counterexamples: Vec<String>,
}

impl Tally {
    fn new(statement: &'static str) -> Self {
        Tally { statement, instances: 0, max_order: 0, counterexamples: Vec::new() }
    }

    fn record(&mut self, g: &Multigraph, holds: bool) -> Result<()> {
        self.instances += 1;
        self.max_order = self.max_order.max(g.order());
        if !holds {
            self.counterexamples.push(to_graph6(g)?);
        }
        Ok(())
    }

    fn finish(self) -> ConjectureReport {
        ConjectureReport {
            statement: self.statement.into(),
            instances: self.instances,
            max_order: self.max_order,
            counterexamples: self.counterexamples,
        }
    }
}

/// Scans `corpus` for counterexamples to four open statements: sigma-realness
/// when the chromatic number is at least `p - 3`, tau-realness of every
/// graph, and preservation of w- and tau-realness under clique gluing and of
/// tau-realness under joins. Glued and joined graphs are built from corpus
/// members whose combined order stays at most 7. Nothing is asserted; the
/// reports only list what was found.
pub fn conjecture_harness(corpus: &[Multigraph]) -> Result<Vec<ConjectureReport>> {
    let mut high_chromatic = Tally::new("sigma-real when the chromatic number is at least p - 3");
    let mut all_tau = Tally::new("every graph is tau-real");
    let mut glued_w = Tally::new("gluing w-real graphs along a clique keeps w-realness");
    let mut glued_tau = Tally::new("gluing tau-real graphs along a clique keeps tau-realness");
    let mut joined_tau = Tally::new("the join of tau-real graphs is tau-real");
    let mut small = Vec::new();
    for g in corpus {
        let b = ChromaticBases::new(g)?;
        let r = realness_of(&b)?;
        if b.chromatic_number() + 3 >= b.order {
            high_chromatic.record(g, r.sigma_real)?;
        }
        all_tau.record(g, r.tau_real)?;
        if g.order() < GLUE_ORDER_LIMIT {
            small.push((g, r));
        }
    }
    for (i, (g, rg)) in small.iter().enumerate() {
        for (h, rh) in &small[i..] {
            if g.order() + h.order() <= GLUE_ORDER_LIMIT && rg.tau_real && rh.tau_real {
                joined_tau.record(&join(g, h), realness(&join(g, h))?.tau_real)?;
            }
            for s in 1..=g.order().min(h.order()) {
                if g.order() + h.order() - s > GLUE_ORDER_LIMIT {
                    continue;
                }
                let (Some(cg), Some(ch)) = (first_clique(g, s), first_clique(h, s)) else {
                    continue;
                };
                let glued = glue(g, h, &cg, &ch)?;
                let r = realness(&glued)?;
                if rg.w_real && rh.w_real {
                    glued_w.record(&glued, r.w_real)?;
                }
                if rg.tau_real && rh.tau_real {
                    glued_tau.record(&glued, r.tau_real)?;
                }
            }
        }
    }
    Ok([high_chromatic, all_tau, glued_w, glued_tau, joined_tau].into_iter().map(Tally::finish).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle, path};

    #[test]
    fn realness_examples() {
        assert!(!realness(&cycle(4)).unwrap().w_real);
        for p in 1..=6 {
            assert!(realness(&complete(p)).unwrap().all_real());
        }
        assert!(realness(&path(5)).unwrap().w_real);
    }

    #[test]
    fn small_census_rows() {
        let row = census(3, None).unwrap();
        assert_eq!((row.sigma_unreal, row.w_unreal, row.tau_unreal), (0, 0, 0));
        let row = census(4, None).unwrap();
        assert_eq!((row.sigma_unreal, row.w_unreal, row.tau_unreal), (0, 1, 0));
        let witness = crate::multigraph::io::parse_graph6(&row.witnesses[0].graph6).unwrap();
        assert!(crate::multigraph::canon::are_isomorphic(&witness, &cycle(4)));
        assert!(census(9, None).is_err());
        assert!(census(5, Some(&[cycle(4)])).is_err());
    }

    #[test]
    fn gluing() {
        let g = glue(&complete(3), &complete(3), &[1, 2], &[0, 1]).unwrap();
        assert_eq!((g.order(), g.size()), (4, 5));
        assert_eq!(first_clique(&cycle(4), 3), None);
        assert_eq!(first_clique(&complete(4), 3), Some(vec![0, 1, 2]));
    }

    #[test]
    fn harness_on_a_small_corpus() {
        let corpus: Vec<Multigraph> = (2..=5).flat_map(|n| connected_graphs(n).unwrap().iter().cloned()).collect();
        let reports = conjecture_harness(&corpus).unwrap();
        assert_eq!(reports.len(), 5);
        for r in &reports {
            assert!(r.counterexamples.is_empty(), "{}", r.summary());
        }
    }
}
