//! Named bundles of identity checks run over a corpus of graphs and
//! acyclic digraphs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::basespoly::identity_suite;
use crate::error::{Error, Result};
use crate::exactpoly::to_rational;
use crate::flowchrom::{
    chromatic_poly, duality_checks, flow_coefficient_check, tutte_bivariate_chromatic_check, wakelin_multiplicity_check,
};
use crate::matroid::{chromatic_product_identity_check, kung_identity_check, tutte_convolution_checks};
use crate::matroid::Matroid;
use crate::multigraph::{connected_graphs, Digraph, Multigraph};
use crate::orderpoly::{genfun_check, labeled_dags, reciprocity_check, transitive_arc_check, tugger_check};
use crate::potts::{
    block_factorization_check, chromatic_from_potts, potts_dc_uniform, potts_subset_uniform, series_reduction_check,
    sign_probes, tutte_from_potts, SignRegime, WeightMap,
};
use crate::report::IdentityReport;
use crate::scalar::rational;
use crate::tutte::{
    chromatic_specialization_check, coefficient_property_check, convolution_check, flow_specialization_check,
    rational_identity_check, read_rosenstiehl_check, stanley_negative_check, tutte_dc,
};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Potts,
    Tutte,
    Flow,
    Order,
    Bases,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["all", "potts", "tutte", "flow", "order", "bases"];

    fn covers(self, part: Suite) -> bool {
        self == Suite::All || self == part
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "potts" => Suite::Potts,
            "tutte" => Suite::Tutte,
            "flow" => Suite::Flow,
            "order" => Suite::Order,
            "bases" => Suite::Bases,
            other => {
                return Err(Error::Precondition(format!("unknown suite {other:?}; expected one of {}", Suite::NAMES.join(", "))))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::All, Suite::Potts, Suite::Tutte, Suite::Flow, Suite::Order, Suite::Bases]
            .iter()
            .position(|s| s == self)
            .expect("listed");
        f.write_str(Suite::NAMES[i])
    }
}

/// Graphs and digraphs a suite runs over.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub graphs: Vec<Multigraph>,
    pub digraphs: Vec<Digraph>,
}

impl Corpus {
    /// Every connected simple graph of order `1..=graph_order` and every
    /// labeled acyclic digraph of order `0..=dag_order`.
    pub fn builtin(graph_order: usize, dag_order: usize) -> Result<Self> {
        let mut graphs = Vec::new();
        for n in 1..=graph_order {
            graphs.extend(connected_graphs(n)?.iter().cloned());
        }
        let mut digraphs = Vec::new();
        for p in 0..=dag_order {
            digraphs.extend(labeled_dags(p)?);
        }
        Ok(Corpus { graphs, digraphs })
    }
}

fn sample_weights(g: &Multigraph) -> WeightMap {
    g.edge_ids().into_iter().enumerate().map(|(i, id)| (id, rational(i as i64 % 5 - 2, 3))).collect()
}

fn potts_checks(g: &Multigraph, inst: &str) -> Result<Vec<IdentityReport>> {
    let mut out = vec![
        IdentityReport::compare("potts routes agree", inst, &potts_dc_uniform(g), &potts_subset_uniform(g)?),
        IdentityReport::compare("tutte from potts", inst, &tutte_from_potts(g), &tutte_dc(g)),
        IdentityReport::compare("chromatic from potts", inst, &chromatic_from_potts(g), &to_rational(&chromatic_poly(g)?)),
    ];
    let weights = sample_weights(g);
    out.push(block_factorization_check(g, &weights)?);
    out.push(series_reduction_check(g, &rational(5, 2), &weights)?);
    for (regime, seed) in [(SignRegime::NegativeQ, 11), (SignRegime::SmallQ, 13)] {
        out.extend(sign_probes(g, regime, 3, seed)?);
    }
    Ok(out)
}

fn tutte_checks(g: &Multigraph, inst: &str) -> Result<Vec<IdentityReport>> {
    let mut out = convolution_check(g, inst)?;
    out.extend(tutte_convolution_checks(&Matroid::cycle_matroid(g)?, inst)?);
    for v in 1..=3 {
        out.push(rational_identity_check(g, &Rational::from_integer(v.into()), inst)?);
    }
    for k in 1..=3 {
        out.push(stanley_negative_check(g, k, inst)?);
    }
    out.push(read_rosenstiehl_check(g, inst)?);
    out.push(coefficient_property_check(g, inst)?);
    out.push(chromatic_specialization_check(g, inst)?);
    out.push(flow_specialization_check(g, inst)?);
    Ok(out)
}

fn flow_checks(g: &Multigraph, inst: &str) -> Result<Vec<IdentityReport>> {
    let mut out = vec![
        duality_checks(g, inst)?,
        kung_identity_check(&Matroid::cycle_matroid(g)?, inst)?,
        tutte_bivariate_chromatic_check(g, inst)?,
        chromatic_product_identity_check(g, inst)?,
    ];
    if g.is_connected() && g.is_bridgeless() && g.size() > 0 {
        out.push(flow_coefficient_check(g, inst)?);
        out.push(wakelin_multiplicity_check(g, inst)?);
    }
    Ok(out)
}

/// The graph checks of `suite` on one graph.
pub fn graph_checks(suite: Suite, g: &Multigraph) -> Result<Vec<IdentityReport>> {
    let inst = g.to_string();
    let mut out = Vec::new();
    if suite.covers(Suite::Potts) {
        out.extend(potts_checks(g, &inst)?);
    }
    if suite.covers(Suite::Tutte) {
        out.extend(tutte_checks(g, &inst)?);
    }
    if suite.covers(Suite::Flow) {
        out.extend(flow_checks(g, &inst)?);
    }
    if suite.covers(Suite::Bases) && g.is_simple() {
        out.extend(identity_suite(g)?);
    }
    Ok(out)
}

/// The order-polynomial checks on one acyclic digraph.
pub fn digraph_checks(d: &Digraph) -> Result<Vec<IdentityReport>> {
    Ok(vec![reciprocity_check(d)?, tugger_check(d)?, genfun_check(d, 5)?, transitive_arc_check(d)?])
}

/// Runs `suite` over `corpus` on the current rayon pool. Reports come back
/// in corpus order whatever the thread count.
pub fn run_suite(suite: Suite, corpus: &Corpus) -> Result<Vec<IdentityReport>> {
    let graph_reports: Vec<Vec<IdentityReport>> = if suite == Suite::Order {
        Vec::new()
    } else {
        corpus.graphs.par_iter().map(|g| graph_checks(suite, g)).collect::<Result<_>>()?
    };
    let order_reports: Vec<Vec<IdentityReport>> = if suite.covers(Suite::Order) {
        corpus.digraphs.par_iter().map(digraph_checks).collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    Ok(graph_reports.into_iter().chain(order_reports).flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::complete;

    #[test]
    fn names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn complete_graph_passes_every_suite() {
        let reports = graph_checks(Suite::All, &complete(4)).unwrap();
        assert!(reports.len() > 30);
        assert!(reports.iter().all(|r| !r.failed()), "{:?}", reports.iter().find(|r| r.failed()));
        let tutte = graph_checks(Suite::Tutte, &complete(4)).unwrap();
        assert!(tutte.iter().any(|r| r.name == "tutte-bicycle-point"));
    }

    #[test]
    fn small_corpus_is_deterministic() {
        let corpus = Corpus::builtin(4, 3).unwrap();
        let first = run_suite(Suite::All, &corpus).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let second = pool.install(|| run_suite(Suite::All, &corpus)).unwrap();
        assert_eq!(first, second);
        let failures: Vec<String> = first.iter().filter(|r| r.failed()).map(|r| r.to_string()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
    }
}
