//! One function per subcommand, each producing a JSON payload, text lines
//! and any identity reports.

use std::path::PathBuf;
use std::sync::mpsc;
use std::time::Duration;

use polyforge::basespoly::{census, ChromaticBases};
use polyforge::exactpoly::serial::{coeffs_json, qpoly_json, zbipoly_json, zpoly_json};
use polyforge::exactpoly::{isolate_real_roots, to_rational, BasisTag};
use polyforge::flowchrom::{chromatic_poly, flow_poly, flow_poly_frontier, greedy_order};
use polyforge::matroid::Matroid;
use polyforge::multigraph::io::{parse_graph6_lines, parse_rational, parse_weights};
use polyforge::multigraph::{Multigraph, MAX_GENERATED_ORDER};
use polyforge::orderpoly::{omega_strict_expansion, omega_strict_recursion, omega_weak_expansion};
use polyforge::potts::{potts_dc, potts_dc_uniform};
use polyforge::suites::{run_suite, Corpus, Suite};
use polyforge::tutte::tutte_dc;
use polyforge::{IdentityReport, Rational, ZPoly};
use serde_json::{json, Value};

use crate::input::{digest, read_source, GraphInput};

/// Environment variable naming a graph6 file for the order-9 census.
pub const ORDER_NINE_ENV: &str = "POLYFORGE_G9_FILE";
/// Above this many edges the flow polynomial uses the frontier sweep.
const FRONTIER_EDGE_THRESHOLD: usize = 30;

pub struct Outcome {
    pub input_digest: String,
    pub results: Value,
    pub text: Vec<String>,
    pub reports: Vec<IdentityReport>,
}

impl Outcome {
    fn new(input_digest: String, results: Value, text: Vec<String>) -> Self {
        Outcome { input_digest, results, text, reports: Vec::new() }
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `F(G, x)`, by deletion-contraction or, for larger graphs, the frontier
/// sweep.
fn flow_of(g: &Multigraph) -> Result<ZPoly, String> {
    if g.size() > FRONTIER_EDGE_THRESHOLD {
        flow_poly_frontier(g, &greedy_order(g)).map_err(err)
    } else {
        Ok(flow_poly(g))
    }
}

fn univariate(input: &GraphInput, name: &str, f: impl Fn(&Multigraph) -> Result<ZPoly, String>) -> Result<Outcome, String> {
    let (g, source) = input.load()?;
    let p = f(&g)?;
    Ok(Outcome::new(source.digest, json!({ name: zpoly_json(&p) }), vec![format!("{name}: {p}")]))
}

pub fn chromatic(input: &GraphInput) -> Result<Outcome, String> {
    univariate(input, "chromatic", |g| chromatic_poly(g).map_err(err))
}

pub fn flow(input: &GraphInput) -> Result<Outcome, String> {
    univariate(input, "flow", flow_of)
}

pub fn characteristic(input: &GraphInput) -> Result<Outcome, String> {
    univariate(input, "characteristic", |g| Matroid::cycle_matroid(g).and_then(|m| m.char_poly_dc()).map_err(err))
}

pub fn tutte(input: &GraphInput) -> Result<Outcome, String> {
    let (g, source) = input.load()?;
    let t = tutte_dc(&g);
    Ok(Outcome::new(source.digest, json!({ "tutte": zbipoly_json(&t) }), vec![format!("tutte: {t}")]))
}

pub fn potts(input: &GraphInput, weights: Option<&PathBuf>) -> Result<Outcome, String> {
    let (g, source) = input.load()?;
    match weights {
        None => {
            let z = potts_dc_uniform(&g);
            let text = vec![format!("potts (x = q, y = w): {z}")];
            Ok(Outcome::new(source.digest, json!({ "potts": zbipoly_json(&z) }), text))
        }
        Some(path) => {
            let ws = read_source(Some(path), None)?;
            let weights = parse_weights(&ws.text, &g).map_err(err)?;
            let z = potts_dc(&g, &weights).map_err(err)?;
            let combined = digest(format!("{}{}", source.digest, ws.digest).as_bytes());
            Ok(Outcome::new(combined, json!({ "potts": qpoly_json(&z) }), vec![format!("potts (x = q): {z}")]))
        }
    }
}

pub fn order(path: Option<&PathBuf>, inline: Option<&str>, weak: bool) -> Result<Outcome, String> {
    let (d, source) = crate::input::load_digraph(path, inline)?;
    let result = if weak { omega_weak_expansion(&d) } else { omega_strict_expansion(&d) }.map_err(err)?;
    let name = if weak { "weak" } else { "strict" };
    let terms: Vec<Value> = result
        .terms
        .iter()
        .map(|t| json!({ "coeff": t.coeff.to_string(), "shift": t.shift, "choose": t.choose }))
        .collect();
    let mut results = json!({ "kind": name, "binomial_form": result.to_string(), "terms": terms, "poly": qpoly_json(&result.poly) });
    let mut text = vec![format!("{name} order polynomial: {result}")];
    if !weak {
        let tournament = omega_strict_recursion(&d).map_err(err)?.to_string();
        text.push(format!("tournament form: {tournament}"));
        results["tournament_form"] = json!(tournament);
    }
    text.push(format!("expanded: {}", result.poly));
    Ok(Outcome::new(source.digest, results, text))
}

pub fn polys(input: &GraphInput) -> Result<Outcome, String> {
    let (g, source) = input.load()?;
    let b = ChromaticBases::new(&g).map_err(err)?;
    let lift = |v: &[polyforge::Integer]| v.iter().cloned().map(Rational::from_integer).collect::<Vec<_>>();
    let p = b.order;
    let rising: Vec<polyforge::Integer> =
        b.tau.coeffs.iter().enumerate().map(|(i, c)| if (p - i) % 2 == 0 { c.clone() } else { -c }).collect();
    let results = json!({
        "chromatic": zpoly_json(&b.chromatic),
        "sigma": { "poly": zpoly_json(&b.sigma.poly()), "chromatic_coords": coeffs_json(BasisTag::FallingFactorial, &lift(&b.sigma.coeffs)) },
        "w": { "poly": zpoly_json(&b.w.poly()), "chromatic_coords": coeffs_json(BasisTag::ShiftedBinomial, &lift(&b.w.coeffs)) },
        "tau": { "poly": zpoly_json(&b.tau.poly()), "chromatic_coords": coeffs_json(BasisTag::RisingFactorial, &lift(&rising)) },
    });
    let text = vec![
        format!("chromatic: {}", b.chromatic),
        format!("sigma: {}", b.sigma.poly()),
        format!("w: {}", b.w.poly()),
        format!("tau: {}", b.tau.poly()),
    ];
    Ok(Outcome::new(source.digest, results, text))
}

pub fn census_cmd(order: usize, graph6: Option<&PathBuf>, witnesses: bool) -> Result<Outcome, String> {
    let env_path = std::env::var_os(ORDER_NINE_ENV).map(PathBuf::from);
    let path = graph6.cloned().or(if order > MAX_GENERATED_ORDER { env_path } else { None });
    let (row, input_digest) = match path {
        Some(p) => {
            let source = read_source(Some(&p), None)?;
            let graphs = parse_graph6_lines(&source.text).map_err(err)?;
            (census(order, Some(&graphs)).map_err(err)?, source.digest)
        }
        None => (census(order, None).map_err(err)?, digest(format!("builtin connected order {order}").as_bytes())),
    };
    let mut results = json!({
        "order": row.order,
        "graphs": row.graphs,
        "sigma_unreal": row.sigma_unreal,
        "w_unreal": row.w_unreal,
        "tau_unreal": row.tau_unreal,
    });
    let mut text = vec![format!(
        "order {}: {} graphs, sigma-unreal {}, w-unreal {}, tau-unreal {}",
        row.order, row.graphs, row.sigma_unreal, row.w_unreal, row.tau_unreal
    )];
    if witnesses {
        results["witnesses"] = serde_json::to_value(&row.witnesses).map_err(err)?;
        for w in &row.witnesses {
            let r = &w.realness;
            text.push(format!("{} sigma_real={} w_real={} tau_real={} sigma: {}", w.graph6, r.sigma_real, r.w_real, r.tau_real, w.sigma));
        }
    }
    Ok(Outcome::new(input_digest, results, text))
}

pub fn verify(suite: &str, input: Option<&GraphInput>, max_order: usize, dag_order: usize) -> Result<Outcome, String> {
    let suite: Suite = suite.parse().map_err(err)?;
    let (corpus, input_digest) = match input {
        Some(i) if i.path.is_some() || i.inline.is_some() => {
            let (g, source) = i.load()?;
            (Corpus { graphs: vec![g], digraphs: Vec::new() }, source.digest)
        }
        _ => {
            let corpus = Corpus::builtin(max_order, dag_order).map_err(err)?;
            (corpus, digest(format!("builtin graphs <= {max_order}, digraphs <= {dag_order}").as_bytes()))
        }
    };
    let reports = run_suite(suite, &corpus).map_err(err)?;
    let results = json!({ "suite": suite, "graphs": corpus.graphs.len(), "digraphs": corpus.digraphs.len() });
    let text = vec![format!("suite {suite} over {} graphs and {} digraphs", corpus.graphs.len(), corpus.digraphs.len())];
    Ok(Outcome { input_digest, results, text, reports })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PolyKind {
    Flow,
    Chromatic,
    Sigma,
    W,
    Tau,
}

fn decimal(r: &Rational) -> String {
    let scale = num_traits::pow(polyforge::Integer::from(10), 12);
    let scaled = (r * Rational::from_integer(scale.clone())).round().to_integer();
    let sign = if scaled < 0.into() { "-" } else { "" };
    let abs = if scaled < 0.into() { -scaled } else { scaled };
    format!("{sign}{}.{:012}", &abs / &scale, &abs % &scale)
}

pub fn roots(input: &GraphInput, kind: PolyKind, width: &str, between: Option<&[String]>, timeout: Option<u64>) -> Result<Outcome, String> {
    let (g, source) = input.load()?;
    let width = parse_rational(width).ok_or_else(|| format!("bad width {width:?}"))?;
    let window = match between {
        Some([lo, hi]) => Some((
            parse_rational(lo).ok_or_else(|| format!("bad bound {lo:?}"))?,
            parse_rational(hi).ok_or_else(|| format!("bad bound {hi:?}"))?,
        )),
        _ => None,
    };
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let poly = match kind {
            PolyKind::Flow => flow_of(&g),
            PolyKind::Chromatic => chromatic_poly(&g).map_err(err),
            other => ChromaticBases::new(&g).map_err(err).map(|b| match other {
                PolyKind::Sigma => b.sigma.poly(),
                PolyKind::W => b.w.poly(),
                _ => b.tau.poly(),
            }),
        };
        let result = poly.and_then(|p| isolate_real_roots(&to_rational(&p), &width).map(|r| (p, r)).map_err(err));
        let _ = tx.send(result);
    });
    let (poly, intervals) = match timeout {
        Some(secs) => rx.recv_timeout(Duration::from_secs(secs)).map_err(|_| format!("timed out after {secs} s"))??,
        None => rx.recv().map_err(err)??,
    };
    let kept: Vec<&(Rational, Rational)> = intervals
        .iter()
        .filter(|(a, b)| window.as_ref().is_none_or(|(lo, hi)| b > lo && a < hi))
        .collect();
    let roots: Vec<Value> = kept
        .iter()
        .map(|(a, b)| json!({ "low": a.to_string(), "high": b.to_string(), "approx": decimal(&((a + b) / Rational::from_integer(2.into()))) }))
        .collect();
    let mut text = vec![format!("polynomial: {poly}")];
    text.extend(kept.iter().map(|(a, b)| format!("root in ({a}, {b}] ~ {}", decimal(&((a + b) / Rational::from_integer(2.into()))))));
    Ok(Outcome::new(source.digest, json!({ "poly": zpoly_json(&poly), "roots": roots }), text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inline(text: &str) -> GraphInput {
        GraphInput { path: None, inline: Some(text.into()), input_format: crate::input::InputFormat::Edgelist }
    }

    const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3";

    #[test]
    fn flow_of_k4() {
        let out = flow(&inline(K4)).unwrap();
        assert_eq!(out.text, vec!["flow: x^3 - 6x^2 + 11x - 6".to_string()]);
    }

    #[test]
    fn tutte_of_triangle_json() {
        let out = tutte(&inline("3 3\n0 1\n1 2\n2 0")).unwrap();
        assert_eq!(out.results["tutte"]["terms"], json!([[0, 1, 1, 1], [1, 0, 1, 1], [2, 0, 1, 1]]));
    }

    #[test]
    fn census_of_order_four() {
        let out = census_cmd(4, None, false).unwrap();
        assert_eq!(out.results["sigma_unreal"], json!(0));
        assert_eq!(out.results["w_unreal"], json!(1));
        assert_eq!(out.results["tau_unreal"], json!(0));
        assert!(census_cmd(9, Some(&PathBuf::from("/nonexistent/g9.g6")), false).is_err());
    }

    #[test]
    fn verify_tutte_on_k4() {
        let out = verify("tutte", Some(&inline(K4)), 6, 4).unwrap();
        assert!(!out.reports.is_empty());
        assert!(out.reports.iter().all(|r| !r.failed()));
        for name in ["tutte-rational-point", "tutte-negative-chromatic", "tutte-bicycle-point"] {
            assert!(out.reports.iter().any(|r| r.name == name), "{name}");
        }
        assert!(verify("bogus", None, 3, 2).is_err());
    }

    #[test]
    fn roots_of_k4_flow() {
        let out = roots(&inline(K4), PolyKind::Flow, "1/1000", None, Some(30)).unwrap();
        assert_eq!(out.results["roots"].as_array().unwrap().len(), 3);
        let windowed = roots(&inline(K4), PolyKind::Flow, "1/1000", Some(&["3/2".into(), "5/2".into()]), None).unwrap();
        assert_eq!(windowed.results["roots"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&Rational::new(1.into(), 3.into())), "0.333333333333");
        assert_eq!(decimal(&Rational::new((-5).into(), 2.into())), "-2.500000000000");
    }
}
