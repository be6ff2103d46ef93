//! Strict and weak order polynomials of acyclic digraphs.
//!
//! `omega_strict*` count maps `theta: V -> {1..k}` with `theta(u) < theta(v)`
//! on every arc `u -> v`; `omega_weak*` relax this to `<=`. Formulas that
//! need vertex labels compatible with the arcs relabel along a topological
//! order first.

mod checks;
mod dags;

pub use checks::{
    compatibility_check, dong_criterion, genfun_check, omega_strict_surjective, reciprocity_check,
    transitive_arc_check, tugger_check, w_family,
};
pub use dags::{labeled_dags, natural_dags, DAG_ORDER_LIMIT};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multigraph::Digraph;
use crate::scalar::int_to_rational;
use crate::{QPoly, Rational};

pub const ENUM_LIMIT: u64 = 10_000_000;

/// A permutation `(i_1, ..., i_p)` of the vertices with its ascent
/// statistics: `rho` counts `i_j < i_{j+1}`, `delta` additionally counts
/// consecutive pairs joined by an arc `i_j -> i_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ordering {
    pub perm: Vec<usize>,
    pub rho: usize,
    pub delta: usize,
}

impl Ordering {
    pub fn new(d: &Digraph, perm: Vec<usize>) -> Self {
        let rho = perm.windows(2).filter(|w| w[0] < w[1]).count();
        let delta = perm.windows(2).filter(|w| w[0] < w[1] || d.has_arc(w[0], w[1])).count();
        Ordering { perm, rho, delta }
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.perm.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "({})", labels.join(","))
    }
}

/// `coeff * C(k + shift, choose)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialTerm {
    pub coeff: BigInt,
    pub shift: i64,
    pub choose: usize,
}

/// An order polynomial in `k` together with the binomial sum it came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderPolyResult {
    #[serde(skip)]
    pub poly: QPoly,
    pub terms: Vec<BinomialTerm>,
}

impl OrderPolyResult {
    /// Merges equal binomials and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = BinomialTerm>) -> Self {
        let mut merged: BTreeMap<(usize, i64), BigInt> = BTreeMap::new();
        for t in terms {
            *merged.entry((t.choose, t.shift)).or_default() += t.coeff;
        }
        let terms: Vec<BinomialTerm> = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((choose, shift), coeff)| BinomialTerm { coeff, shift, choose })
            .collect();
        let poly = terms
            .iter()
            .fold(QPoly::zero(), |acc, t| acc + QPoly::binomial(t.shift, t.choose).scale(&int_to_rational(&t.coeff)));
        OrderPolyResult { poly, terms }
    }

    pub fn value(&self, k: i64) -> Rational {
        self.poly.eval(&Rational::from_integer(k.into()))
    }
}

impl fmt::Display for OrderPolyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = t.coeff.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match t.shift {
                0 => write!(f, "C(k,{})", t.choose)?,
                s if s > 0 => write!(f, "C(k+{s},{})", t.choose)?,
                s => write!(f, "C(k-{},{})", -s, t.choose)?,
            }
        }
        Ok(())
    }
}

/// `d` itself when its labels already follow the arcs, otherwise its
/// relabeling along a topological order.
pub fn natural_form(d: &Digraph) -> Result<Digraph> {
    if !d.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    if d.is_naturally_labeled() {
        Ok(d.clone())
    } else {
        Ok(d.relabel_natural()?.0)
    }
}

/// Permutations of the vertices in which every arc points forward, with
/// statistics taken from the labels of `d` as given.
pub fn linear_extensions(d: &Digraph) -> Result<Vec<Ordering>> {
    if !d.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let preds = d.in_masks();
    let n = d.order();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    extend(&preds, 0, &mut prefix, &mut |perm| out.push(Ordering::new(d, perm.to_vec())));
    Ok(out)
}

fn extend(preds: &[u64], placed: u64, prefix: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if prefix.len() == preds.len() {
        emit(prefix);
        return;
    }
    for v in 0..preds.len() {
        if placed >> v & 1 == 0 && preds[v] & !placed == 0 {
            prefix.push(v);
            extend(preds, placed | 1 << v, prefix, emit);
            prefix.pop();
        }
    }
}

/// `OP(D)` for the natural labeling of `d`.
pub fn op_list(d: &Digraph) -> Result<Vec<Ordering>> {
    linear_extensions(&natural_form(d)?)
}

/// `sum over pi in OP(D) of C(k + p - 1 - rho(pi), p)`.
pub fn omega_strict_expansion(d: &Digraph) -> Result<OrderPolyResult> {
    let p = d.order();
    Ok(OrderPolyResult::from_terms(op_list(d)?.into_iter().map(|o| BinomialTerm {
        coeff: BigInt::one(),
        shift: p as i64 - 1 - o.rho as i64,
        choose: p,
    })))
}

/// `sum over pi in OP(D) of C(k + rho(pi), p)`.
pub fn omega_weak_expansion(d: &Digraph) -> Result<OrderPolyResult> {
    let p = d.order();
    Ok(OrderPolyResult::from_terms(op_list(d)?.into_iter().map(|o| BinomialTerm {
        coeff: BigInt::one(),
        shift: o.rho as i64,
        choose: p,
    })))
}

/// Strict order polynomial as `sum_i t_i C(k, i)`, where `t_i` counts the
/// acyclic tournaments of order `i` left after repeatedly splitting an
/// incomparable pair `u, v` into `u -> v`, `v -> u` and `u = v`.
///
/// Works on transitive closures: adding implied arcs leaves the polynomial
/// unchanged, and identifying two incomparable elements of a closed acyclic
/// relation never creates a cycle, so no branch has to be discarded after
/// the first acyclicity test.
pub fn omega_strict_recursion(d: &Digraph) -> Result<OrderPolyResult> {
    if !d.is_acyclic() {
        return Ok(OrderPolyResult::from_terms([]));
    }
    let n = d.order();
    let reach: Vec<u64> = (0..n).map(|v| d.reachable_from(v)).collect();
    let mut memo = HashMap::new();
    let counts = tournament_counts(reach, &mut memo);
    Ok(OrderPolyResult::from_terms(
        counts.into_iter().enumerate().map(|(i, coeff)| BinomialTerm { coeff, shift: 0, choose: i }),
    ))
}

fn add_arc(reach: &mut [u64], u: usize, v: usize) {
    let gain = reach[v] | 1 << v;
    for a in 0..reach.len() {
        if a == u || reach[a] >> u & 1 == 1 {
            reach[a] |= gain;
        }
    }
}

/// Merges `v` into `u` and removes `v`, shifting higher labels down.
fn merge(reach: &[u64], u: usize, v: usize) -> Vec<u64> {
    let n = reach.len();
    let both = reach[u] | reach[v];
    let squeeze = |mask: u64| {
        let low = mask & ((1u64 << v) - 1);
        let high = (mask >> (v + 1)) << v;
        low | high
    };
    let mut out = Vec::with_capacity(n - 1);
    for a in (0..n).filter(|&a| a != v) {
        let mut m = if a == u { both } else { reach[a] };
        if m >> u & 1 == 1 || m >> v & 1 == 1 {
            m |= both | 1 << u;
        }
        m &= !(1 << v);
        out.push(squeeze(m));
    }
    out
}

fn tournament_counts(reach: Vec<u64>, memo: &mut HashMap<Vec<u64>, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(hit) = memo.get(&reach) {
        return hit.clone();
    }
    let n = reach.len();
    let pair = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| reach[u] >> v & 1 == 0 && reach[v] >> u & 1 == 0);
    let out = match pair {
        None => {
            let mut t = vec![BigInt::zero(); n + 1];
            t[n] = BigInt::one();
            t
        }
        Some((u, v)) => {
            let mut forward = reach.clone();
            add_arc(&mut forward, u, v);
            let mut backward = reach.clone();
            add_arc(&mut backward, v, u);
            let mut t = tournament_counts(forward, memo);
            for (slot, c) in t.iter_mut().zip(tournament_counts(backward, memo)) {
                *slot += c;
            }
            for (slot, c) in t.iter_mut().zip(tournament_counts(merge(&reach, u, v), memo)) {
                *slot += c;
            }
            t
        }
    };
    memo.insert(reach, out.clone());
    out
}

fn check_enum_bound(p: usize, k: u64) -> Result<()> {
    let size = (k as f64).powi(p as i32);
    if size > ENUM_LIMIT as f64 {
        return Err(Error::TooLarge { what: "k^p for map enumeration", limit: ENUM_LIMIT as usize });
    }
    Ok(())
}

/// Number of maps `V -> {1..k}` that increase (strictly or weakly) along
/// every arc, by backtracking over all `k^p` assignments.
pub fn omega_enum(d: &Digraph, k: u64, strict: bool) -> Result<u64> {
    let p = d.order();
    check_enum_bound(p, k)?;
    let arcs: Vec<(usize, usize)> = d.arcs().iter().copied().collect();
    let mut theta = vec![0u64; p];
    let mut count = 0;
    assign(&arcs, k, strict, 0, &mut theta, &mut count);
    Ok(count)
}

fn assign(arcs: &[(usize, usize)], k: u64, strict: bool, v: usize, theta: &mut [u64], count: &mut u64) {
    if v == theta.len() {
        *count += 1;
        return;
    }
    for value in 1..=k {
        theta[v] = value;
        // Arcs whose later endpoint is v can be decided now.
        let ok = arcs.iter().filter(|&&(a, b)| a.max(b) == v).all(|&(a, b)| {
            if strict {
                theta[a] < theta[b]
            } else {
                theta[a] <= theta[b]
            }
        });
        if ok {
            assign(arcs, k, strict, v + 1, theta, count);
        }
    }
}

/// The order polynomial interpolated from enumerated values at
/// `k = 0..=p`.
pub fn omega_interpolated(d: &Digraph, strict: bool) -> Result<QPoly> {
    let p = d.order();
    let points = (0..=p as u64)
        .map(|k| Ok((Rational::from_integer(k.into()), Rational::from_integer(omega_enum(d, k, strict)?.into()))))
        .collect::<Result<Vec<_>>>()?;
    QPoly::interpolate(&points)
}
