use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::chromatic::chromatic_poly;
use super::flow::flow_poly;
use crate::error::{Error, Result};
use crate::exactpoly::{binomial, root_multiplicity_at, to_rational, BiPoly};
use crate::matroid::Matroid;
use crate::multigraph::{EdgeId, Multigraph};
use crate::report::IdentityReport;
use crate::{QPoly, ZBiPoly, ZPoly};

/// `chi(G, x + y) = sum_S chi(G[S], x) chi(G - S, y)`.
pub fn tutte_bivariate_chromatic_check(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    const LIMIT: usize = 10;
    let n = g.order();
    if n > LIMIT {
        return Err(Error::TooLarge { what: "graph order for the bivariate chromatic check", limit: LIMIT });
    }
    let lhs = chromatic_poly(g)?.compose_bi(&(ZBiPoly::x() + ZBiPoly::y()));
    let mut rhs = ZBiPoly::zero();
    for s in 0..1u32 << n {
        let inside: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
        let outside: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 0).collect();
        let a = BiPoly::from_x(&chromatic_poly(&g.induced_subgraph(&inside))?);
        let b = BiPoly::from_y(&chromatic_poly(&g.induced_subgraph(&outside))?);
        rhs = rhs + &a * &b;
    }
    Ok(IdentityReport::compare("chromatic-sum-split", instance, &lhs, &rhs))
}

/// The multiplicity of the root `x = 1` of `F(G, x)` equals the number of
/// blocks, for bridgeless connected `G`.
pub fn wakelin_multiplicity_check(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    if !g.is_connected() || !g.is_bridgeless() || g.size() == 0 {
        return Err(Error::Precondition("multiplicity check needs a bridgeless connected graph with an edge".into()));
    }
    let f = to_rational(&flow_poly(g));
    let mult = root_multiplicity_at(&f, &crate::scalar::rational(1, 1))?;
    Ok(IdentityReport::compare("flow-root-one-multiplicity", instance, &mult, &g.block_count()))
}

/// `F(G) = C(M*(G))` and `chi(G) = x^c C(M(G))`, the matroid form of the
/// planar duality `chi(G) = x F(G*)`.
pub fn duality_checks(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    let f = flow_poly(g);
    let cocycle = Matroid::cocycle_matroid(g)?.char_poly_dc()?;
    let chi = chromatic_poly(g)?;
    let cycle = Matroid::cycle_matroid(g)?.char_poly_dc()?.shift_up(g.component_count());
    Ok(IdentityReport::check("flow-chromatic-matroid-duality", instance, f == cocycle && chi == cycle, || {
        (format!("F={f}, chi={chi}"), format!("C(M*)={cocycle}, x^c C(M)={cycle}"))
    }))
}

/// Decompositions with a known flow factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacksonCut {
    /// `G \ e` splits at `v` into `H1` (vertex set `side`, which holds `v`)
    /// and `H2` (the remaining vertices plus `v`); `e` joins the two sides.
    VertexSplit { v: usize, edge: EdgeId, side: Vec<usize> },
    /// A 2- or 3-edge cut separating `side` from the rest.
    EdgeCut { side: Vec<usize> },
}

fn membership(n: usize, side: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; n];
    for &v in side {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, order: n });
        }
        inside[v] = true;
    }
    Ok(inside)
}

/// Collapses all vertices outside `keep` into one new vertex.
fn collapse_outside(g: &Multigraph, keep: &[bool]) -> Result<Multigraph> {
    let outside: Vec<usize> = (0..g.order()).filter(|&v| !keep[v]).collect();
    if !g.induced_subgraph(&outside).is_connected() {
        return Err(Error::Precondition("each side of the cut must be connected".into()));
    }
    let mut label = vec![0; g.order()];
    let mut next = 0;
    for v in 0..g.order() {
        if keep[v] {
            label[v] = next;
            next += 1;
        }
    }
    for &v in &outside {
        label[v] = next;
    }
    let pairs: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| keep[e.u] || keep[e.v])
        .map(|e| (label[e.u], label[e.v]))
        .collect();
    Multigraph::from_pairs(next + 1, &pairs)
}

/// Checks `F(G) D = F(G1) F(G2)` with `D = x - 1` for vertex splits and
/// 2-edge cuts, and `D = (x - 1)(x - 2)` for 3-edge cuts.
pub fn jackson_cut_factorization_check(g: &Multigraph, cut: &JacksonCut, instance: &str) -> Result<IdentityReport> {
    if !g.is_connected() || !g.is_bridgeless() {
        return Err(Error::Precondition("cut factorization needs a bridgeless connected graph".into()));
    }
    let xm = |k: i64| ZPoly::from_ints(&[-k, 1]);
    let (g1, g2, divisor) = match cut {
        JacksonCut::VertexSplit { v, edge, side } => {
            let in1 = membership(g.order(), side)?;
            if !in1[*v] {
                return Err(Error::Precondition("the split vertex must lie in the given side".into()));
            }
            let e = g.edge(*edge)?;
            let (u1, u2) = match (in1[e.u] && e.u != *v, in1[e.v] && e.v != *v) {
                (true, false) if e.v != *v => (e.u, e.v),
                (false, true) if e.u != *v => (e.v, e.u),
                _ => return Err(Error::Precondition("the edge must join the two sides away from the split vertex".into())),
            };
            let in2: Vec<bool> = (0..g.order()).map(|x| !in1[x] || x == *v).collect();
            let mut h1 = Vec::new();
            let mut h2 = Vec::new();
            for f in g.edges().iter().filter(|f| f.id != *edge) {
                if in1[f.u] && in1[f.v] {
                    h1.push((f.u, f.v));
                } else if in2[f.u] && in2[f.v] {
                    h2.push((f.u, f.v));
                } else {
                    return Err(Error::Precondition(format!("edge {} crosses the split", f.id)));
                }
            }
            h1.push((*v, u1));
            h2.push((*v, u2));
            (Multigraph::from_pairs(g.order(), &h1)?, Multigraph::from_pairs(g.order(), &h2)?, xm(1))
        }
        JacksonCut::EdgeCut { side } => {
            let in1 = membership(g.order(), side)?;
            let crossing = g.edges().iter().filter(|e| in1[e.u] != in1[e.v]).count();
            let divisor = match crossing {
                2 => xm(1),
                3 => xm(1) * xm(2),
                k => return Err(Error::Precondition(format!("expected a 2- or 3-edge cut, found {k} crossing edges"))),
            };
            let in2: Vec<bool> = in1.iter().map(|b| !b).collect();
            (collapse_outside(g, &in1)?, collapse_outside(g, &in2)?, divisor)
        }
    };
    // Isolated vertices left by the vertex split do not change flow counts.
    let lhs = flow_poly(g) * divisor;
    let rhs = flow_poly(&g1) * flow_poly(&g2);
    Ok(IdentityReport::compare("flow-cut-factorization", instance, &lhs, &rhs))
}

/// Writes `F = x^r - b_1 x^(r-1) + b_2 x^(r-2) - ...` and returns
/// `[1, b_1, ..., b_r]`, or `None` unless every `b_i` is positive.
pub fn flow_b_coefficients(f: &ZPoly) -> Option<Vec<BigInt>> {
    let r = f.degree()?;
    (0..=r)
        .map(|i| {
            let c = f.coeff(r - i);
            let expected_positive = i % 2 == 0;
            (c.is_positive() == expected_positive && !c.is_zero()).then(|| c.abs())
        })
        .collect()
}

fn disconnects(g: &Multigraph, removed: &[usize]) -> bool {
    let keep: Vec<EdgeId> =
        g.edges().iter().enumerate().filter(|(i, _)| !removed.contains(i)).map(|(_, e)| e.id).collect();
    g.components(&keep) > g.component_count()
}

/// For bridgeless connected `G`: every `b_i > 0`; when there is no 2-edge
/// cut, also `b_1 = m` and `b_2 = C(m,2) - gamma` with `gamma` the number of
/// 3-edge cuts.
pub fn flow_coefficient_check(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    const LIMIT: usize = 24;
    if !g.is_connected() || !g.is_bridgeless() {
        return Err(Error::Precondition("coefficient check needs a bridgeless connected graph".into()));
    }
    if g.size() > LIMIT {
        return Err(Error::TooLarge { what: "edge count for cut enumeration", limit: LIMIT });
    }
    let f = flow_poly(g);
    let Some(b) = flow_b_coefficients(&f) else {
        return Ok(IdentityReport::check("flow-coefficients", instance, false, || (f.to_string(), "alternating signs".into())));
    };
    let m = g.size();
    let two_cut = (0..m).any(|i| (i + 1..m).any(|j| disconnects(g, &[i, j])));
    if two_cut || b.len() < 3 {
        return Ok(IdentityReport::pass("flow-coefficients", instance));
    }
    let mut gamma = 0i64;
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                if disconnects(g, &[i, j, k]) {
                    gamma += 1;
                }
            }
        }
    }
    let expected = (BigInt::from(m), binomial(m as i64, 2) - gamma);
    let got = (b[1].clone(), b[2].clone());
    Ok(IdentityReport::check("flow-coefficients", instance, got == expected, || {
        (format!("b1={}, b2={}", got.0, got.1), format!("m={}, C(m,2)-gamma={}", expected.0, expected.1))
    }))
}

/// Spot check that `F(G, x) > 0` at a few rationals `x >= 2 log2(n)`.
pub fn flow_root_bound_check(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    if !g.is_bridgeless() || g.size() == 0 {
        return Err(Error::Precondition("root bound check needs a bridgeless graph with an edge".into()));
    }
    let f: QPoly = to_rational(&flow_poly(g));
    let start = (2.0 * (g.order().max(2) as f64).log2()).ceil() as i64;
    let samples = [(start, 1), (2 * start + 1, 2), (start + 1, 1), (start + 5, 1)];
    let bad = samples
        .iter()
        .map(|&(p, q)| crate::scalar::rational(p, q))
        .find(|x| !f.eval(x).is_positive());
    Ok(IdentityReport::check("flow-real-root-bound", instance, bad.is_none(), || {
        let x = bad.clone().expect("failing sample");
        (format!("F({x}) = {}", f.eval(&x)), "positive".into())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle, empty, figure_eight, wheel};

    #[test]
    fn bivariate_chromatic() {
        for (i, g) in [empty(3), complete(2), cycle(4), wheel(4)].iter().enumerate() {
            assert!(tutte_bivariate_chromatic_check(g, &i.to_string()).unwrap().passed());
        }
    }

    #[test]
    fn multiplicity_at_one_on_cycles_and_bowtie() {
        assert!(wakelin_multiplicity_check(&cycle(5), "C5").unwrap().passed());
        let bowtie = figure_eight(3, 3);
        assert_eq!(bowtie.block_count(), 2);
        assert!(wakelin_multiplicity_check(&bowtie, "bowtie").unwrap().passed());
        assert!(wakelin_multiplicity_check(&complete(2), "K2").is_err());
    }

    #[test]
    fn duality_on_small_graphs() {
        for g in [complete(4), wheel(5), cycle(3)] {
            assert!(duality_checks(&g, "g").unwrap().passed());
        }
    }

    #[test]
    fn cut_factorizations() {
        // Two triangles through vertex 0 plus the edge 1-3.
        let g = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let split = JacksonCut::VertexSplit { v: 0, edge: EdgeId(6), side: vec![0, 1, 2] };
        assert!(jackson_cut_factorization_check(&g, &split, "split").unwrap().passed());

        let two = Multigraph::from_pairs(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4)]).unwrap();
        let cut = JacksonCut::EdgeCut { side: vec![0, 1, 2] };
        assert!(jackson_cut_factorization_check(&two, &cut, "2-cut").unwrap().passed());

        let k4 = complete(4);
        let cut = JacksonCut::EdgeCut { side: vec![0] };
        assert!(jackson_cut_factorization_check(&k4, &cut, "3-cut").unwrap().passed());

        let bad = JacksonCut::EdgeCut { side: vec![0, 1] };
        assert!(jackson_cut_factorization_check(&k4, &bad, "4-cut").is_err());
    }

    #[test]
    fn coefficients_of_k4() {
        let b = flow_b_coefficients(&flow_poly(&complete(4))).unwrap();
        assert_eq!(b, vec![1.into(), 6.into(), 11.into(), 6.into()]);
        assert!(flow_coefficient_check(&complete(4), "K4").unwrap().passed());
        assert!(flow_coefficient_check(&complete(5), "K5").unwrap().passed());
        assert!(flow_root_bound_check(&complete(5), "K5").unwrap().passed());
    }
}
