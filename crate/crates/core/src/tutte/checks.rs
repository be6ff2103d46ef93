use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::activities::tutte_activities;
use super::tutte_dc;
use crate::error::{Error, Result};
use crate::exactpoly::{binomial, BiPoly};
use crate::flowchrom::{acyclic_orientation_count, chi_tilde_enum, chromatic_poly, flow_poly, CHI_TILDE_VERTEX_LIMIT};
use crate::matroid::Matroid;
use crate::multigraph::generators::complete;
use crate::multigraph::{partitions_stream, Multigraph};
use crate::report::IdentityReport;
use crate::{Rational, ZBiPoly, ZPoly};

/// Named evaluations of `T_G` for connected `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialValues {
    pub spanning_trees: BigInt,
    pub acyclic_orientations: BigInt,
    pub totally_cyclic_orientations: BigInt,
    pub forests: BigInt,
    pub connected_spanning_subgraphs: BigInt,
    pub two_pow_m: BigInt,
}

impl SpecialValues {
    pub fn from_tutte(t: &ZBiPoly) -> Self {
        let at = |x: i64, y: i64| t.eval(&BigInt::from(x), &BigInt::from(y));
        SpecialValues {
            spanning_trees: at(1, 1),
            acyclic_orientations: at(2, 0),
            totally_cyclic_orientations: at(0, 2),
            forests: at(2, 1),
            connected_spanning_subgraphs: at(1, 2),
            two_pow_m: at(2, 2),
        }
    }

    /// The same quantities by direct enumeration over edge subsets and
    /// orientations.
    pub fn by_enumeration(g: &Multigraph) -> Result<Self> {
        const LIMIT: usize = 12;
        let m = g.size();
        if m > LIMIT {
            return Err(Error::TooLarge { what: "edge count for special-value enumeration", limit: LIMIT });
        }
        let n = g.order();
        let (mut trees, mut forests, mut connected) = (0u64, 0u64, 0u64);
        for a in 0..1u64 << m {
            let c = g.components_mask(a);
            let size = a.count_ones() as usize;
            let acyclic = size + c == n;
            forests += u64::from(acyclic);
            connected += u64::from(c == 1);
            trees += u64::from(acyclic && c == 1);
        }
        let mut cyclic = 0u64;
        for bits in 0..1u32 << m {
            let arcs: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, e)| if bits >> i & 1 == 1 { (e.v, e.u) } else { (e.u, e.v) })
                .collect();
            let reach = |from: usize| {
                let mut seen = 1u64 << from;
                let mut stack = vec![from];
                while let Some(v) = stack.pop() {
                    for &(a, b) in &arcs {
                        if a == v && seen >> b & 1 == 0 {
                            seen |= 1 << b;
                            stack.push(b);
                        }
                    }
                }
                seen
            };
            if arcs.iter().all(|&(a, b)| reach(b) >> a & 1 == 1) {
                cyclic += 1;
            }
        }
        Ok(SpecialValues {
            spanning_trees: trees.into(),
            acyclic_orientations: acyclic_orientation_count(g)?.into(),
            totally_cyclic_orientations: cyclic.into(),
            forests: forests.into(),
            connected_spanning_subgraphs: connected.into(),
            two_pow_m: BigInt::one() << m,
        })
    }
}

pub fn special_values(g: &Multigraph) -> Result<SpecialValues> {
    if !g.is_connected() {
        return Err(Error::Precondition("special values need a connected graph".into()));
    }
    Ok(SpecialValues::from_tutte(&tutte_dc(g)))
}

/// Quotient by vertex labels, keeping only edges between distinct classes.
fn quotient(g: &Multigraph, labels: &[usize]) -> Result<Multigraph> {
    let count = labels.iter().max().map_or(0, |l| l + 1);
    let pairs: Vec<_> =
        g.edges().iter().filter(|e| labels[e.u] != labels[e.v]).map(|e| (labels[e.u], labels[e.v])).collect();
    Multigraph::from_pairs(count, &pairs)
}

fn keep_by_mask(g: &Multigraph, mask: u64) -> Multigraph {
    let ids: Vec<_> = g.edges().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.id).collect();
    g.spanning_subgraph(&ids)
}

/// Convolution over vertex partitions whose blocks induce connected
/// bridgeless subgraphs, and over the coloop-free flats of the cycle
/// matroid.
pub fn convolution_check(g: &Multigraph, instance: &str) -> Result<Vec<IdentityReport>> {
    const LIMIT: usize = 8;
    let n = g.order();
    if n > LIMIT {
        return Err(Error::TooLarge { what: "graph order for the partition convolution", limit: LIMIT });
    }
    let t = tutte_dc(g);
    let zero = BigInt::zero();
    let term = |over: &Multigraph, under: &Multigraph| -> ZBiPoly {
        &BiPoly::from_x(&tutte_dc(over).eval_y(&zero)) * &BiPoly::from_y(&tutte_dc(under).eval_x(&zero))
    };
    let mut by_partition = ZBiPoly::zero();
    for p in partitions_stream(n) {
        let admissible = p.blocks.iter().all(|b| {
            let h = g.induced_subgraph(b);
            h.is_connected() && h.is_bridgeless()
        });
        if !admissible {
            continue;
        }
        let labels = p.labels(n);
        let inside: Vec<_> = g.edges().iter().filter(|e| labels[e.u] == labels[e.v]).map(|e| e.id).collect();
        by_partition = by_partition + term(&quotient(g, &labels)?, &g.spanning_subgraph(&inside));
    }
    let m = Matroid::cycle_matroid(g)?;
    let mut by_flats = ZBiPoly::zero();
    for f in m.flats()? {
        if m.restriction(f.mask)?.has_coloop() {
            continue;
        }
        let under = keep_by_mask(g, f.mask);
        let labels = under.component_labels();
        let outside = m.ground() & !f.mask;
        by_flats = by_flats + term(&quotient(&keep_by_mask(g, outside), &labels)?, &under);
    }
    Ok(vec![
        IdentityReport::compare("tutte-partition-convolution", instance, &t, &by_partition),
        IdentityReport::compare("tutte-flat-convolution", instance, &t, &by_flats),
    ])
}

fn to_q(t: &ZBiPoly) -> BiPoly<Rational> {
    t.map(|c| Rational::from_integer(c.clone()))
}

/// `T((v+1)/v, v+1) = (v+1)^|E| / v^r(E)`.
pub fn rational_identity_check(g: &Multigraph, v: &Rational, instance: &str) -> Result<IdentityReport> {
    if v.is_zero() || *v == -Rational::one() {
        return Err(Error::Precondition("rational identity excludes v = 0 and v = -1".into()));
    }
    let one = Rational::one();
    let lhs = to_q(&tutte_dc(g)).eval(&((v + &one) / v), &(v + &one));
    let rank = g.order() - g.component_count();
    let rhs = crate::exactpoly::bipoly::pow_scalar(&(v + &one), g.size() as u32)
        / crate::exactpoly::bipoly::pow_scalar(v, rank as u32);
    Ok(IdentityReport::compare("tutte-rational-point", format!("{instance} v={v}"), &lhs, &rhs))
}

/// `k T(k+1, 0) = (-1)^|V| chi(G, -k)`, with the pair-enumeration oracle
/// for small orders.
pub fn stanley_negative_check(g: &Multigraph, k: u32, instance: &str) -> Result<IdentityReport> {
    if !g.is_connected() {
        return Err(Error::Precondition("negative-point identity needs a connected graph".into()));
    }
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let lhs = BigInt::from(k) * tutte_dc(g).eval(&BigInt::from(k + 1), &BigInt::zero());
    let chi = chromatic_poly(g)?.eval(&BigInt::from(-(k as i64)));
    let rhs = if g.order().is_multiple_of(2) { chi } else { -chi };
    let name = format!("{instance} k={k}");
    if lhs != rhs {
        return Ok(IdentityReport::compare("tutte-negative-chromatic", name, &lhs, &rhs));
    }
    if g.order() <= CHI_TILDE_VERTEX_LIMIT {
        let counted = BigInt::from(chi_tilde_enum(g, k)?);
        return Ok(IdentityReport::compare("tutte-negative-chromatic", name, &lhs, &counted));
    }
    Ok(IdentityReport::pass("tutte-negative-chromatic", name))
}

/// `T(-1, -1) = (-1)^|E| (-2)^dim B` with `B` the bicycle space.
pub fn read_rosenstiehl_check(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    let lhs = tutte_dc(g).eval(&BigInt::from(-1), &BigInt::from(-1));
    let sign = if g.size().is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let rhs = sign * BigInt::from(-2).pow(g.bicycle_dimension() as u32);
    Ok(IdentityReport::compare("tutte-bicycle-point", instance, &lhs, &rhs))
}

/// `T_{K_{n+2}}(1, -1) = T_{K_n}(2, -1)`.
pub fn merino_identity_check(n: usize) -> Result<IdentityReport> {
    if n == 0 || n > 4 {
        return Err(Error::Precondition(format!("complete-graph identity is checked for 1 <= n <= 4, got {n}")));
    }
    let lhs = tutte_dc(&complete(n + 2)).eval(&BigInt::one(), &BigInt::from(-1));
    let rhs = tutte_dc(&complete(n)).eval(&BigInt::from(2), &BigInt::from(-1));
    Ok(IdentityReport::compare("complete-graph-shift", format!("n={n}"), &lhs, &rhs))
}

/// Records whether `max(T(2,0), T(0,2)) >= T(1,1)` and
/// `T(2,0) T(0,2) >= T(1,1)^2` hold; a failure is a counterexample.
pub fn merino_welsh_probe(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    if g.has_loops() || !g.is_connected() || g.order() < 2 || g.block_count() != 1 {
        return Err(Error::Precondition("probe needs a loopless 2-connected graph".into()));
    }
    let sv = SpecialValues::from_tutte(&tutte_dc(g));
    let (a, c, t) = (&sv.acyclic_orientations, &sv.totally_cyclic_orientations, &sv.spanning_trees);
    let ok = a.max(c) >= t && a * c >= t * t;
    Ok(IdentityReport::check("tree-orientation-inequalities", instance, ok, || {
        (format!("T(2,0)={a}, T(0,2)={c}"), format!("T(1,1)={t}"))
    }))
}

/// Properties of the activity coefficients `t_{i,j}`: (i) `t_{1,0} =
/// t_{0,1}` for `|E| >= 2`; (ii)-(iv) support and corner values, checked
/// only without loops and bridges; (v) the alternating binomial sums vanish
/// for `k < |E|`.
pub fn coefficient_property_check(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    let m = g.size();
    let rank: Vec<usize> = (0..m).collect();
    let t = tutte_activities(g, &rank)?;
    let r = (g.order() - 1) as u32;
    let nul = m as u32 - r;
    let fail = |item: &str, detail: String| IdentityReport::check("tutte-coefficients", instance, false, || (item.to_string(), detail));
    if m >= 2 && t.get(1, 0) != t.get(0, 1) {
        return Ok(fail("(i)", format!("t10={} t01={}", t.get(1, 0), t.get(0, 1))));
    }
    if !g.has_loops() && g.is_bridgeless() {
        if t.counts.keys().any(|&(i, j)| i > r || j > nul) {
            return Ok(fail("(ii)", "coefficient outside the rank/nullity box".into()));
        }
        if t.get(r, 0) != 1 || t.get(0, nul) != 1 {
            return Ok(fail("(iii)", format!("t(r,0)={} t(0,n)={}", t.get(r, 0), t.get(0, nul))));
        }
        if t.counts.keys().any(|&(i, j)| (i == r && j > 0) || (j == nul && i > 0)) {
            return Ok(fail("(iv)", "nonzero coefficient on the far edges".into()));
        }
    }
    for k in 0..m as u32 {
        let mut sum = BigInt::zero();
        for i in 0..=k {
            for j in 0..=k - i {
                let term = binomial((k - i) as i64, j as i64) * t.get(i, j);
                if j % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
        }
        if !sum.is_zero() {
            return Ok(fail("(v)", format!("k={k} sum={sum}")));
        }
    }
    Ok(IdentityReport::pass("tutte-coefficients", instance))
}

pub fn t_equivalent(g: &Multigraph, h: &Multigraph) -> bool {
    tutte_dc(g) == tutte_dc(h)
}

/// `chi(G, x) = (-1)^(|V|-c) x^c T(1-x, 0)`.
pub fn chromatic_specialization_check(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    let c = g.component_count();
    let t0 = tutte_dc(g).eval_y(&BigInt::zero());
    let mut rhs = t0.compose(&ZPoly::from_ints(&[1, -1])).shift_up(c);
    if (g.order() - c) % 2 == 1 {
        rhs = -rhs;
    }
    Ok(IdentityReport::compare("chromatic-from-tutte", instance, &chromatic_poly(g)?, &rhs))
}

/// `F(G, x) = (-1)^(|E|-|V|+c) T(0, 1-x)`.
pub fn flow_specialization_check(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    let c = g.component_count();
    let t0 = tutte_dc(g).eval_x(&BigInt::zero());
    let mut rhs = t0.compose(&ZPoly::from_ints(&[1, -1]));
    if (g.size() + c + g.order()) % 2 == 1 {
        rhs = -rhs;
    }
    Ok(IdentityReport::compare("flow-from-tutte", instance, &flow_poly(g), &rhs))
}
