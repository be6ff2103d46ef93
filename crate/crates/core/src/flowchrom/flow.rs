//! Flow polynomials: reduction rules with parallel-class branching, the
//! subset expansion, and nowhere-zero flow enumeration.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multigraph::compact::Compact;
use crate::multigraph::Multigraph;
use crate::ZPoly;

fn x_minus(k: i64) -> ZPoly {
    ZPoly::from_ints(&[-k, 1])
}

/// `F(L_k, x) = ((x-1)^k + (-1)^k (x-1)) / x` for `k` parallel edges.
pub fn bundle_flow(k: u32) -> ZPoly {
    if k == 0 {
        return ZPoly::one();
    }
    let sign = if k.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let num = x_minus(1).pow(k) + x_minus(1).scale(&sign);
    let (q, r) = num.div_rem_integer_monic(&ZPoly::x());
    debug_assert!(r.is_zero());
    q
}

struct Engine {
    memo: HashMap<Vec<u32>, ZPoly>,
}

impl Engine {
    fn solve(&mut self, mut g: Compact) -> ZPoly {
        let loops = g.strip_loops();
        g.drop_isolated();
        x_minus(1).pow(loops) * self.connected_parts(g)
    }

    fn connected_parts(&mut self, g: Compact) -> ZPoly {
        let mut out = ZPoly::one();
        for comp in g.components() {
            let part = g.induced(&comp);
            let blocks = part.blocks();
            for block in blocks {
                let b = part.induced(&block);
                out = out * self.block(b);
                if out.is_zero() {
                    return out;
                }
            }
        }
        out
    }

    /// `g` is loopless and 2-connected (or a single parallel class).
    fn block(&mut self, mut g: Compact) -> ZPoly {
        loop {
            if g.order() == 2 {
                return bundle_flow(g.w[0][1]);
            }
            // A degree-2 vertex lies in series: contracting one of its edges
            // leaves the flow polynomial unchanged.
            match (0..g.order()).find(|&v| g.degree(v) == 2) {
                Some(w) => {
                    let u = (0..g.order()).find(|&u| u != w && g.w[w][u] > 0).expect("neighbor");
                    g.w[w][u] -= 1;
                    g.w[u][w] -= 1;
                    g.identify(u, w);
                }
                None => break,
            }
        }
        let key = g.key();
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let (u, v) = g.heaviest_class().expect("block has an edge");
        let k = g.w[u][v];
        let mut deleted = g.clone();
        deleted.delete_class(u, v);
        let mut contracted = deleted.clone();
        contracted.identify(u, v);
        // F(G_k) = sum_{j=1..k} (-1)^(k-j) (x-1)^(j-1) F(H) + (-1)^k F(G_0).
        let h = self.solve(contracted);
        let mut coef = ZPoly::zero();
        for j in 1..=k {
            let term = x_minus(1).pow(j - 1);
            coef = if (k - j).is_multiple_of(2) { coef + term } else { coef - term };
        }
        let rest = self.connected_parts(deleted);
        let out = coef * h + if k.is_multiple_of(2) { rest } else { -rest };
        self.memo.insert(key, out.clone());
        out
    }
}

impl ZPoly {
    /// Division by a monic integer polynomial, which stays integral.
    pub(crate) fn div_rem_integer_monic(&self, d: &ZPoly) -> (ZPoly, ZPoly) {
        let dd = d.degree().expect("nonzero divisor");
        assert!(d.leading().is_some_and(|l| l.is_one()), "divisor must be monic");
        let mut r = self.coeffs().to_vec();
        if r.len() <= dd {
            return (ZPoly::zero(), self.clone());
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs().iter().enumerate() {
                r[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        (ZPoly::new(q), ZPoly::new(r))
    }
}

/// `F(G, x)` by the reduction rules: loops give `x - 1`, bridges give 0,
/// components and blocks multiply, degree-2 vertices are suppressed, and
/// the remaining graph branches on a whole parallel class.
pub fn flow_poly(g: &Multigraph) -> ZPoly {
    Engine { memo: HashMap::new() }.solve(Compact::from_graph(g))
}

/// `sum_A (-1)^(|E|-|A|) x^(|A| - |V| + c(A))`.
pub fn subset_flow_expansion(g: &Multigraph) -> Result<ZPoly> {
    const LIMIT: usize = 20;
    let m = g.size();
    if m > LIMIT {
        return Err(Error::TooLarge { what: "edge count for subset expansion", limit: LIMIT });
    }
    let mut coeffs = vec![BigInt::zero(); m + 1];
    for a in 0..1u64 << m {
        let nullity = a.count_ones() as usize + g.components_mask(a) - g.order();
        if (m - a.count_ones() as usize).is_multiple_of(2) {
            coeffs[nullity] += 1;
        } else {
            coeffs[nullity] -= 1;
        }
    }
    Ok(ZPoly::new(coeffs))
}

pub const FLOW_ENUM_LIMIT: usize = 14;

/// Counts nowhere-zero `Z_q`-flows for the orientation `u -> v` of each
/// edge, reversed where `reverse[i]` is set.
pub fn flow_count_enum_oriented(g: &Multigraph, q: u32, reverse: &[bool]) -> Result<u64> {
    if g.size() > FLOW_ENUM_LIMIT {
        return Err(Error::TooLarge { what: "edge count for flow enumeration", limit: FLOW_ENUM_LIMIT });
    }
    if q < 2 {
        return Err(Error::Precondition(format!("flow enumeration needs q >= 2, got {q}")));
    }
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| if reverse.get(i).copied().unwrap_or(false) { (e.v, e.u) } else { (e.u, e.v) })
        .collect();
    let n = g.order();
    let q = q as i64;
    // Spanning forest: tree arcs are forced by conservation once the
    // cotree arcs carry values, so only cotree values are enumerated.
    let mut parent_arc = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut tree = vec![false; arcs.len()];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for (i, &(a, b)) in arcs.iter().enumerate() {
                let other = if a == v { b } else if b == v { a } else { continue };
                if !seen[other] {
                    seen[other] = true;
                    parent_arc[other] = i;
                    tree[i] = true;
                    order.push(other);
                }
            }
        }
    }
    let cotree: Vec<usize> = (0..arcs.len()).filter(|&i| !tree[i]).collect();
    let mut values = vec![1i64; cotree.len()];
    let mut count = 0u64;
    loop {
        let mut excess = vec![0i64; n];
        for (&i, &f) in cotree.iter().zip(&values) {
            let (a, b) = arcs[i];
            excess[a] += f;
            excess[b] -= f;
        }
        let mut ok = true;
        for &v in order.iter().rev() {
            let i = parent_arc[v];
            if i == usize::MAX {
                continue;
            }
            let (a, b) = arcs[i];
            let f = if a == v { -excess[v] } else { excess[v] }.rem_euclid(q);
            if f == 0 {
                ok = false;
                break;
            }
            excess[a] += f;
            excess[b] -= f;
        }
        if ok {
            count += 1;
        }
        // Odometer over (Z_q \ {0})^cotree.
        let mut i = 0;
        while i < values.len() && values[i] == q - 1 {
            values[i] = 1;
            i += 1;
        }
        if i == values.len() {
            break;
        }
        values[i] += 1;
    }
    Ok(count)
}

/// Nowhere-zero `Z_q`-flow count with every edge oriented from its lower to
/// its higher endpoint.
pub fn flow_count_enum(g: &Multigraph, q: u32) -> Result<u64> {
    let reverse: Vec<bool> = g.edges().iter().map(|e| e.u > e.v).collect();
    flow_count_enum_oriented(g, q, &reverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{bundle, complete, cycle, figure_eight, path, theta};

    #[test]
    fn standard_families() {
        for n in 1..=6 {
            assert_eq!(flow_poly(&cycle(n)), x_minus(1), "C_{n}");
        }
        assert_eq!(flow_poly(&bundle(3)), x_minus(1) * x_minus(2));
        assert_eq!(flow_poly(&complete(4)), x_minus(1) * x_minus(2) * x_minus(3));
        assert!(flow_poly(&path(3)).is_zero());
        assert_eq!(flow_poly(&figure_eight(3, 4)), x_minus(1).pow(2));
    }

    #[test]
    fn bundle_formula_matches_subsets() {
        for k in 1..=6 {
            assert_eq!(bundle_flow(k), subset_flow_expansion(&bundle(k as usize)).unwrap(), "L_{k}");
        }
    }

    #[test]
    fn rules_match_subset_expansion() {
        let graphs = [
            complete(5),
            theta(&[1, 2, 3]).unwrap(),
            crate::multigraph::generators::wheel(5),
            Multigraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (0, 0)]).unwrap(),
        ];
        for g in graphs {
            assert_eq!(flow_poly(&g), subset_flow_expansion(&g).unwrap(), "{g}");
        }
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(flow_count_enum(&cycle(3), 4).unwrap(), 3);
        assert_eq!(flow_count_enum(&complete(4), 3).unwrap(), 0);
        assert_eq!(flow_count_enum(&complete(4), 4).unwrap(), 6);
        let reversed = vec![true, false, true, false, false, true];
        assert_eq!(flow_count_enum_oriented(&complete(4), 5, &reversed).unwrap(), 24);
        assert!(flow_count_enum(&cycle(3), 1).is_err());
    }
}
