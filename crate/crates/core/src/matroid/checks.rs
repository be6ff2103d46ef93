use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Matroid;
use crate::error::Result;
use crate::exactpoly::BiPoly;
use crate::multigraph::Multigraph;
use crate::report::IdentityReport;
use crate::{ZBiPoly, ZPoly};

fn submasks(f: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(f);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & f) };
        Some(cur)
    })
}

/// `sum_{A in F, r(A) = r(F)} (-1)^|A|` equals `mu(0, F)` for every flat of a
/// loopless matroid, and vanishes when a loop is present.
pub fn lemma_flat_sum_check(m: &Matroid, instance: &str) -> Result<IdentityReport> {
    let mu = m.mobius()?;
    let looped = m.has_loop();
    for (&f, mu_f) in &mu {
        let rf = m.rank(f);
        let sum: i64 = submasks(f)
            .filter(|&a| m.rank(a) == rf)
            .map(|a| if a.count_ones() % 2 == 0 { 1 } else { -1 })
            .sum();
        let expected = if looped { BigInt::zero() } else { mu_f.clone() };
        if BigInt::from(sum) != expected {
            return Ok(IdentityReport::compare("flat-spanning-sum", format!("{instance} F={f:#b}"), &BigInt::from(sum), &expected));
        }
    }
    Ok(IdentityReport::pass("flat-spanning-sum", instance))
}

/// `C(M; xy) = sum_F C(M/F; x) y^(r(M)-r(F)) C(M|F; y)`.
pub fn kung_identity_check(m: &Matroid, instance: &str) -> Result<IdentityReport> {
    let lhs = BiPoly::from_product_var(&m.char_poly_subset()?);
    let r = m.full_rank() as u32;
    let mut rhs = ZBiPoly::zero();
    for f in m.flats()? {
        let over = BiPoly::from_x(&m.contraction(f.mask)?.char_poly_subset()?);
        let under = BiPoly::from_y(&m.restriction(f.mask)?.char_poly_subset()?);
        let shift = ZBiPoly::term(BigInt::one(), 0, r - f.rank as u32);
        rhs = rhs + &(&over * &under) * &shift;
    }
    Ok(IdentityReport::compare("char-product-split", instance, &lhs, &rhs))
}

/// `x^c(G) C(M(G); x)`.
pub fn chromatic_from_cycle_matroid(g: &Multigraph) -> Result<ZPoly> {
    let c = Matroid::cycle_matroid(g)?.char_poly_subset()?;
    Ok(c.shift_up(g.component_count()))
}

/// Contracts every edge whose bit is set in `mask`; the graph keeps its
/// other edges, now between component representatives.
fn contract_mask(g: &Multigraph, mask: u64) -> Result<Multigraph> {
    let keep: Vec<_> = g.edges().iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.id).collect();
    let labels = g.spanning_subgraph(&keep).component_labels();
    let count = labels.iter().max().map_or(0, |l| l + 1);
    let pairs: Vec<_> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 0)
        .map(|(_, e)| (labels[e.u], labels[e.v]))
        .collect();
    Multigraph::from_pairs(count, &pairs)
}

/// `chi(G; xy) = sum_F chi(G/F; x) chi((V, F); y)` over flats of the cycle
/// matroid, with the graph minors built directly.
pub fn chromatic_product_identity_check(g: &Multigraph, instance: &str) -> Result<IdentityReport> {
    let m = Matroid::cycle_matroid(g)?;
    let lhs = BiPoly::from_product_var(&chromatic_from_cycle_matroid(g)?);
    let mut rhs = ZBiPoly::zero();
    for f in m.flats()? {
        let ids: Vec<_> = g.edges().iter().enumerate().filter(|(i, _)| f.mask >> i & 1 == 1).map(|(_, e)| e.id).collect();
        let over = BiPoly::from_x(&chromatic_from_cycle_matroid(&contract_mask(g, f.mask)?)?);
        let under = BiPoly::from_y(&chromatic_from_cycle_matroid(&g.spanning_subgraph(&ids))?);
        rhs = rhs + &over * &under;
    }
    Ok(IdentityReport::compare("chromatic-product-split", instance, &lhs, &rhs))
}

/// `T_M = sum_A T_{M/A}(x, 0) T_{M|A}(0, y)`, over all subsets and again over
/// the flats `F` whose restriction has no coloop.
pub fn tutte_convolution_checks(m: &Matroid, instance: &str) -> Result<Vec<IdentityReport>> {
    let t = m.tutte_dc()?;
    let piece = |a: u64| -> Result<ZBiPoly> {
        let over = m.contraction(a)?.tutte_dc()?.eval_y(&BigInt::zero());
        let under = m.restriction(a)?.tutte_dc()?.eval_x(&BigInt::zero());
        Ok(&BiPoly::from_x(&over) * &BiPoly::from_y(&under))
    };
    let mut all = ZBiPoly::zero();
    for a in 0..=m.ground() {
        all = all + piece(a)?;
    }
    let mut flats = ZBiPoly::zero();
    for f in m.flats()? {
        if !m.restriction(f.mask)?.has_coloop() {
            flats = flats + piece(f.mask)?;
        }
    }
    Ok(vec![
        IdentityReport::compare("tutte-convolution-subsets", instance, &t, &all),
        IdentityReport::compare("tutte-convolution-flats", instance, &t, &flats),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle, wheel};

    fn samples() -> Vec<(String, Matroid)> {
        let mut out = vec![
            ("U(2,4)".to_string(), Matroid::uniform(2, 4).unwrap()),
            ("U(3,5)".to_string(), Matroid::uniform(3, 5).unwrap()),
            ("M(K4)".to_string(), Matroid::cycle_matroid(&complete(4)).unwrap()),
            ("M*(W4)".to_string(), Matroid::cocycle_matroid(&wheel(4)).unwrap()),
        ];
        let looped = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0), (1, 1), (0, 1)]).unwrap();
        out.push(("looped".to_string(), Matroid::cycle_matroid(&looped).unwrap()));
        out
    }

    #[test]
    fn flat_sum_lemma() {
        for (name, m) in samples() {
            assert!(lemma_flat_sum_check(&m, &name).unwrap().passed(), "{name}");
        }
    }

    #[test]
    fn flat_split() {
        for (name, m) in samples() {
            assert!(kung_identity_check(&m, &name).unwrap().passed(), "{name}");
        }
    }

    #[test]
    fn tutte_convolutions() {
        for (name, m) in samples() {
            for r in tutte_convolution_checks(&m, &name).unwrap() {
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn chromatic_split_on_graphs() {
        let graphs = [cycle(4), complete(4), wheel(4), Multigraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2)]).unwrap()];
        for (i, g) in graphs.iter().enumerate() {
            assert!(chromatic_product_identity_check(g, &format!("g{i}")).unwrap().passed());
        }
        assert_eq!(chromatic_from_cycle_matroid(&complete(3)).unwrap(), ZPoly::from_ints(&[0, 2, -3, 1]));
    }
}
