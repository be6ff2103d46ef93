use num_bigint::BigInt;
use num_traits::One;

use super::{
    check_enum_bound, linear_extensions, natural_form, omega_enum, omega_interpolated, omega_strict_expansion,
    omega_weak_expansion, op_list, BinomialTerm, OrderPolyResult, Ordering,
};
use crate::error::{Error, Result};
use crate::exactpoly::{binomial, series_coeffs, BiPoly};
use crate::multigraph::Digraph;
use crate::report::IdentityReport;
use crate::{QBiPoly, QPoly, Rational};

pub const ORDERING_CRITERION_LIMIT: usize = 8;

/// `Omega(D, k) = (-1)^p Omega_strict(D, -k)` as polynomials.
pub fn reciprocity_check(d: &Digraph) -> Result<IdentityReport> {
    let p = d.order();
    let strict = omega_strict_expansion(d)?.poly;
    let mut reflected = strict.compose(&-QPoly::x());
    if p % 2 == 1 {
        reflected = -reflected;
    }
    let weak = omega_weak_expansion(d)?.poly;
    Ok(IdentityReport::compare("order polynomial reciprocity", d.to_string(), &weak, &reflected))
}

/// Series coefficients of `sum x^(rho+1) / (1-x)^(p+1)` and
/// `sum x^(p-rho) / (1-x)^(p+1)` against enumerated strict and weak counts
/// for `1 <= k <= k_max`.
pub fn genfun_check(d: &Digraph, k_max: u64) -> Result<IdentityReport> {
    let p = d.order();
    let ops = op_list(d)?;
    let numerator = |exp: &dyn Fn(&Ordering) -> usize| {
        ops.iter().fold(QPoly::zero(), |acc, o| acc + QPoly::monomial(Rational::one(), exp(o)))
    };
    let strict_series = series_coeffs(&numerator(&|o| o.rho + 1), p, k_max as usize);
    let weak_series = series_coeffs(&numerator(&|o| p - o.rho), p, k_max as usize);
    for k in 1..=k_max {
        let strict = Rational::from_integer(omega_enum(d, k, true)?.into());
        let weak = Rational::from_integer(omega_enum(d, k, false)?.into());
        if strict != strict_series[k as usize] || weak != weak_series[k as usize] {
            return Ok(IdentityReport::check("order polynomial generating functions", d.to_string(), false, || {
                (format!("k={k}: counts {strict}, {weak}"), format!("series {}, {}", strict_series[k as usize], weak_series[k as usize]))
            }));
        }
    }
    Ok(IdentityReport::pass("order polynomial generating functions", d.to_string()))
}

/// Vertex sets closed under predecessors.
fn order_ideals(d: &Digraph) -> Vec<u64> {
    let preds = d.in_masks();
    (0..1u64 << d.order())
        .filter(|&s| (0..d.order()).all(|v| s >> v & 1 == 0 || preds[v] & !s == 0))
        .collect()
}

/// `Omega_strict(D, x + y) = sum over order ideals D' of
/// Omega_strict(D', x) Omega_strict(D - V(D'), y)`.
pub fn tugger_check(d: &Digraph) -> Result<IdentityReport> {
    let full = (1u64 << d.order()) - 1;
    let lhs = omega_strict_expansion(d)?.poly.compose_bi(&(QBiPoly::x() + QBiPoly::y()));
    let mut rhs = QBiPoly::zero();
    for ideal in order_ideals(d) {
        let low = omega_strict_expansion(&d.induced(ideal))?.poly;
        let high = omega_strict_expansion(&d.induced(full & !ideal))?.poly;
        rhs = rhs + BiPoly::from_x(&low) * BiPoly::from_y(&high);
    }
    Ok(IdentityReport::compare("order polynomial addition formula", d.to_string(), &lhs, &rhs))
}

/// Triples `a < b < c` with `c -> a`, `b` not reachable from `c` and `a` not
/// reachable from `b`.
pub fn w_family(d: &Digraph) -> Vec<(usize, usize, usize)> {
    let n = d.order();
    let reach: Vec<u64> = (0..n).map(|v| d.reachable_from(v)).collect();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if d.has_arc(c, a) && reach[c] >> b & 1 == 0 && reach[b] >> a & 1 == 0 {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// The family of triples is empty exactly when
/// `Omega(D, x) = sum over linear extensions pi of C(x + delta(pi), p)`,
/// with `delta` read from the labels of `d` as given.
pub fn dong_criterion(d: &Digraph) -> Result<IdentityReport> {
    let p = d.order();
    if p > ORDERING_CRITERION_LIMIT {
        return Err(Error::TooLarge { what: "digraph order for the ordering criterion", limit: ORDERING_CRITERION_LIMIT });
    }
    let family = w_family(d);
    let candidate = OrderPolyResult::from_terms(
        linear_extensions(d)?
            .into_iter()
            .map(|o| BinomialTerm { coeff: BigInt::one(), shift: o.delta as i64, choose: p }),
    );
    let actual = if check_enum_bound(p, p as u64).is_ok() {
        omega_interpolated(d, false)?
    } else {
        omega_weak_expansion(d)?.poly
    };
    let equal = candidate.poly == actual;
    Ok(IdentityReport::check("ordering formula criterion", d.to_string(), equal == family.is_empty(), || {
        (format!("{} obstructing triples", family.len()), format!("formula equal: {equal}"))
    }))
}

/// Every strict map is compatible with exactly one member of `OP(D)`, each
/// class has `C(k+p-1-rho, p)` maps; likewise every weak map is
/// anti-compatible with exactly one member, with `C(k+rho, p)` maps each.
pub fn compatibility_check(d: &Digraph, k: u64) -> Result<IdentityReport> {
    let nat = natural_form(d)?;
    let p = nat.order();
    check_enum_bound(p, k)?;
    let ops = op_list(&nat)?;
    let arcs: Vec<(usize, usize)> = nat.arcs().iter().copied().collect();
    let mut strict_classes = vec![0i64; ops.len()];
    let mut weak_classes = vec![0i64; ops.len()];
    let name = "ordering compatibility classes";
    let instance = format!("{nat} at k={k}");
    let total = k.pow(p as u32);
    let mut theta = vec![0u64; p];
    for code in 0..total {
        let mut c = code;
        for t in theta.iter_mut() {
            *t = c % k + 1;
            c /= k;
        }
        let fits = |anti: bool, o: &Ordering| {
            o.perm.windows(2).all(|w| {
                let (a, b) = (theta[w[0]], theta[w[1]]);
                let must_rise = if anti { w[0] > w[1] } else { w[0] < w[1] };
                a < b || (a == b && !must_rise)
            })
        };
        for (anti, classes) in [(false, &mut strict_classes), (true, &mut weak_classes)] {
            let admissible = arcs.iter().all(|&(a, b)| if anti { theta[a] <= theta[b] } else { theta[a] < theta[b] });
            if !admissible {
                continue;
            }
            let matches: Vec<usize> = (0..ops.len()).filter(|&i| fits(anti, &ops[i])).collect();
            if matches.len() != 1 {
                return Ok(IdentityReport::check(name, instance, false, || {
                    (format!("map {theta:?} matches {} orderings", matches.len()), "exactly one".into())
                }));
            }
            classes[matches[0]] += 1;
        }
    }
    let (k, p) = (k as i64, p as i64);
    for (i, o) in ops.iter().enumerate() {
        let rho = o.rho as i64;
        let strict_expected = binomial(k + p - 1 - rho, p);
        let weak_expected = binomial(k + rho, p);
        if BigInt::from(strict_classes[i]) != strict_expected || BigInt::from(weak_classes[i]) != weak_expected {
            return Ok(IdentityReport::check(name, instance, false, || {
                (format!("{o}: {} strict, {} weak", strict_classes[i], weak_classes[i]), format!("{strict_expected}, {weak_expected}"))
            }));
        }
    }
    Ok(IdentityReport::pass(name, instance))
}

/// `sum_i e_i C(k, i)` with `e_i` the number of surjective strict maps onto
/// `{1..i}`, counted by enumeration.
pub fn omega_strict_surjective(d: &Digraph) -> Result<OrderPolyResult> {
    let p = d.order();
    check_enum_bound(p, p as u64)?;
    let arcs: Vec<(usize, usize)> = d.arcs().iter().copied().collect();
    let mut terms = Vec::new();
    for i in 0..=p as u64 {
        let mut count = 0u64;
        let mut theta = vec![0u64; p];
        for code in 0..i.pow(p as u32) {
            let mut c = code;
            let mut hit = 0u64;
            for t in theta.iter_mut() {
                *t = c % i;
                hit |= 1 << *t;
                c /= i;
            }
            if hit.count_ones() as u64 == i && arcs.iter().all(|&(a, b)| theta[a] < theta[b]) {
                count += 1;
            }
        }
        terms.push(BinomialTerm { coeff: count.into(), shift: 0, choose: i as usize });
    }
    Ok(OrderPolyResult::from_terms(terms))
}

/// Adding an implied arc `u -> w` (given `u -> v -> w`) leaves the strict
/// order polynomial unchanged.
pub fn transitive_arc_check(d: &Digraph) -> Result<IdentityReport> {
    let base = omega_strict_expansion(d)?.poly;
    for &(u, v) in d.arcs() {
        for w in (0..d.order()).filter(|&w| d.has_arc(v, w) && !d.has_arc(u, w)) {
            let extended = omega_strict_expansion(&d.with_arc(u, w))?.poly;
            if extended != base {
                return Ok(IdentityReport::compare("implied arc invariance", format!("{d} plus {}>{}", u + 1, w + 1), &base, &extended));
            }
        }
    }
    Ok(IdentityReport::pass("implied arc invariance", d.to_string()))
}
