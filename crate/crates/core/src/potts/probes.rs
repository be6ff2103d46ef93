//! Sign probes, block factorization and series-reduction invariance.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{potts_dc, potts_numeric, potts_subset, WeightMap};
use crate::error::Result;
use crate::multigraph::{EdgeKind, Multigraph};
use crate::report::IdentityReport;
use crate::scalar::{rational, sample_open};
use crate::{QPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SignRegime {
    /// `q < 0`, every weight in `[-1, 0)`, loops in `(-1, 0)`; claim
    /// `(-1)^|V| Z > 0`.
    NegativeQ,
    /// `q` in `(0, 1)`, loops above `-1`, bridges below `-q`, normal edges
    /// within `sqrt(1 - q)` of `-1`; claim `(-1)^(n+c) Z > 0`.
    SmallQ,
}

impl SignRegime {
    fn name(self) -> &'static str {
        match self {
            SignRegime::NegativeQ => "sign for negative q",
            SignRegime::SmallQ => "sign for q in (0, 1)",
        }
    }
}

fn in_regime(g: &Multigraph, q: &Rational, weights: &WeightMap, regime: SignRegime) -> Result<bool> {
    let minus_one = -Rational::one();
    for e in g.edges() {
        let w = weights.get(&e.id).ok_or_else(|| crate::Error::Precondition(format!("no weight for edge {}", e.id)))?;
        let ok = match (regime, g.classify_edge(e.id)?) {
            (SignRegime::NegativeQ, EdgeKind::Loop) => w > &minus_one && w.is_negative(),
            (SignRegime::NegativeQ, _) => w >= &minus_one && w.is_negative(),
            (SignRegime::SmallQ, EdgeKind::Loop) => w > &minus_one,
            (SignRegime::SmallQ, EdgeKind::Bridge) => w < &-q,
            (SignRegime::SmallQ, EdgeKind::Normal) => {
                let shifted = w + Rational::one();
                &shifted * &shifted < Rational::one() - q
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(match regime {
        SignRegime::NegativeQ => q.is_negative(),
        SignRegime::SmallQ => q.is_positive() && q < &Rational::one(),
    })
}

/// Checks the sign claim of `regime` at one point, or reports the point as
/// outside the regime.
pub fn sign_probe(g: &Multigraph, q: &Rational, weights: &WeightMap, regime: SignRegime) -> Result<IdentityReport> {
    let instance = format!("{g} at q={q}");
    if !in_regime(g, q, weights, regime)? {
        return Ok(IdentityReport::skipped(regime.name(), instance, "outside regime"));
    }
    let z = potts_numeric(g, q, weights, true)?;
    let exponent = match regime {
        SignRegime::NegativeQ => g.order(),
        SignRegime::SmallQ => g.order() + g.component_count(),
    };
    let signed = if exponent % 2 == 0 { z } else { -z };
    Ok(IdentityReport::check(regime.name(), instance, signed.is_positive(), || {
        (format!("signed Z = {signed}"), "> 0".into())
    }))
}

fn sample_point<R: Rng>(g: &Multigraph, regime: SignRegime, rng: &mut R) -> Result<(Rational, WeightMap)> {
    let (zero, one) = (Rational::zero(), Rational::one());
    let mut weights = WeightMap::new();
    match regime {
        SignRegime::NegativeQ => {
            let q = -sample_open(rng, &zero, &rational(4, 1), 97);
            for e in g.edges() {
                let w = if !e.is_loop() && rng.gen_ratio(1, 4) { -one.clone() } else { sample_open(rng, &-one.clone(), &zero, 89) };
                weights.insert(e.id, w);
            }
            Ok((q, weights))
        }
        SignRegime::SmallQ => {
            let r = sample_open(rng, &zero, &one, 31);
            let q = &one - &r * &r;
            for e in g.edges() {
                let offset = sample_open(rng, &zero, &rational(3, 1), 53);
                let w = match g.classify_edge(e.id)? {
                    EdgeKind::Loop => offset - &one,
                    EdgeKind::Bridge => -&q - offset,
                    EdgeKind::Normal => sample_open(rng, &(-&one - &r), &(&r - &one), 61),
                };
                weights.insert(e.id, w);
            }
            Ok((q, weights))
        }
    }
}

/// `samples` random points drawn inside `regime`, one report each.
pub fn sign_probes(g: &Multigraph, regime: SignRegime, samples: usize, seed: u64) -> Result<Vec<IdentityReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let (q, weights) = sample_point(g, regime, &mut rng)?;
            sign_probe(g, &q, &weights, regime)
        })
        .collect()
}

/// `q^k Z_G = q^c prod Z_{B_i}` over the `k` blocks of `g`.
pub fn block_factorization_check(g: &Multigraph, weights: &WeightMap) -> Result<IdentityReport> {
    let blocks = g.block_graphs();
    let q_pow = |k: usize| QPoly::x().pow(k as u32);
    let lhs = potts_dc(g, weights)? * q_pow(blocks.len());
    let mut rhs = q_pow(g.component_count());
    for b in &blocks {
        rhs = rhs * potts_subset(b, weights)?;
    }
    Ok(IdentityReport::compare("partition function over blocks", g.to_string(), &lhs, &rhs))
}

/// Evaluation with series reduction equals evaluation without it and the
/// subset expansion at `q`.
pub fn series_reduction_check(g: &Multigraph, q: &Rational, weights: &WeightMap) -> Result<IdentityReport> {
    let reduced = potts_numeric(g, q, weights, true)?;
    let plain = potts_numeric(g, q, weights, false)?;
    let subset = potts_subset(g, weights)?.eval(q);
    let ok = reduced == plain && plain == subset;
    Ok(IdentityReport::check("series reduction", format!("{g} at q={q}"), ok, || {
        (reduced.to_string(), format!("{plain} / {subset}"))
    }))
}
