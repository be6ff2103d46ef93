//! Matroids given by rank oracles, with flats, Möbius values,
//! characteristic and Tutte polynomials, and minors.
//!
//! Element subsets are bitmasks over `0..n` (so `n <= 64`). Oracles compose
//! lazily; ground sets of at most [`TABLE_LIMIT`] elements materialize a
//! full rank table on first use.

mod checks;

pub use checks::{
    chromatic_from_cycle_matroid, chromatic_product_identity_check, kung_identity_check, lemma_flat_sum_check,
    tutte_convolution_checks,
};

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactpoly::binomial;
use crate::multigraph::Multigraph;
use crate::{ZBiPoly, ZPoly};

pub const TABLE_LIMIT: usize = 20;
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug)]
enum Kind {
    Uniform { k: usize },
    Graphic { graph: Multigraph },
    Cographic { graph: Multigraph },
    Dual(Matroid),
    /// Local element `i` is `elems[i]` of the base.
    Restriction { base: Matroid, elems: Vec<usize> },
    Contraction { base: Matroid, elems: Vec<usize>, contracted: u64 },
    DirectSum(Matroid, Matroid),
    Explicit(Vec<u8>),
}

#[derive(Debug, Clone)]
pub struct Matroid {
    n: usize,
    kind: Arc<Kind>,
    table: Arc<OnceLock<Vec<u8>>>,
}

/// A flat with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flat {
    pub rank: usize,
    pub mask: u64,
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn spread(local: u64, elems: &[usize]) -> u64 {
    elems
        .iter()
        .enumerate()
        .filter(|(i, _)| local >> i & 1 == 1)
        .fold(0, |acc, (_, &e)| acc | 1 << e)
}

impl Matroid {
    fn wrap(n: usize, kind: Kind) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge { what: "matroid ground set", limit: MAX_ELEMENTS });
        }
        Ok(Matroid { n, kind: Arc::new(kind), table: Arc::new(OnceLock::new()) })
    }

    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        if k > n {
            return Err(Error::Precondition(format!("uniform matroid needs k <= n, got k={k}, n={n}")));
        }
        Self::wrap(n, Kind::Uniform { k })
    }

    /// Elements are edge positions of `g`.
    pub fn cycle_matroid(g: &Multigraph) -> Result<Self> {
        Self::wrap(g.size(), Kind::Graphic { graph: g.clone() })
    }

    pub fn cocycle_matroid(g: &Multigraph) -> Result<Self> {
        Self::wrap(g.size(), Kind::Cographic { graph: g.clone() })
    }

    pub fn dual(&self) -> Self {
        Self::wrap(self.n, Kind::Dual(self.clone())).expect("same size")
    }

    /// Explicit rank table indexed by subset mask.
    pub fn explicit(n: usize, ranks: Vec<u8>) -> Result<Self> {
        if n > TABLE_LIMIT || ranks.len() != 1 << n {
            return Err(Error::Precondition(format!("explicit rank table must have 2^{n} entries")));
        }
        Self::wrap(n, Kind::Explicit(ranks))
    }

    /// `M|A`, elements renumbered in increasing order of `A`.
    pub fn restriction(&self, a: u64) -> Result<Self> {
        self.check_subset(a)?;
        let elems = (0..self.n).filter(|e| a >> e & 1 == 1).collect::<Vec<_>>();
        Self::wrap(elems.len(), Kind::Restriction { base: self.clone(), elems })
    }

    /// `M/A` on the complement of `A`, renumbered in increasing order.
    pub fn contraction(&self, a: u64) -> Result<Self> {
        self.check_subset(a)?;
        let elems = (0..self.n).filter(|e| a >> e & 1 == 0).collect::<Vec<_>>();
        Self::wrap(elems.len(), Kind::Contraction { base: self.clone(), elems, contracted: a })
    }

    pub fn delete_element(&self, e: usize) -> Result<Self> {
        self.restriction(self.ground() & !(1 << e))
    }

    pub fn contract_element(&self, e: usize) -> Result<Self> {
        self.contraction(1 << e)
    }

    /// Elements of `other` follow those of `self`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Self::wrap(self.n + other.n, Kind::DirectSum(self.clone(), other.clone()))
    }

    fn check_subset(&self, a: u64) -> Result<()> {
        if a & !self.ground() != 0 {
            return Err(Error::Precondition("subset is not contained in the ground set".into()));
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> u64 {
        full(self.n)
    }

    fn rank_raw(&self, a: u64) -> usize {
        match &*self.kind {
            Kind::Uniform { k } => (a.count_ones() as usize).min(*k),
            Kind::Graphic { graph } => graph.order() - graph.components_mask(a),
            Kind::Cographic { graph } => {
                let r = |m: u64| graph.order() - graph.components_mask(m);
                let e = full(self.n);
                a.count_ones() as usize + r(e & !a) - r(e)
            }
            Kind::Dual(m) => a.count_ones() as usize + m.rank(m.ground() & !a) - m.full_rank(),
            Kind::Restriction { base, elems } => base.rank(spread(a, elems)),
            Kind::Contraction { base, elems, contracted } => {
                base.rank(spread(a, elems) | contracted) - base.rank(*contracted)
            }
            Kind::DirectSum(m1, m2) => m1.rank(a & m1.ground()) + m2.rank(a >> m1.n),
            Kind::Explicit(t) => t[a as usize] as usize,
        }
    }

    fn table(&self) -> Option<&Vec<u8>> {
        if self.n > TABLE_LIMIT {
            return None;
        }
        if let Kind::Explicit(t) = &*self.kind {
            return Some(t);
        }
        Some(self.table.get_or_init(|| (0..1u64 << self.n).map(|a| self.rank_raw(a) as u8).collect()))
    }

    pub fn rank(&self, a: u64) -> usize {
        match self.table() {
            Some(t) => t[a as usize] as usize,
            None => self.rank_raw(a),
        }
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank(1 << e) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank(self.ground() & !(1 << e)) < self.full_rank()
    }

    pub fn has_loop(&self) -> bool {
        (0..self.n).any(|e| self.is_loop(e))
    }

    pub fn has_coloop(&self) -> bool {
        (0..self.n).any(|e| self.is_coloop(e))
    }

    pub fn closure(&self, a: u64) -> u64 {
        let r = self.rank(a);
        (0..self.n).fold(a, |acc, e| if self.rank(a | 1 << e) == r { acc | 1 << e } else { acc })
    }

    pub fn is_flat(&self, a: u64) -> bool {
        self.closure(a) == a
    }

    fn require_small(&self, what: &'static str) -> Result<()> {
        if self.n > TABLE_LIMIT {
            return Err(Error::TooLarge { what, limit: TABLE_LIMIT });
        }
        Ok(())
    }

    /// All flats, ordered by rank then mask.
    pub fn flats(&self) -> Result<Vec<Flat>> {
        self.require_small("ground set for flat enumeration")?;
        let mut out: Vec<Flat> = (0..=self.ground())
            .filter(|&a| self.is_flat(a))
            .map(|mask| Flat { rank: self.rank(mask), mask })
            .collect();
        out.sort();
        Ok(out)
    }

    /// `mu(bottom, F)` for every flat, where the bottom flat is the closure of
    /// the empty set.
    pub fn mobius(&self) -> Result<BTreeMap<u64, BigInt>> {
        let flats = self.flats()?;
        let mut mu: BTreeMap<u64, BigInt> = BTreeMap::new();
        for f in &flats {
            let below: BigInt = mu
                .iter()
                .filter(|(&g, _)| g != f.mask && g & !f.mask == 0)
                .map(|(_, v)| v.clone())
                .sum();
            let value = if mu.is_empty() { BigInt::one() } else { -below };
            mu.insert(f.mask, value);
        }
        Ok(mu)
    }

    /// Subset expansion `sum_A (-1)^|A| x^(r(E)-r(A))`.
    pub fn char_poly_subset(&self) -> Result<ZPoly> {
        self.require_small("ground set for subset expansion")?;
        let r = self.full_rank();
        let mut coeffs = vec![BigInt::zero(); r + 1];
        for a in 0..=self.ground() {
            let term = &mut coeffs[r - self.rank(a)];
            if a.count_ones() % 2 == 0 {
                *term += 1;
            } else {
                *term -= 1;
            }
        }
        Ok(ZPoly::new(coeffs))
    }

    /// Flat expansion `sum_F mu(0,F) x^(r(E)-r(F))`; zero when a loop is present.
    pub fn char_poly_flats(&self) -> Result<ZPoly> {
        if self.has_loop() {
            return Ok(ZPoly::zero());
        }
        let r = self.full_rank();
        let mu = self.mobius()?;
        let mut coeffs = vec![BigInt::zero(); r + 1];
        for (f, m) in mu {
            coeffs[r - self.rank(f)] += m;
        }
        Ok(ZPoly::new(coeffs))
    }

    /// Deletion-contraction: loop gives 0, coloop gives a factor `x - 1`,
    /// otherwise `C(M\e) - C(M/e)`.
    pub fn char_poly_dc(&self) -> Result<ZPoly> {
        self.require_small("ground set for deletion-contraction")?;
        Ok(self.minor_char(self.ground(), 0))
    }

    /// Characteristic polynomial of the minor on `rest` after contracting `con`.
    fn minor_char(&self, rest: u64, con: u64) -> ZPoly {
        if rest == 0 {
            return ZPoly::one();
        }
        let e = rest.trailing_zeros() as usize;
        let bit = 1u64 << e;
        let rc = self.rank(con);
        let r_minor = |a: u64| self.rank(a | con) - rc;
        if r_minor(bit) == 0 {
            return ZPoly::zero();
        }
        let rank_all = r_minor(rest);
        if r_minor(rest & !bit) < rank_all {
            return ZPoly::from_ints(&[-1, 1]) * self.minor_char(rest & !bit, con | bit);
        }
        self.minor_char(rest & !bit, con) - self.minor_char(rest & !bit, con | bit)
    }

    /// Subset expansion `sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`.
    pub fn tutte_subset(&self) -> Result<ZBiPoly> {
        self.require_small("ground set for subset expansion")?;
        let r = self.full_rank();
        let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for a in 0..=self.ground() {
            let ra = self.rank(a);
            *counts.entry((r - ra, a.count_ones() as usize - ra)).or_default() += 1;
        }
        Ok(expand_shifted(&counts))
    }

    /// Deletion-contraction over minors of the materialized rank table.
    pub fn tutte_dc(&self) -> Result<ZBiPoly> {
        self.require_small("ground set for deletion-contraction")?;
        let mut memo = BTreeMap::new();
        Ok(self.minor_tutte(self.ground(), 0, &mut memo))
    }

    fn minor_tutte(&self, rest: u64, con: u64, memo: &mut BTreeMap<(u64, u64), ZBiPoly>) -> ZBiPoly {
        if rest == 0 {
            return ZBiPoly::one();
        }
        if let Some(t) = memo.get(&(rest, con)) {
            return t.clone();
        }
        let e = rest.trailing_zeros() as usize;
        let bit = 1u64 << e;
        let rc = self.rank(con);
        let r_minor = |a: u64| self.rank(a | con) - rc;
        let out = if r_minor(bit) == 0 {
            &ZBiPoly::y() * &self.minor_tutte(rest & !bit, con, memo)
        } else if r_minor(rest & !bit) < r_minor(rest) {
            &ZBiPoly::x() * &self.minor_tutte(rest & !bit, con | bit, memo)
        } else {
            self.minor_tutte(rest & !bit, con, memo) + self.minor_tutte(rest & !bit, con | bit, memo)
        };
        memo.insert((rest, con), out.clone());
        out
    }

    /// Checks rank axioms on every subset: `r(0) = 0`, unit increase, and
    /// local submodularity. Returns the first violation found.
    pub fn check_rank_axioms(&self) -> std::result::Result<(), String> {
        if self.rank(0) != 0 {
            return Err("r(empty) != 0".into());
        }
        for a in 0..=self.ground() {
            let ra = self.rank(a);
            if ra > a.count_ones() as usize {
                return Err(format!("r({a:#b}) exceeds |A|"));
            }
            for e in (0..self.n).filter(|e| a >> e & 1 == 0) {
                let re = self.rank(a | 1 << e);
                if re < ra || re > ra + 1 {
                    return Err(format!("adding {e} to {a:#b} changes rank by more than one"));
                }
                for f in (e + 1..self.n).filter(|f| a >> f & 1 == 0) {
                    let rf = self.rank(a | 1 << f);
                    if self.rank(a | 1 << e | 1 << f) + ra > re + rf {
                        return Err(format!("submodularity fails at {a:#b} with {e}, {f}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Serializes as `{n_elements, kind, params}`; composite oracles are
    /// emitted as explicit rank tables.
    pub fn to_spec(&self) -> Result<Value> {
        let edges = |g: &Multigraph| g.edges().iter().map(|e| json!([e.u, e.v])).collect::<Vec<_>>();
        let (kind, params) = match &*self.kind {
            Kind::Uniform { k } => ("uniform", json!({ "k": k })),
            Kind::Graphic { graph } => ("graphic", json!({ "vertices": graph.order(), "edges": edges(graph) })),
            Kind::Cographic { graph } => ("cographic", json!({ "vertices": graph.order(), "edges": edges(graph) })),
            Kind::Dual(m) => ("dual", json!({ "inner": m.to_spec()? })),
            _ => {
                self.require_small("ground set for explicit serialization")?;
                ("explicit", json!({ "ranks": self.table().expect("small") }))
            }
        };
        Ok(json!({ "n_elements": self.n, "kind": kind, "params": params }))
    }

    pub fn from_spec(v: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse { line: 0, msg: msg.to_string() };
        let n = v["n_elements"].as_u64().ok_or_else(|| bad("missing n_elements"))? as usize;
        let params = &v["params"];
        let graph = || -> Result<Multigraph> {
            let verts = params["vertices"].as_u64().ok_or_else(|| bad("missing vertices"))? as usize;
            let pairs = params["edges"]
                .as_array()
                .ok_or_else(|| bad("missing edges"))?
                .iter()
                .map(|p| Some((p[0].as_u64()? as usize, p[1].as_u64()? as usize)))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| bad("malformed edge"))?;
            Multigraph::from_pairs(verts, &pairs)
        };
        let m = match v["kind"].as_str().ok_or_else(|| bad("missing kind"))? {
            "uniform" => Self::uniform(params["k"].as_u64().ok_or_else(|| bad("missing k"))? as usize, n)?,
            "graphic" => Self::cycle_matroid(&graph()?)?,
            "cographic" => Self::cocycle_matroid(&graph()?)?,
            "dual" => Self::from_spec(&params["inner"])?.dual(),
            "explicit" => {
                let ranks = params["ranks"]
                    .as_array()
                    .ok_or_else(|| bad("missing ranks"))?
                    .iter()
                    .map(|r| r.as_u64().and_then(|r| u8::try_from(r).ok()))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| bad("malformed rank"))?;
                Self::explicit(n, ranks)?
            }
            other => return Err(bad(&format!("unknown matroid kind {other:?}"))),
        };
        if m.size() != n {
            return Err(bad("n_elements disagrees with params"));
        }
        Ok(m)
    }
}

/// `sum counts[(i,j)] (x-1)^i (y-1)^j` expanded in the monomial basis.
pub(crate) fn expand_shifted(counts: &BTreeMap<(usize, usize), u64>) -> ZBiPoly {
    let mut out = ZBiPoly::zero();
    for (&(i, j), &c) in counts {
        for a in 0..=i {
            let ca = binomial(i as i64, a as i64) * if (i - a) % 2 == 0 { 1 } else { -1 };
            for b in 0..=j {
                let cb = binomial(j as i64, b as i64) * if (j - b) % 2 == 0 { 1 } else { -1 };
                out.add_term(a as u32, b as u32, BigInt::from(c) * &ca * cb);
            }
        }
    }
    out
}

/// Closed form `sum_{i<k} (-1)^i C(n,i) x^(k-i)` plus the constant term
/// `sum_{i>=k} (-1)^i C(n,i)` that makes the value at 1 vanish.
pub fn char_poly_uniform(k: usize, n: usize) -> Result<ZPoly> {
    if k > n {
        return Err(Error::Precondition(format!("uniform matroid needs k <= n, got k={k}, n={n}")));
    }
    let sign = |i: usize| if i.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for i in 0..=n {
        let term = sign(i) * binomial(n as i64, i as i64);
        coeffs[k.saturating_sub(i)] += term;
    }
    Ok(ZPoly::new(coeffs))
}
