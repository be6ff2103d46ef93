//! Deletion-contraction over weighted simple graphs. Parallel classes are
//! merged on entry and after every contraction, and loops leave at once as
//! factors `1 + w`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::multigraph::Multigraph;
use crate::{QPoly, Rational, ZBiPoly};

/// Values of `Z` and of edge weights; `inverse` succeeds only where series
/// reduction may divide.
pub(crate) trait Ring: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn unit() -> Self;

    fn inverse(&self) -> Option<Self> {
        None
    }
}

impl Ring for Rational {
    fn unit() -> Self {
        Rational::one()
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Ring for QPoly {
    fn unit() -> Self {
        QPoly::one()
    }
}

impl Ring for ZBiPoly {
    fn unit() -> Self {
        ZBiPoly::one()
    }
}

/// Vertices keep their original labels; `edges` holds one merged weight per
/// unordered pair `(u, v)` with `u < v`.
#[derive(Clone)]
pub(crate) struct WeightedGraph<W> {
    verts: BTreeSet<usize>,
    edges: BTreeMap<(usize, usize), W>,
    loop_factor: W,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl<W: Ring> WeightedGraph<W> {
    pub fn new(g: &Multigraph, weight: impl Fn(usize) -> W) -> Self {
        let mut out = WeightedGraph { verts: (0..g.order()).collect(), edges: BTreeMap::new(), loop_factor: W::unit() };
        for (i, e) in g.edges().iter().enumerate() {
            out.insert(e.u, e.v, weight(i));
        }
        out
    }

    /// Adds an edge, merging it in parallel: `(1 + a)(1 + b) - 1`.
    fn insert(&mut self, u: usize, v: usize, w: W) {
        if u == v {
            self.loop_factor = self.loop_factor.clone() * (W::unit() + w);
            return;
        }
        let merged = match self.edges.remove(&key(u, v)) {
            Some(old) => (W::unit() + old) * (W::unit() + w) - W::unit(),
            None => w,
        };
        self.edges.insert(key(u, v), merged);
    }

    fn incident(&self, v: usize) -> Vec<(usize, W)> {
        self.edges
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(&(a, b), w)| (if a == v { b } else { a }, w.clone()))
            .collect()
    }

    fn remove_vertex(&mut self, v: usize) {
        self.verts.remove(&v);
        self.edges.retain(|&(a, b), _| a != v && b != v);
    }

    fn delete(&mut self, u: usize, v: usize) -> W {
        self.edges.remove(&key(u, v)).expect("edge present")
    }

    /// Identifies `v` into `u` after the `uv` edge has been removed.
    fn identify(&mut self, u: usize, v: usize) {
        for (x, w) in self.incident(v) {
            self.edges.remove(&key(v, x));
            self.insert(u, x, w);
        }
        self.verts.remove(&v);
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges.keys().filter(|(a, b)| *a == v || *b == v).map(|&(a, b)| if a == v { b } else { a }).collect()
    }

    fn components(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in &self.verts {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = BTreeSet::from([s]);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for x in self.neighbors(v) {
                    if seen.insert(x) {
                        comp.insert(x);
                        stack.push(x);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    fn restrict(&self, verts: &BTreeSet<usize>) -> Self {
        WeightedGraph {
            verts: verts.clone(),
            edges: self.edges.iter().filter(|((a, _), _)| verts.contains(a)).map(|(&k, w)| (k, w.clone())).collect(),
            loop_factor: W::unit(),
        }
    }

    /// Length of a shortest `u`-`v` path avoiding the edge `uv`.
    fn detour(&self, u: usize, v: usize) -> Option<usize> {
        let mut dist = BTreeMap::from([(u, 0usize)]);
        let mut queue = VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            for b in self.neighbors(a) {
                if (a, b) == (u, v) || dist.contains_key(&b) {
                    continue;
                }
                if b == v {
                    return Some(dist[&a] + 1);
                }
                dist.insert(b, dist[&a] + 1);
                queue.push_back(b);
            }
        }
        None
    }
}

pub(crate) struct Engine<W> {
    q: W,
    series: bool,
}

impl<W: Ring> Engine<W> {
    pub fn new(q: W, series: bool) -> Self {
        Engine { q, series }
    }

    pub fn solve(&self, mut g: WeightedGraph<W>) -> W {
        let factor = std::mem::replace(&mut g.loop_factor, W::unit());
        g.components().iter().fold(factor, |acc, comp| acc * self.connected(g.restrict(comp)))
    }

    fn connected(&self, mut g: WeightedGraph<W>) -> W {
        let mut factor = std::mem::replace(&mut g.loop_factor, W::unit());
        if self.series {
            factor = factor * self.suppress_series(&mut g);
        }
        if g.edges.is_empty() {
            return factor * self.q.clone();
        }
        // Bridges first: a pendant vertex is the cheap case.
        if let Some(&leaf) = g.verts.iter().find(|&&v| g.neighbors(v).len() == 1) {
            let (_, w) = g.incident(leaf).pop().expect("pendant edge");
            g.remove_vertex(leaf);
            return factor * (self.q.clone() + w) * self.connected(g);
        }
        let mut best: Option<((usize, usize), usize)> = None;
        let pairs: Vec<(usize, usize)> = g.edges.keys().copied().collect();
        for (u, v) in pairs {
            match g.detour(u, v) {
                None => {
                    let w = g.delete(u, v);
                    g.identify(u, v);
                    return factor * (self.q.clone() + w) * self.connected(g);
                }
                Some(len) if best.is_none_or(|(_, l)| len < l) => best = Some(((u, v), len)),
                Some(_) => {}
            }
        }
        let ((u, v), _) = best.expect("graph has an edge");
        let mut deleted = g;
        let w = deleted.delete(u, v);
        let mut contracted = deleted.clone();
        contracted.identify(u, v);
        factor * (self.connected(deleted) + w * self.solve(contracted))
    }

    /// Replaces paths `x - y - z` through degree-2 vertices by single edges
    /// `w1 w2 / (q + w1 + w2)` and returns the accumulated prefactor.
    fn suppress_series(&self, g: &mut WeightedGraph<W>) -> W {
        let mut factor = W::unit();
        let mut skipped = BTreeSet::new();
        loop {
            let candidate = g.verts.iter().copied().find(|&y| !skipped.contains(&y) && g.neighbors(y).len() == 2);
            let Some(y) = candidate else { return factor };
            let ends = g.incident(y);
            let ((x, w1), (z, w2)) = (ends[0].clone(), ends[1].clone());
            let denom = self.q.clone() + w1.clone() + w2.clone();
            let Some(inv) = denom.inverse() else {
                skipped.insert(y);
                continue;
            };
            g.remove_vertex(y);
            g.insert(x, z, w1 * w2 * inv);
            factor = factor * denom;
            skipped.clear();
        }
    }
}
