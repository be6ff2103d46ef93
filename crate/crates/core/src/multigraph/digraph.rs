use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Loopless digraph on `0..n` with at most one arc per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (t, h) in arcs {
            for w in [t, h] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if t == h {
                return Err(Error::Precondition(format!("digraph loop at vertex {t}")));
            }
            set.insert((t, h));
        }
        Ok(Digraph { n, arcs: set })
    }

    pub fn empty(n: usize) -> Self {
        Digraph { n, arcs: BTreeSet::new() }
    }

    /// Acyclic tournament `i -> j` for all `i < j`.
    pub fn transitive_tournament(n: usize) -> Self {
        Digraph { n, arcs: (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, t: usize, h: usize) -> bool {
        self.arcs.contains(&(t, h))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn with_arc(&self, t: usize, h: usize) -> Self {
        let mut d = self.clone();
        d.arcs.insert((t, h));
        d
    }

    /// Kahn order with smallest available vertex first; `None` if cyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, h) in &self.arcs {
            indeg[h] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut out = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            out.push(v);
            for &(_, h) in self.arcs.range((v, 0)..(v + 1, 0)) {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    ready.insert(h);
                }
            }
        }
        (out.len() == self.n).then_some(out)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// True when every arc goes from a smaller to a larger label.
    pub fn is_naturally_labeled(&self) -> bool {
        self.arcs.iter().all(|&(t, h)| t < h)
    }

    /// Relabels along a topological order; returns the new digraph and
    /// `perm[old] = new`.
    pub fn relabel_natural(&self) -> Result<(Self, Vec<usize>)> {
        let order = self.topological_order().ok_or(Error::NotAcyclic)?;
        let mut perm = vec![0; self.n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        Ok((self.permuted(&perm), perm))
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Digraph { n: self.n, arcs: self.arcs.iter().map(|&(t, h)| (perm[t], perm[h])).collect() }
    }

    /// Bitmask of vertices reachable from `v` along a nonempty directed path.
    pub fn reachable_from(&self, v: usize) -> u64 {
        assert!(self.n <= 64);
        let mut seen = 0u64;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &(_, h) in self.arcs.range((u, 0)..(u + 1, 0)) {
                if seen >> h & 1 == 0 {
                    seen |= 1 << h;
                    stack.push(h);
                }
            }
        }
        seen
    }

    /// Merges `v` into `u` (vertex `max(u,v)` is removed and later labels
    /// shift down). `None` if the result would contain a loop or a 2-cycle.
    pub fn identify(&self, u: usize, v: usize) -> Option<Self> {
        let (keep, gone) = (u.min(v), u.max(v));
        let map = |w: usize| match w {
            w if w == gone => keep,
            w if w > gone => w - 1,
            w => w,
        };
        let mut arcs = BTreeSet::new();
        for &(t, h) in &self.arcs {
            let (t, h) = (map(t), map(h));
            if t == h {
                return None;
            }
            arcs.insert((t, h));
        }
        if arcs.iter().any(|&(t, h)| arcs.contains(&(h, t))) {
            return None;
        }
        Some(Digraph { n: self.n - 1, arcs })
    }

    /// Induced subdigraph on the vertices of `mask`, relabeled in increasing order.
    pub fn induced(&self, mask: u64) -> Self {
        let mut map = vec![usize::MAX; self.n];
        let mut k = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if mask >> v & 1 == 1 {
                *slot = k;
                k += 1;
            }
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(t, h)| map[t] != usize::MAX && map[h] != usize::MAX)
            .map(|&(t, h)| (map[t], map[h]))
            .collect();
        Digraph { n: k, arcs }
    }

    /// Predecessor masks: bit `t` of `entry[h]` is set when `t -> h`.
    pub fn in_masks(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for &(t, h) in &self.arcs {
            out[h] |= 1 << t;
        }
        out
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} A=[", self.n)?;
        for (i, (t, h)) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}>{}", t + 1, h + 1)?;
        }
        write!(f, "]")
    }
}
