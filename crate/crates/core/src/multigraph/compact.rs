//! Dense multiplicity-matrix graphs for recursive polynomial evaluation.
//!
//! Vertices are `0..n`; `w[u][v]` counts parallel edges and `w[v][v]`
//! counts loops. Operations consume and return whole parallel classes.

use super::canon::canonical_form_matrix;
use super::graph::Multigraph;

/// Orders up to this bound are memoized by canonical code; larger ones by
/// their raw matrix.
const CANON_LIMIT: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Compact {
    pub w: Vec<Vec<u32>>,
}

impl Compact {
    pub fn from_graph(g: &Multigraph) -> Self {
        Compact { w: super::canon::weight_matrix(g) }
    }

    pub fn order(&self) -> usize {
        self.w.len()
    }

    /// Removes every loop and returns how many there were.
    pub fn strip_loops(&mut self) -> u32 {
        (0..self.order()).map(|v| std::mem::take(&mut self.w[v][v])).sum()
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.w[v].iter().sum::<u32>() + self.w[v][v]
    }

    pub fn remove_vertex(&mut self, v: usize) {
        self.w.remove(v);
        for row in &mut self.w {
            row.remove(v);
        }
    }

    pub fn drop_isolated(&mut self) {
        let mut v = 0;
        while v < self.order() {
            if self.w[v].iter().all(|&c| c == 0) {
                self.remove_vertex(v);
            } else {
                v += 1;
            }
        }
    }

    pub fn delete_class(&mut self, u: usize, v: usize) {
        self.w[u][v] = 0;
        self.w[v][u] = 0;
    }

    /// Identifies `v` into `u`; edges between them become loops at `u`.
    pub fn identify(&mut self, u: usize, v: usize) {
        let n = self.order();
        self.w[u][u] += self.w[u][v] + self.w[v][v];
        for x in 0..n {
            if x != u && x != v {
                self.w[u][x] += self.w[v][x];
                self.w[x][u] = self.w[u][x];
            }
        }
        self.remove_vertex(v);
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.w[v].iter().enumerate().filter(move |&(u, &c)| u != v && c > 0).map(|(u, _)| u)
    }

    /// Vertex sets of the connected components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn induced(&self, verts: &[usize]) -> Self {
        Compact { w: verts.iter().map(|&a| verts.iter().map(|&b| self.w[a][b]).collect()).collect() }
    }

    /// Loopless blocks as vertex sets (each with at least two vertices),
    /// found on the underlying simple graph.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // Iterative DFS frames: (vertex, parent, neighbor cursor).
            let mut frames = vec![(root, usize::MAX, 0usize)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(top) = frames.last_mut() {
                let (v, parent) = (top.0, top.1);
                let next = (top.2..n).find(|&u| u != v && self.w[v][u] > 0);
                match next {
                    Some(u) => {
                        top.2 = u + 1;
                        if disc[u] == usize::MAX {
                            edge_stack.push((v, u));
                            disc[u] = time;
                            low[u] = time;
                            time += 1;
                            frames.push((u, v, 0));
                        } else if u != parent && disc[u] < disc[v] {
                            edge_stack.push((v, u));
                            low[v] = low[v].min(disc[u]);
                        }
                    }
                    None => {
                        frames.pop();
                        if let Some(&(p, _, _)) = frames.last() {
                            low[p] = low[p].min(low[v]);
                            if low[v] >= disc[p] {
                                let mut verts = Vec::new();
                                while let Some((a, b)) = edge_stack.pop() {
                                    verts.push(a);
                                    verts.push(b);
                                    if (a, b) == (p, v) {
                                        break;
                                    }
                                }
                                verts.sort_unstable();
                                verts.dedup();
                                out.push(verts);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Memo key invariant under relabeling for small orders.
    pub fn key(&self) -> Vec<u32> {
        let n = self.order();
        let mut key = vec![n as u32];
        if n <= CANON_LIMIT {
            key.extend(canonical_form_matrix(&self.w).code);
        } else {
            for u in 0..n {
                key.extend_from_slice(&self.w[u][u..]);
            }
        }
        key
    }

    /// A parallel class of largest multiplicity, preferring endpoints of
    /// high degree.
    pub fn heaviest_class(&self) -> Option<(usize, usize)> {
        let n = self.order();
        let mut best: Option<((u32, u32), (usize, usize))> = None;
        for u in 0..n {
            for v in u + 1..n {
                if self.w[u][v] > 0 {
                    let score = (self.w[u][v], self.degree(u) + self.degree(v));
                    if best.is_none_or(|(s, _)| score > s) {
                        best = Some((score, (u, v)));
                    }
                }
            }
        }
        best.map(|(_, e)| e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle, figure_eight};

    #[test]
    fn blocks_of_figure_eight_and_k4() {
        let c = Compact::from_graph(&figure_eight(3, 4));
        assert_eq!(c.blocks().len(), 2);
        assert_eq!(Compact::from_graph(&complete(4)).blocks(), vec![vec![0, 1, 2, 3]]);
        let path = Compact::from_graph(&Multigraph::from_pairs(3, &[(0, 1), (1, 2), (1, 2)]).unwrap());
        assert_eq!(path.blocks().len(), 2);
    }

    #[test]
    fn identify_turns_class_into_loops() {
        let mut c = Compact::from_graph(&cycle(3));
        c.identify(0, 1);
        assert_eq!(c.order(), 2);
        assert_eq!(c.w[0][0], 1);
        assert_eq!(c.w[0][1], 2);
    }

    #[test]
    fn key_ignores_labels() {
        let a = Compact::from_graph(&Multigraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2)]).unwrap());
        let b = Compact::from_graph(&Multigraph::from_pairs(3, &[(2, 1), (0, 2), (0, 2)]).unwrap());
        assert_eq!(a.key(), b.key());
    }
}
