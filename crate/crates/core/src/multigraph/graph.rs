use std::collections::BTreeMap;
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stable edge identifier; survives deletion and contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    Loop,
    Bridge,
    Normal,
}

/// Graph on vertices `0..n` whose edge multiset may contain loops and
/// parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    /// Edgeless graph `N_n`.
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    /// Edges get ids `0..pairs.len()` in input order.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for e in &edges {
            for w in [e.u, e.v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if !seen.insert(e.id) {
                return Err(Error::Precondition(format!("duplicate edge id {}", e.id.0)));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        let id = EdgeId(self.edges.iter().map(|e| e.id.0 + 1).max().unwrap_or(0));
        self.edges.push(Edge { id, u, v });
        Ok(id)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.iter().map(|e| e.id).collect()
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges.iter().find(|e| e.id == id).ok_or(Error::UnknownEdge(id.0))
    }

    fn edge_index(&self, id: EdgeId) -> Result<usize> {
        self.edges.iter().position(|e| e.id == id).ok_or(Error::UnknownEdge(id.0))
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn is_simple(&self) -> bool {
        let mut keys: Vec<_> = self.edges.iter().map(Edge::key).collect();
        keys.sort_unstable();
        !self.has_loops() && keys.windows(2).all(|w| w[0] != w[1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    /// Neighbor lists without multiplicity and without self.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| !e.is_loop() && (e.u == v || e.v == v))
            .map(|e| e.other(v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Edges grouped by unordered endpoint pair.
    pub fn parallel_classes(&self) -> BTreeMap<(usize, usize), Vec<EdgeId>> {
        let mut out: BTreeMap<(usize, usize), Vec<EdgeId>> = BTreeMap::new();
        for e in &self.edges {
            out.entry(e.key()).or_default().push(e.id);
        }
        out
    }

    /// Adjacency bitmasks of the underlying simple graph (loops dropped).
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs at most 64 vertices");
        let mut adj = vec![0u64; self.n];
        for e in self.edges.iter().filter(|e| !e.is_loop()) {
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
        }
        adj
    }

    /// Simple graph with the given adjacency masks.
    pub fn from_adjacency_masks(adj: &[u64]) -> Self {
        let n = adj.len();
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if adj[u] >> v & 1 == 1 {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        g
    }

    /// The underlying simple graph: loops removed, parallel classes collapsed
    /// to their smallest-id edge.
    pub fn simplify(&self) -> Self {
        let edges = self
            .parallel_classes()
            .into_iter()
            .filter(|((u, v), _)| u != v)
            .map(|((u, v), ids)| Edge { id: *ids.iter().min().expect("nonempty"), u, v })
            .collect();
        Multigraph { n: self.n, edges }
    }

    pub fn delete_edge(&self, id: EdgeId) -> Result<Self> {
        let idx = self.edge_index(id)?;
        let mut g = self.clone();
        g.edges.remove(idx);
        Ok(g)
    }

    pub fn delete_edges(&self, ids: &[EdgeId]) -> Result<Self> {
        ids.iter().try_fold(self.clone(), |g, id| g.delete_edge(*id))
    }

    /// Removes a vertex and its incident edges; later vertices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|e| e.u != v && e.v != v)
            .map(|e| Edge { id: e.id, u: shift(e.u), v: shift(e.v) })
            .collect();
        Ok(Multigraph { n: self.n - 1, edges })
    }

    /// Subgraph induced by `keep` (in increasing order), with the vertex map.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Self {
        let mut map = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| map[e.u] != usize::MAX && map[e.v] != usize::MAX)
            .map(|e| Edge { id: e.id, u: map[e.u], v: map[e.v] })
            .collect();
        Multigraph { n: keep.len(), edges }
    }

    /// Spanning subgraph keeping only the listed edges.
    pub fn spanning_subgraph(&self, keep: &[EdgeId]) -> Self {
        let edges = self.edges.iter().filter(|e| keep.contains(&e.id)).copied().collect();
        Multigraph { n: self.n, edges }
    }

    /// Identifies `a` and `b` into the smaller index, compacting the vertex
    /// range; returns the graph and the old-to-new vertex map.
    pub fn identify_vertices(&self, a: usize, b: usize) -> Result<(Self, Vec<usize>)> {
        for w in [a, b] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        if a == b {
            return Ok((self.clone(), (0..self.n).collect()));
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let map: Vec<usize> = (0..self.n)
            .map(|w| match w {
                w if w == gone => keep,
                w if w > gone => w - 1,
                w => w,
            })
            .collect();
        let edges = self.edges.iter().map(|e| Edge { id: e.id, u: map[e.u], v: map[e.v] }).collect();
        Ok((Multigraph { n: self.n - 1, edges }, map))
    }

    /// Contraction keeping parallels of `id` as loops; contracting a loop deletes it.
    pub fn contract_edge_multi(&self, id: EdgeId) -> Result<Self> {
        Ok(self.contract_edge_multi_with_map(id)?.0)
    }

    pub fn contract_edge_multi_with_map(&self, id: EdgeId) -> Result<(Self, Vec<usize>)> {
        let e = *self.edge(id)?;
        let without = self.delete_edge(id)?;
        without.identify_vertices(e.u, e.v)
    }

    /// Contraction followed by simplification; the edge must not be a loop.
    pub fn contract_edge_simple(&self, id: EdgeId) -> Result<Self> {
        if self.edge(id)?.is_loop() {
            return Err(Error::LoopEdge(id.0));
        }
        Ok(self.contract_edge_multi(id)?.simplify())
    }

    fn union_find_over(&self, ids: Option<&[EdgeId]>) -> UnionFind<usize> {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            if ids.is_none_or(|s| s.contains(&e.id)) {
                uf.union(e.u, e.v);
            }
        }
        uf
    }

    /// `c(A)`: components of the spanning subgraph `(V, A)`.
    pub fn components(&self, subset: &[EdgeId]) -> usize {
        let uf = self.union_find_over(Some(subset));
        (0..self.n).filter(|&v| uf.find(v) == v).count()
    }

    /// Components of the spanning subgraph picked by a bitmask over edge
    /// positions (the first 64 edges).
    pub fn components_mask(&self, mask: u64) -> usize {
        let mut uf = UnionFind::new(self.n);
        let mut comps = self.n;
        for (i, e) in self.edges.iter().enumerate() {
            if i < 64 && mask >> i & 1 == 1 && uf.union(e.u, e.v) {
                comps -= 1;
            }
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        let uf = self.union_find_over(None);
        (0..self.n).filter(|&v| uf.find(v) == v).count()
    }

    /// Component index of each vertex, numbered by first appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        let uf = self.union_find_over(None);
        let mut label = BTreeMap::new();
        (0..self.n)
            .map(|v| {
                let next = label.len();
                *label.entry(uf.find(v)).or_insert(next)
            })
            .collect()
    }

    /// Connected components as separate graphs (edge ids preserved).
    pub fn split_components(&self) -> Vec<Self> {
        let labels = self.component_labels();
        let count = labels.iter().max().map_or(0, |m| m + 1);
        (0..count)
            .map(|c| {
                let keep: Vec<usize> = (0..self.n).filter(|&v| labels[v] == c).collect();
                self.induced_subgraph(&keep)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    pub fn classify_edge(&self, id: EdgeId) -> Result<EdgeKind> {
        let e = self.edge(id)?;
        if e.is_loop() {
            return Ok(EdgeKind::Loop);
        }
        let others: Vec<EdgeId> = self.edges.iter().filter(|f| f.id != id).map(|f| f.id).collect();
        let uf = self.union_find_over(Some(&others));
        Ok(if uf.equiv(e.u, e.v) { EdgeKind::Normal } else { EdgeKind::Bridge })
    }

    pub fn bridges(&self) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|e| matches!(self.classify_edge(e.id), Ok(EdgeKind::Bridge)))
            .map(|e| e.id)
            .collect()
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Edge sets of the blocks. Every loop forms its own block, every bridge
    /// is a block, and isolated vertices contribute none.
    pub fn blocks(&self) -> Vec<Vec<EdgeId>> {
        let mut out: Vec<Vec<EdgeId>> = self.edges.iter().filter(|e| e.is_loop()).map(|e| vec![e.id]).collect();
        let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate().filter(|(_, e)| !e.is_loop()) {
            inc[e.u].push((e.v, i));
            inc[e.v].push((e.u, i));
        }
        let mut state = BlockSearch {
            inc: &inc,
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            time: 0,
            stack: Vec::new(),
            found: Vec::new(),
        };
        for root in 0..self.n {
            if state.disc[root] == usize::MAX {
                state.visit(root, usize::MAX);
            }
        }
        for block in state.found {
            let mut ids: Vec<EdgeId> = block.into_iter().map(|i| self.edges[i].id).collect();
            ids.sort_unstable();
            out.push(ids);
        }
        out.sort();
        out
    }

    pub fn block_count(&self) -> usize {
        self.blocks().len()
    }

    /// Blocks as standalone graphs on their own vertex sets.
    pub fn block_graphs(&self) -> Vec<Self> {
        self.blocks()
            .into_iter()
            .map(|ids| {
                let mut verts: Vec<usize> = ids
                    .iter()
                    .flat_map(|id| {
                        let e = self.edge(*id).expect("block edge");
                        [e.u, e.v]
                    })
                    .collect();
                verts.sort_unstable();
                verts.dedup();
                self.spanning_subgraph(&ids).induced_subgraph(&verts)
            })
            .collect()
    }

    /// Dimension of the bicycle space: cycle space intersected with its
    /// orthogonal complement over GF(2).
    pub fn bicycle_dimension(&self) -> usize {
        let cycles = self.fundamental_cycles();
        let k = cycles.len();
        let mut gram: Vec<Vec<bool>> = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                let dot = cycles[i].iter().zip(&cycles[j]).filter(|(a, b)| **a && **b).count();
                gram[i][j] = dot % 2 == 1;
            }
        }
        k - gf2_rank(gram)
    }

    /// Incidence vectors (over edge positions) of the fundamental cycles of a
    /// spanning forest.
    pub fn fundamental_cycles(&self) -> Vec<Vec<bool>> {
        let m = self.edges.len();
        let mut uf = UnionFind::new(self.n);
        let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        let mut non_tree = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if uf.union(e.u, e.v) {
                tree_adj[e.u].push((e.v, i));
                tree_adj[e.v].push((e.u, i));
            } else {
                non_tree.push(i);
            }
        }
        non_tree
            .into_iter()
            .map(|i| {
                let e = self.edges[i];
                let mut vec = vec![false; m];
                vec[i] = true;
                if let Some(path) = tree_path(&tree_adj, e.u, e.v) {
                    for j in path {
                        vec[j] = true;
                    }
                }
                vec
            })
            .collect()
    }

    /// Disjoint union; edge ids of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.edges.iter().map(|e| e.id.0 + 1).max().unwrap_or(0);
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            id: EdgeId(e.id.0 + offset),
            u: e.u + self.n,
            v: e.v + self.n,
        }));
        Multigraph { n: self.n + other.n, edges }
    }

    /// Renumbers edge ids to `0..m` in current order.
    pub fn renumbered(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| Edge { id: EdgeId(i as u32), u: e.u, v: e.v })
            .collect();
        Multigraph { n: self.n, edges }
    }

    /// Applies a vertex permutation `perm[old] = new`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let edges = self.edges.iter().map(|e| Edge { id: e.id, u: perm[e.u], v: perm[e.v] }).collect();
        Multigraph { n: self.n, edges }
    }

    /// Endpoint pairs, normalized `u <= v` and sorted; an isomorphism-sensitive
    /// but id-free description.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.edges.iter().map(Edge::key).collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} E=[", self.n)?;
        for (i, (u, v)) in self.edge_multiset().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

struct BlockSearch<'a> {
    inc: &'a [Vec<(usize, usize)>],
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, v: usize, parent_edge: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        for &(w, ei) in &self.inc[v] {
            if ei == parent_edge {
                continue;
            }
            if self.disc[w] == usize::MAX {
                self.stack.push(ei);
                self.visit(w, ei);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let mut block = Vec::new();
                    while let Some(top) = self.stack.pop() {
                        block.push(top);
                        if top == ei {
                            break;
                        }
                    }
                    self.found.push(block);
                }
            } else if self.disc[w] < self.disc[v] {
                self.stack.push(ei);
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

fn tree_path(adj: &[Vec<(usize, usize)>], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = Vec::new();
            let mut cur = to;
            while let Some((p, ei)) = prev[cur] {
                path.push(ei);
                cur = p;
            }
            return Some(path);
        }
        for &(w, ei) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, ei));
                queue.push_back(w);
            }
        }
    }
    None
}

/// Rank over GF(2) of a boolean matrix.
pub fn gf2_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let src = rows[rank].clone();
                for (x, s) in rows[r].iter_mut().zip(src) {
                    *x ^= s;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle, path};

    #[test]
    fn deletion_keeps_vertices() {
        let k2 = complete(2);
        let g = k2.delete_edge(EdgeId(0)).unwrap();
        assert_eq!((g.order(), g.size()), (2, 0));
        assert!(k2.delete_edge(EdgeId(7)).is_err());
        let p = cycle(3).delete_edge(EdgeId(0)).unwrap();
        assert_eq!(p.size(), 2);
        assert!(p.is_connected());
    }

    #[test]
    fn multi_contraction_makes_loops() {
        let dbl = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        let g = dbl.contract_edge_multi(EdgeId(0)).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.loop_count(), 1);
        assert_eq!(g.edges()[0].id, EdgeId(1));
        let c = cycle(3).contract_edge_multi(EdgeId(0)).unwrap();
        assert_eq!(c.edge_multiset(), vec![(0, 1), (0, 1)]);
        assert_eq!(complete(2).contract_edge_multi(EdgeId(0)).unwrap(), Multigraph::new(1));
    }

    #[test]
    fn simple_contraction() {
        assert_eq!(cycle(3).contract_edge_simple(EdgeId(0)).unwrap().edge_multiset(), vec![(0, 1)]);
        assert_eq!(cycle(4).contract_edge_simple(EdgeId(0)).unwrap().edge_multiset().len(), 3);
        let looped = Multigraph::from_pairs(1, &[(0, 0)]).unwrap();
        assert!(matches!(looped.contract_edge_simple(EdgeId(0)), Err(Error::LoopEdge(0))));
    }

    #[test]
    fn edge_classification() {
        let g = Multigraph::from_pairs(3, &[(0, 1), (1, 2), (2, 2), (1, 2)]).unwrap();
        assert_eq!(g.classify_edge(EdgeId(0)).unwrap(), EdgeKind::Bridge);
        assert_eq!(g.classify_edge(EdgeId(1)).unwrap(), EdgeKind::Normal);
        assert_eq!(g.classify_edge(EdgeId(2)).unwrap(), EdgeKind::Loop);
    }

    #[test]
    fn component_counts() {
        assert_eq!(Multigraph::new(4).components(&[]), 4);
        let c4 = cycle(4);
        assert_eq!(c4.components(&c4.edge_ids()), 1);
        assert_eq!(c4.components(&[EdgeId(0), EdgeId(2)]), 2);
    }

    #[test]
    fn block_decomposition() {
        let bowtie = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(bowtie.block_count(), 2);
        assert_eq!(cycle(5).block_count(), 1);
        assert_eq!(path(4).block_count(), 3);
        assert_eq!(Multigraph::new(3).block_count(), 0);
    }

    #[test]
    fn bicycle_dimensions() {
        assert_eq!(path(5).bicycle_dimension(), 0);
        assert_eq!(cycle(4).bicycle_dimension(), 1);
        assert_eq!(cycle(3).bicycle_dimension(), 0);
        // The three 4-cycles of K_4 are also 2|2 cuts.
        assert_eq!(complete(4).bicycle_dimension(), 2);
    }

    #[test]
    fn gf2_rank_small() {
        let rows = vec![vec![true, true, false], vec![false, true, true], vec![true, false, true]];
        assert_eq!(gf2_rank(rows), 2);
    }
}
