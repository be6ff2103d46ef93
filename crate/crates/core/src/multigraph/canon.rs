//! Canonical labeling of multigraphs by individualization and refinement.
//!
//! A multigraph is viewed as a symmetric matrix of edge multiplicities with
//! loop counts on the diagonal. The canonical code is the lexicographically
//! largest upper triangle over all labelings reachable from an
//! isomorphism-invariant refinement tree, which makes it a complete
//! invariant.

use super::graph::Multigraph;

pub type WeightMatrix = Vec<Vec<u32>>;

pub fn weight_matrix(g: &Multigraph) -> WeightMatrix {
    let n = g.order();
    let mut w = vec![vec![0u32; n]; n];
    for e in g.edges() {
        w[e.u][e.v] += 1;
        if e.u != e.v {
            w[e.v][e.u] += 1;
        }
    }
    w
}

/// Canonical code plus the labeling achieving it (`perm[old] = new`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: Vec<u32>,
    pub perm: Vec<usize>,
}

type Cells = Vec<Vec<usize>>;

fn signature(w: &WeightMatrix, cells: &Cells, v: usize) -> Vec<Vec<u32>> {
    let mut sig = Vec::with_capacity(cells.len() + 1);
    sig.push(vec![w[v][v]]);
    for cell in cells {
        let mut s: Vec<u32> = cell.iter().filter(|&&u| u != v).map(|&u| w[v][u]).collect();
        s.sort_unstable();
        sig.push(s);
    }
    sig
}

fn refine(w: &WeightMatrix, mut cells: Cells) -> Cells {
    loop {
        let mut next: Cells = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<Vec<u32>>, usize)> =
                cell.iter().map(|&v| (signature(w, &cells, v), v)).collect();
            keyed.sort();
            let mut group = vec![keyed[0].1];
            for pair in keyed.windows(2) {
                if pair[0].0 != pair[1].0 {
                    next.push(std::mem::take(&mut group));
                    split = true;
                }
                group.push(pair[1].1);
            }
            next.push(group);
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

/// All labelings compatible with the partition give the same code when
/// each cell is internally homogeneous and every pair of cells is joined
/// uniformly.
fn uniform(w: &WeightMatrix, cells: &Cells) -> bool {
    for (i, a) in cells.iter().enumerate() {
        let loops = w[a[0]][a[0]];
        if a.iter().any(|&v| w[v][v] != loops) {
            return false;
        }
        if a.len() > 1 {
            let inner = w[a[0]][a[1]];
            for (x, &u) in a.iter().enumerate() {
                if a[x + 1..].iter().any(|&v| w[u][v] != inner) {
                    return false;
                }
            }
        }
        for b in &cells[i + 1..] {
            let across = w[a[0]][b[0]];
            if a.iter().any(|&u| b.iter().any(|&v| w[u][v] != across)) {
                return false;
            }
        }
    }
    true
}

fn code_of(w: &WeightMatrix, order: &[usize]) -> Vec<u32> {
    let n = order.len();
    let mut code = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            code.push(w[order[i]][order[j]]);
        }
    }
    code
}

fn search(w: &WeightMatrix, cells: Cells, best: &mut Option<(Vec<u32>, Vec<usize>)>) {
    let cells = refine(w, cells);
    if cells.iter().all(|c| c.len() == 1) || uniform(w, &cells) {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = code_of(w, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    }
    let target = cells.iter().position(|c| c.len() > 1).expect("non-singleton cell");
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(w, next, best);
    }
}

pub fn canonical_form_matrix(w: &WeightMatrix) -> CanonicalForm {
    let n = w.len();
    if n == 0 {
        return CanonicalForm { n, code: Vec::new(), perm: Vec::new() };
    }
    let mut best = None;
    search(w, vec![(0..n).collect()], &mut best);
    let (code, order) = best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    CanonicalForm { n, code, perm }
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    canonical_form_matrix(&weight_matrix(g))
}

/// Relabeled copy in canonical vertex order with edge ids `0..m` assigned
/// in sorted endpoint order.
pub fn canonical_graph(g: &Multigraph) -> Multigraph {
    let cf = canonical_form(g);
    let relabeled = g.permuted(&cf.perm);
    Multigraph::from_pairs(g.order(), &relabeled.edge_multiset()).expect("in range")
}

pub fn are_isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g).code == canonical_form(h).code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{cycle, path};

    fn brute_force_code(g: &Multigraph) -> Vec<u32> {
        let w = weight_matrix(g);
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        let mut best = code_of(&w, &order);
        permute(&mut order, 0, &mut |o| {
            let c = code_of(&w, o);
            if c > best {
                best = c;
            }
        });
        best
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn relabelings_share_code() {
        let g = Multigraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 4), (4, 1), (4, 1)]).unwrap();
        let base = canonical_form(&g).code;
        let perms = [[4, 3, 2, 1, 0], [1, 0, 3, 2, 4], [2, 4, 0, 1, 3]];
        for p in perms {
            assert_eq!(canonical_form(&g.permuted(&p)).code, base);
        }
    }

    #[test]
    fn codes_classify_like_brute_force() {
        use std::collections::HashMap;
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let mut seen: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
        let mut reverse: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
        for mask in 0u32..1 << pairs.len() {
            let chosen: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p).collect();
            let g = Multigraph::from_pairs(5, &chosen).unwrap();
            let (c, b) = (canonical_form(&g).code, brute_force_code(&g));
            assert_eq!(seen.entry(c.clone()).or_insert_with(|| b.clone()), &b);
            assert_eq!(reverse.entry(b).or_insert(c.clone()), &c);
        }
        assert_eq!(seen.len(), 34);
        let loopy = Multigraph::from_pairs(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 3)]).unwrap();
        let twin = loopy.permuted(&[2, 0, 3, 1]);
        assert_eq!(canonical_form(&loopy).code, canonical_form(&twin).code);
        assert_eq!(brute_force_code(&loopy), brute_force_code(&twin));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!are_isomorphic(&cycle(6), &cycle(3).disjoint_union(&cycle(3))));
        assert!(are_isomorphic(&path(4), &path(4).permuted(&[3, 1, 0, 2])));
    }
}
