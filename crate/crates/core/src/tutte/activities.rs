use std::collections::BTreeMap;

use num_bigint::BigInt;
use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::ZBiPoly;

const TREE_EDGE_LIMIT: usize = 64;

/// `t_{i,j}`: spanning trees with internal activity `i` and external
/// activity `j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ActivityCount {
    pub counts: BTreeMap<(u32, u32), u64>,
}

impl ActivityCount {
    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.counts.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn to_poly(&self) -> ZBiPoly {
        ZBiPoly::from_terms(self.counts.iter().map(|(&k, &c)| (k, BigInt::from(c))))
    }
}

fn connects(g: &Multigraph, mask: u64) -> bool {
    g.components_mask(mask) == 1
}

/// Spanning trees as bitmasks over edge positions, by include/exclude
/// recursion that prunes disconnected branches.
pub fn spanning_trees(g: &Multigraph) -> Result<Vec<u64>> {
    let m = g.size();
    if m > TREE_EDGE_LIMIT {
        return Err(Error::TooLarge { what: "edge count for spanning-tree enumeration", limit: TREE_EDGE_LIMIT });
    }
    if !g.is_connected() {
        return Err(Error::Precondition("spanning trees need a connected graph".into()));
    }
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u64, all)];
    let target = g.order().saturating_sub(1) as u32;
    while let Some((i, chosen, available)) = stack.pop() {
        if chosen.count_ones() == target {
            out.push(chosen);
            continue;
        }
        if i == m {
            continue;
        }
        let e = &g.edges()[i];
        let bit = 1u64 << i;
        let without = available & !bit;
        if connects(g, without) {
            stack.push((i + 1, chosen, without));
        }
        if !e.is_loop() && g.components_mask(chosen | bit) < g.components_mask(chosen) {
            stack.push((i + 1, chosen | bit, available));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Activity counts for the ranking `rank[i]` of edge position `i` (smaller
/// ranks come first). Internally active tree edges are minimal in their
/// fundamental cut, externally active non-tree edges minimal on their
/// fundamental cycle.
pub fn tutte_activities(g: &Multigraph, rank: &[usize]) -> Result<ActivityCount> {
    let m = g.size();
    let mut sorted = rank.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if rank.len() != m || sorted.len() != m {
        return Err(Error::Precondition("edge ranking must be injective over all edges".into()));
    }
    let mut out = ActivityCount::default();
    for tree in spanning_trees(g)? {
        let tree_edges: Vec<usize> = (0..m).filter(|i| tree >> i & 1 == 1).collect();
        let mut internal = 0;
        let mut cycle_min: Vec<usize> = (0..m).map(|f| rank[f]).collect();
        for &t in &tree_edges {
            let mut uf = UnionFind::new(g.order());
            for &s in tree_edges.iter().filter(|&&s| s != t) {
                let e = &g.edges()[s];
                uf.union(e.u, e.v);
            }
            let crossing: Vec<usize> = (0..m)
                .filter(|&f| {
                    let e = &g.edges()[f];
                    !uf.equiv(e.u, e.v)
                })
                .collect();
            if crossing.iter().all(|&f| rank[f] >= rank[t]) {
                internal += 1;
            }
            for &f in crossing.iter().filter(|&&f| f != t) {
                cycle_min[f] = cycle_min[f].min(rank[t]);
            }
        }
        let external = (0..m).filter(|&f| tree >> f & 1 == 0 && cycle_min[f] == rank[f]).count() as u32;
        *out.counts.entry((internal, external)).or_default() += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::generators::{complete, cycle};
    use crate::tutte::tutte_dc;

    #[test]
    fn triangle_activities() {
        let a = tutte_activities(&cycle(3), &[2, 0, 1]).unwrap();
        assert_eq!(a.get(1, 0), 1);
        assert_eq!(a.get(2, 0), 1);
        assert_eq!(a.get(0, 1), 1);
        let k2 = tutte_activities(&complete(2), &[0]).unwrap();
        assert_eq!(k2.get(1, 0), 1);
    }

    #[test]
    fn ranking_does_not_matter_on_k4() {
        let g = complete(4);
        let t = tutte_dc(&g);
        for rank in [[0, 1, 2, 3, 4, 5], [5, 4, 3, 2, 1, 0], [2, 0, 5, 1, 3, 4]] {
            assert_eq!(tutte_activities(&g, &rank).unwrap().to_poly(), t);
        }
        assert_eq!(spanning_trees(&g).unwrap().len(), 16);
        assert!(tutte_activities(&g, &[0, 0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn loops_are_externally_active() {
        let g = Multigraph::from_pairs(2, &[(0, 1), (1, 1), (0, 1)]).unwrap();
        assert_eq!(tutte_activities(&g, &[0, 1, 2]).unwrap().to_poly(), tutte_dc(&g));
    }
}
