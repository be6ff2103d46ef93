//! Tutte polynomials of multigraphs: deletion-contraction with reductions
//! and memoization, spanning-tree activities, evaluations at special points,
//! and the identities around them.

mod activities;
mod checks;

pub use activities::{spanning_trees, tutte_activities, ActivityCount};
pub use checks::{
    chromatic_specialization_check, coefficient_property_check, convolution_check, flow_specialization_check,
    merino_identity_check, merino_welsh_probe, rational_identity_check, read_rosenstiehl_check, special_values,
    stanley_negative_check, t_equivalent, SpecialValues,
};

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::matroid::Matroid;
use crate::multigraph::compact::Compact;
use crate::multigraph::Multigraph;
use crate::ZBiPoly;

/// `x + y + y^2 + ... + y^(k-1)`, the Tutte polynomial of `k` parallel edges.
fn bundle_tutte(k: u32) -> ZBiPoly {
    let mut out = ZBiPoly::x();
    for j in 1..k {
        out.add_term(0, j, BigInt::one());
    }
    out
}

fn y_sum(k: u32) -> ZBiPoly {
    ZBiPoly::from_terms((0..k).map(|j| ((0, j), BigInt::one())))
}

#[derive(Default)]
struct Engine {
    memo: HashMap<Vec<u32>, ZBiPoly>,
}

impl Engine {
    fn solve(&mut self, mut g: Compact) -> ZBiPoly {
        let loops = g.strip_loops();
        g.drop_isolated();
        ZBiPoly::y().pow(loops) * self.parts(g)
    }

    fn parts(&mut self, g: Compact) -> ZBiPoly {
        let mut out = ZBiPoly::one();
        for comp in g.components() {
            let part = g.induced(&comp);
            for block in part.blocks() {
                out = out * self.block(part.induced(&block));
            }
        }
        out
    }

    /// `g` is loopless and 2-connected, or a single parallel class.
    fn block(&mut self, g: Compact) -> ZBiPoly {
        if g.order() == 2 {
            return bundle_tutte(g.w[0][1]);
        }
        let key = g.key();
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let out = if let Some(w) = (0..g.order()).find(|&v| g.degree(v) == 2) {
            // Deleting one edge at w leaves a pendant bridge.
            let u = (0..g.order()).find(|&u| u != w && g.w[w][u] > 0).expect("neighbor");
            let mut without = g.clone();
            without.remove_vertex(w);
            let mut series = g.clone();
            series.w[w][u] -= 1;
            series.w[u][w] -= 1;
            series.identify(u, w);
            &ZBiPoly::x() * &self.parts(without) + self.block(series)
        } else {
            let (u, v) = g.heaviest_class().expect("block has an edge");
            let k = g.w[u][v];
            let mut deleted = g.clone();
            deleted.delete_class(u, v);
            let mut contracted = deleted.clone();
            contracted.identify(u, v);
            self.parts(deleted) + y_sum(k) * self.solve(contracted)
        };
        self.memo.insert(key, out.clone());
        out
    }
}

/// `T_G(x, y)` by deletion-contraction over parallel classes, with loop,
/// component, block and series reductions and a memo keyed by canonical
/// form.
pub fn tutte_dc(g: &Multigraph) -> ZBiPoly {
    Engine::default().solve(Compact::from_graph(g))
}

/// `T_G(x, y)` by the rank-generating subset expansion of the cycle matroid.
pub fn tutte_subset(g: &Multigraph) -> Result<ZBiPoly> {
    Matroid::cycle_matroid(g)?.tutte_subset()
}
