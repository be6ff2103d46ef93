use serde::Serialize;

use super::graph::Multigraph;

/// Set partition of `0..n` with blocks ordered by smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SetPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn from_labels(labels: &[usize]) -> Self {
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (v, &l) in labels.iter().enumerate() {
            blocks[l].push(v);
        }
        blocks.retain(|b| !b.is_empty());
        SetPartition { blocks }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of each element.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }
}

/// Iterates set partitions of `0..n` as restricted growth strings.
pub struct PartitionStream {
    rgs: Vec<usize>,
    maxes: Vec<usize>,
    done: bool,
}

pub fn partitions_stream(n: usize) -> PartitionStream {
    PartitionStream { rgs: vec![0; n], maxes: vec![0; n], done: false }
}

impl Iterator for PartitionStream {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition::from_labels(&self.rgs);
        let n = self.rgs.len();
        // maxes[i] = max(rgs[0..i]); position i may take values 0..=maxes[i]+1.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.maxes[i] {
                self.rgs[i] += 1;
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[j - 1].max(self.rgs[j - 1]);
                }
                break;
            }
        }
        Some(out)
    }
}

/// Spanning subgraph keeping exactly the edges inside a block of `p`.
pub fn induced_partition_graph(g: &Multigraph, p: &SetPartition) -> Multigraph {
    let labels = p.labels(g.order());
    let keep: Vec<_> = g.edges().iter().filter(|e| labels[e.u] == labels[e.v]).map(|e| e.id).collect();
    g.spanning_subgraph(&keep)
}
