use super::{Graph, GraphError};

pub const MAX_ENUMERATION_VERTICES: usize = 6;

/// Every labeled graph on `n` vertices, in increasing order of the edge
/// bitmask. Bit `e` of the mask is the `e`-th vertex pair in graph6 order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

pub fn enumerate_all_labeled_graphs(n: usize) -> Result<LabeledGraphs, GraphError> {
    if !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(GraphError::EnumerationTooLarge(n));
    }
    let pairs: Vec<_> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs { n, pairs, next: 0, end })
}

impl LabeledGraphs {
    pub fn total(&self) -> u64 {
        self.end
    }

    /// Graph for a specific mask; lets parallel harnesses split the range.
    pub fn graph_for_mask(&self, mask: u64) -> Graph {
        let mut g = Graph::empty(self.n).expect("n is at most 6");
        for (e, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> e & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
        }
        g
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.graph_for_mask(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_all_labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_all_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_all_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_all_labeled_graphs(6).unwrap().len(), 32768);
        assert_eq!(
            enumerate_all_labeled_graphs(7).err(),
            Some(GraphError::EnumerationTooLarge(7))
        );
        assert_eq!(
            enumerate_all_labeled_graphs(0).err(),
            Some(GraphError::EnumerationTooLarge(0))
        );
    }

    #[test]
    fn each_graph_once_and_edge_counts_binomial() {
        let all: Vec<_> = enumerate_all_labeled_graphs(5).unwrap().collect();
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        let with_three = all.iter().filter(|g| g.m() == 3).count();
        assert_eq!(with_three, 120); // C(10, 3)
        assert_eq!(all[0].m(), 0);
        assert_eq!(all.last().unwrap().m(), 10);
    }
}
