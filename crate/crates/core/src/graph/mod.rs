//! Undirected simple graphs stored as packed adjacency bit rows.
//!
//! Row `v` holds one bit per vertex; neighborhood intersections are a
//! word-wise AND followed by a popcount, which keeps triangle counting and
//! clique search cheap on the small dense graphs this crate is built for.

mod edge_list;
mod enumerate;
mod generate;
mod graph6;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use enumerate::{enumerate_all_labeled_graphs, LabeledGraphs, MAX_ENUMERATION_VERTICES};
pub use generate::{generate, GeneratorSpec};
pub use graph6::{encode_graph6, parse_graph6};

use thiserror::Error;

/// Largest vertex count accepted anywhere in the crate.
pub const MAX_VERTICES: usize = 4096;

/// Longest cycle `has_cycle_of_length` will search for.
pub const MAX_CYCLE_LENGTH: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6: invalid byte {byte:#04x} at offset {offset}")]
    InvalidCharacter { offset: usize, byte: u8 },
    #[error("graph6: payload truncated (expected {expected} bytes, found {found})")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: {0} unexpected trailing bytes")]
    TrailingData(usize),
    #[error("graph6: padding bits in the final byte are not zero")]
    NonzeroPadding,
    #[error("graph6: empty input")]
    Empty,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("invalid generator parameters: {0}")]
    InvalidParameter(String),
    #[error("cycle length {0} outside supported range 3..={MAX_CYCLE_LENGTH}")]
    CycleLengthOutOfRange(usize),
    #[error("exhaustive enumeration supports 1..={MAX_ENUMERATION_VERTICES} vertices, got {0}")]
    EnumerationTooLarge(usize),
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Iterates the set bit positions of a packed row.
pub(crate) fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("graph6", &encode_graph6(self).unwrap_or_default())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
            m: 0,
        })
    }

    /// Builds a graph from vertex pairs; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Adjacency row of `v` as packed 64-bit words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Number of common neighbors of `u` and `v`.
    #[inline]
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        and_count(self.row(u), self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// Dense row-major adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for (u, v) in self.edges() {
            a[u * self.n + v] = 1.0;
            a[v * self.n + u] = 1.0;
        }
        a
    }

    /// Copy of `self` with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.try_add_edge(u, v)?;
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            return;
        }
        let w = self.words;
        self.bits[u * w + v / 64] |= 1 << (v % 64);
        self.bits[v * w + u / 64] |= 1 << (u % 64);
        self.m += 1;
    }

    /// Checks symmetry, empty diagonal and the cached edge count.
    pub fn is_consistent(&self) -> bool {
        let mut upper = 0;
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            for v in self.neighbors(u) {
                if v >= self.n || !self.has_edge(v, u) {
                    return false;
                }
                if v > u {
                    upper += 1;
                }
            }
        }
        upper == self.m
    }
}

/// Largest number of triangles sharing a single edge, i.e. the maximum
/// of `|N(u) ∩ N(v)|` over edges. A graph is `B_k`-free exactly when this
/// is below `k`.
pub fn max_triangles_per_edge(g: &Graph) -> usize {
    g.edges().map(|(u, v)| g.common_neighbors(u, v)).max().unwrap_or(0)
}

/// Whether `g` contains a cycle of exactly `k` vertices as a subgraph.
///
/// Enumerates simple paths rooted at the smallest vertex of a candidate
/// cycle, only extending through larger vertices, and closes the path when
/// the last vertex is adjacent to the root.
pub fn has_cycle_of_length(g: &Graph, k: usize) -> Result<bool, GraphError> {
    if !(3..=MAX_CYCLE_LENGTH).contains(&k) {
        return Err(GraphError::CycleLengthOutOfRange(k));
    }
    if g.n() < k {
        return Ok(false);
    }
    let mut on_path = vec![0u64; g.words];
    for root in 0..g.n() {
        if g.degree(root) < 2 {
            continue;
        }
        on_path.iter_mut().for_each(|w| *w = 0);
        on_path[root / 64] |= 1 << (root % 64);
        if extend_path(g, root, root, 1, k, &mut on_path) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn extend_path(g: &Graph, root: usize, last: usize, len: usize, k: usize, on_path: &mut [u64]) -> bool {
    if len == k {
        return g.has_edge(last, root);
    }
    let next: Vec<usize> = g
        .neighbors(last)
        .filter(|&v| v > root && on_path[v / 64] >> (v % 64) & 1 == 0)
        .collect();
    for v in next {
        // the closing vertex must see the root
        if len + 1 == k && !g.has_edge(v, root) {
            continue;
        }
        on_path[v / 64] |= 1 << (v % 64);
        if extend_path(g, root, v, len + 1, k, on_path) {
            return true;
        }
        on_path[v / 64] &= !(1 << (v % 64));
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        generate(&GeneratorSpec::Complete { n }).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(&GeneratorSpec::Cycle { n }).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.m(), 3);
        assert!(k3.is_complete());
        assert_eq!(Graph::from_edge_list(2, &[]).unwrap().m(), 0);
        assert_eq!(Graph::from_edge_list(4, &[(0, 1), (0, 1), (1, 0)]).unwrap().m(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::empty(4097), Err(GraphError::TooManyVertices(4097)));
    }

    #[test]
    fn rows_span_multiple_words() {
        let g = Graph::from_edge_list(200, &[(0, 199), (63, 64), (64, 199), (0, 64)]).unwrap();
        assert!(g.is_consistent());
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![0, 63, 199]);
        assert_eq!(g.common_neighbors(0, 199), 1);
        assert_eq!(g.edges().count(), 4);
    }

    #[test]
    fn triangles_per_edge() {
        assert_eq!(max_triangles_per_edge(&complete(4)), 2);
        assert_eq!(max_triangles_per_edge(&cycle(5)), 0);
        let book3 = generate(&GeneratorSpec::Book { k: 3 }).unwrap();
        assert_eq!(max_triangles_per_edge(&book3), 3);
        assert_eq!(max_triangles_per_edge(&Graph::empty(3).unwrap()), 0);
    }

    #[test]
    fn cycles() {
        assert!(has_cycle_of_length(&cycle(5), 5).unwrap());
        assert!(!has_cycle_of_length(&cycle(5), 4).unwrap());
        assert!(has_cycle_of_length(&complete(4), 3).unwrap());
        assert!(has_cycle_of_length(&complete(4), 4).unwrap());
        assert!(!has_cycle_of_length(&complete(4), 5).unwrap());
        assert!(has_cycle_of_length(&cycle(12), 12).unwrap());
        assert!(!has_cycle_of_length(&cycle(12), 11).unwrap());
        // Petersen cycle lengths are exactly 5, 6, 8 and 9.
        let petersen = generate(&GeneratorSpec::Petersen).unwrap();
        assert!(!has_cycle_of_length(&petersen, 4).unwrap());
        assert!(has_cycle_of_length(&petersen, 6).unwrap());
        assert!(!has_cycle_of_length(&petersen, 7).unwrap());
        assert!(has_cycle_of_length(&petersen, 9).unwrap());
        assert!(!has_cycle_of_length(&petersen, 10).unwrap());
        assert_eq!(
            has_cycle_of_length(&cycle(5), 2),
            Err(GraphError::CycleLengthOutOfRange(2))
        );
        assert_eq!(
            has_cycle_of_length(&cycle(5), 13),
            Err(GraphError::CycleLengthOutOfRange(13))
        );
    }
}
