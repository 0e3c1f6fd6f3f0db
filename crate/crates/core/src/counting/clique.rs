//! Maximum clique by Bron–Kerbosch with pivoting over bit rows.
//!
//! Outer loop follows a degeneracy ordering: each vertex seeds a search in
//! which only its later neighbors are candidates and its earlier neighbors
//! are excluded. The search runs on an explicit stack so deep graphs cannot
//! overflow the call stack.

use serde::Serialize;

use crate::graph::{and_count, iter_bits, words_for, Graph};

use super::CountingError;

/// Default cap on search-tree nodes before giving up on exactness.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    /// Largest clique found.
    pub size: usize,
    /// False when the node budget ran out; `size` is then a lower bound.
    pub exact: bool,
    pub nodes: u64,
}

pub fn clique_number(g: &Graph) -> Result<CliqueResult, CountingError> {
    clique_number_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Vertices by repeated removal of a minimum-degree vertex, ties going to
/// the lowest index.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    order
}

struct Frame {
    depth: usize,
    candidates: Vec<u64>,
    excluded: Vec<u64>,
    branch: Vec<usize>,
    next: usize,
}

fn set(bits: &mut [u64], v: usize) {
    bits[v / 64] |= 1 << (v % 64);
}

fn clear(bits: &mut [u64], v: usize) {
    bits[v / 64] &= !(1 << (v % 64));
}

fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn intersect(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Branching set `P \ N(u)` for the pivot `u ∈ P ∪ X` that covers the
/// most candidates.
fn branch_set(g: &Graph, candidates: &[u64], excluded: &[u64]) -> Vec<usize> {
    let pivot = iter_bits(candidates)
        .chain(iter_bits(excluded))
        .max_by_key(|&u| (and_count(g.row(u), candidates), std::cmp::Reverse(u)))
        .expect("caller ensures P ∪ X is non-empty");
    let row = g.row(pivot);
    let rest: Vec<u64> = candidates.iter().zip(row).map(|(p, r)| p & !r).collect();
    iter_bits(&rest).collect()
}

pub fn clique_number_with_budget(g: &Graph, budget: u64) -> Result<CliqueResult, CountingError> {
    let n = g.n();
    if n == 0 {
        return Err(CountingError::NoVertices);
    }
    let words = words_for(n);
    let order = degeneracy_order(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    // any edge is a 2-clique
    let mut best = if g.m() > 0 { 2 } else { 1 };
    let mut nodes = 0u64;
    let mut stack: Vec<Frame> = Vec::new();

    for &root in &order {
        let mut later = vec![0u64; words];
        let mut earlier = vec![0u64; words];
        for u in g.neighbors(root) {
            if position[u] > position[root] {
                set(&mut later, u);
            } else {
                set(&mut earlier, u);
            }
        }
        nodes += 1;
        if count(&later) < best {
            continue;
        }
        let branch = branch_set(g, &later, &earlier);
        stack.push(Frame {
            depth: 1,
            candidates: later,
            excluded: earlier,
            branch,
            next: 0,
        });

        while let Some(top) = stack.last_mut() {
            if top.next == top.branch.len() {
                stack.pop();
                continue;
            }
            if nodes >= budget {
                return Ok(CliqueResult {
                    size: best,
                    exact: false,
                    nodes,
                });
            }
            let v = top.branch[top.next];
            top.next += 1;
            nodes += 1;

            let row = g.row(v);
            let candidates = intersect(&top.candidates, row);
            let excluded = intersect(&top.excluded, row);
            clear(&mut top.candidates, v);
            set(&mut top.excluded, v);
            let depth = top.depth + 1;

            let reachable = count(&candidates);
            if reachable == 0 {
                best = best.max(depth);
                continue;
            }
            if depth + reachable <= best {
                continue;
            }
            let branch = branch_set(g, &candidates, &excluded);
            stack.push(Frame {
                depth,
                candidates,
                excluded,
                branch,
                next: 0,
            });
        }
    }

    Ok(CliqueResult {
        size: best,
        exact: true,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_all_labeled_graphs, generate, GeneratorSpec};

    fn omega(s: &str) -> usize {
        let r = clique_number(&generate(&s.parse().unwrap()).unwrap()).unwrap();
        assert!(r.exact);
        r.size
    }

    /// Largest vertex subset that is pairwise adjacent, by subset enumeration.
    fn brute_force_omega(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|i| mask >> i & 1 == 0 || (i + 1..n).all(|j| mask >> j & 1 == 0 || g.has_edge(i, j)))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(omega("complete:7"), 7);
        assert_eq!(omega("cycle:6"), 2);
        assert_eq!(omega("stacked_planar:10:1"), 4);
        assert_eq!(omega("petersen"), 2);
        assert_eq!(omega("fan:5"), 3);
        assert_eq!(omega("book:5"), 3);
        assert_eq!(clique_number(&Graph::empty(4).unwrap()).unwrap().size, 1);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), Err(CountingError::NoVertices));
    }

    #[test]
    fn multipartite_parts() {
        assert_eq!(omega("complete_multipartite:3,1,4,2"), 4);
        assert_eq!(omega("complete_multipartite:5"), 1);
    }

    #[test]
    fn matches_brute_force_on_all_five_vertex_graphs() {
        for g in enumerate_all_labeled_graphs(5).unwrap() {
            assert_eq!(clique_number(&g).unwrap().size, brute_force_omega(&g), "{g:?}");
        }
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        for seed in 0..40 {
            let g = generate(&GeneratorSpec::Gnp { n: 16, p: 0.6, seed }).unwrap();
            assert_eq!(clique_number(&g).unwrap().size, brute_force_omega(&g));
        }
    }

    #[test]
    fn budget_exhaustion_reports_lower_bound() {
        let g = generate(&GeneratorSpec::Gnp { n: 60, p: 0.9, seed: 3 }).unwrap();
        let exact = clique_number(&g).unwrap();
        assert!(exact.exact);
        let cut = clique_number_with_budget(&g, 5).unwrap();
        assert!(!cut.exact);
        assert!(cut.size <= exact.size);
    }

    #[test]
    fn degeneracy_ties_break_low() {
        let c5 = generate(&GeneratorSpec::Cycle { n: 5 }).unwrap();
        assert_eq!(degeneracy_order(&c5), vec![0, 1, 2, 3, 4]);
        let star = Graph::from_edge_list(4, &[(3, 0), (3, 1), (3, 2)]).unwrap();
        assert_eq!(degeneracy_order(&star), vec![0, 1, 2, 3]);
    }
}
