//! Test-corpus generation: connected graphs and trees on few vertices.

use std::collections::HashMap;

use super::iso::{are_isomorphic, invariant_key};
use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATION_N: usize = 8;
const MAX_TREE_N: usize = 14;

/// Accumulates graphs up to isomorphism, keeping the first representative
/// of each class in insertion order.
#[derive(Default)]
pub struct IsoClasses {
    reps: Vec<Graph>,
    buckets: HashMap<Vec<Vec<usize>>, Vec<usize>>,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `g` unless an isomorphic graph is already present; returns
    /// whether it was new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = invariant_key(&g);
        let bucket = self.buckets.entry(key).or_default();
        if bucket
            .iter()
            .any(|&i| are_isomorphic(&self.reps[i], &g).is_some())
        {
            return false;
        }
        bucket.push(self.reps.len());
        self.reps.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.reps
    }
}

fn check_n(n: usize, cap: usize) -> Result<()> {
    if n == 0 || n > cap {
        return Err(Error::invalid(format!("n must be in 1..={cap}, got {n}")));
    }
    Ok(())
}

/// Every connected graph on the labelled vertex set `{0, .., n-1}`, ordered
/// by the bit pattern of the edge set (edge `(i, j)`, `i < j`, in column
/// order as in graph6).
pub fn labeled_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_n(n, MAX_ENUMERATION_N)?;
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).filter_map(move |mask| {
        let mut adj = vec![VertexSet::EMPTY; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[i] = adj[i].with(j);
                adj[j] = adj[j].with(i);
            }
        }
        let g = Graph::from_rows_unchecked(adj);
        g.is_connected().then_some(g)
    }))
}

/// Connected graphs on `n` vertices, optionally one per isomorphism class.
///
/// The deduplicated list is built by extension: every connected graph has a
/// vertex whose removal leaves it connected, so adding a new vertex with
/// every non-empty neighbourhood to each class on `n - 1` vertices reaches
/// every class on `n`. The order is deterministic.
pub fn enumerate_connected_graphs(
    n: usize,
    dedup: bool,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    check_n(n, MAX_ENUMERATION_N)?;
    if !dedup {
        return Ok(Box::new(labeled_connected_graphs(n)?));
    }
    Ok(Box::new(connected_classes(n).into_iter()))
}

fn connected_classes(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::complete(1)];
    for m in 2..=n {
        let mut classes = IsoClasses::new();
        for g in &level {
            for nbrs in 1u64..(1 << (m - 1)) {
                classes.insert(add_vertex(g, VertexSet::from_bits(nbrs)));
            }
        }
        level = classes.into_graphs();
    }
    level
}

/// Trees on `n` vertices up to isomorphism (leaf extension of smaller trees).
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    check_n(n, MAX_TREE_N)?;
    let mut level = vec![Graph::complete(1)];
    for m in 2..=n {
        let mut classes = IsoClasses::new();
        for t in &level {
            for v in 0..m - 1 {
                classes.insert(add_vertex(t, VertexSet::singleton(v)));
            }
        }
        level = classes.into_graphs();
    }
    Ok(level)
}

fn add_vertex(g: &Graph, nbrs: VertexSet) -> Graph {
    let k = g.order();
    let mut adj: Vec<VertexSet> = g
        .adjacency()
        .iter()
        .enumerate()
        .map(|(v, row)| if nbrs.contains(v) { row.with(k) } else { *row })
        .collect();
    adj.push(nbrs);
    Graph::from_rows_unchecked(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: all labelled graphs, deduplicated by exhaustive
    /// relabelling into a canonical (lexicographically least) edge list.
    fn brute_force_classes(n: usize) -> usize {
        let perms = permutations(n);
        let mut seen = std::collections::HashSet::new();
        for g in labeled_connected_graphs(n).unwrap() {
            let canon = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<_> = g
                        .edges()
                        .into_iter()
                        .map(|(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                        .collect();
                    e.sort();
                    e
                })
                .min()
                .unwrap();
            seen.insert(canon);
        }
        seen.len()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn small_counts_match_brute_force() {
        for n in 1..=5 {
            let fast = enumerate_connected_graphs(n, true).unwrap().count();
            assert_eq!(fast, brute_force_classes(n), "n = {n}");
        }
        assert_eq!(enumerate_connected_graphs(1, true).unwrap().count(), 1);
        assert_eq!(enumerate_connected_graphs(3, true).unwrap().count(), 2);
        assert_eq!(enumerate_connected_graphs(4, true).unwrap().count(), 6);
    }

    #[test]
    fn labeled_counts() {
        // connected labelled graphs: 1, 1, 4, 38, 728
        let counts: Vec<usize> = (1..=5)
            .map(|n| labeled_connected_graphs(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn larger_class_counts() {
        assert_eq!(enumerate_connected_graphs(6, true).unwrap().count(), 112);
        assert_eq!(enumerate_connected_graphs(7, true).unwrap().count(), 853);
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<Graph> = enumerate_connected_graphs(5, true).unwrap().collect();
        let b: Vec<Graph> = enumerate_connected_graphs(5, true).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10)
            .map(|n| enumerate_trees(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(enumerate_trees(9).unwrap().iter().all(Graph::is_tree));
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_connected_graphs(0, true).is_err());
        assert!(enumerate_connected_graphs(9, false).is_err());
    }
}
