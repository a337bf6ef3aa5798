//! Finite simple graphs on at most 64 vertices, their metrics, blowups and
//! the structural predicates used by the polynomial and matroid code.

mod edgelist;
mod enumerate;
mod graph6;
mod iso;
mod metric;
mod structure;

pub use edgelist::{parse_edge_list, EdgeList};
pub use enumerate::{
    enumerate_connected_graphs, enumerate_trees, labeled_connected_graphs, IsoClasses,
    MAX_ENUMERATION_N,
};
pub use graph6::{parse_graph6, to_graph6};
pub use iso::{are_isomorphic, automorphisms};
pub use metric::{
    blowup_distance_matrix, distance_matrix, parse_distance_matrix, DistMatrix, MetricCheck,
};
pub(crate) use structure::prune_leaves;
pub use structure::{
    collapse_twins, complete_multipartite_partition, induced_subgraph, steiner_tree_vertices,
    InducedSubgraph, TwinCollapse,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count representable by [`VertexSet`].
pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, .., k-1}`; vertex `i` is bit `i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The bit pattern as a table index.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// `{0, .., k-1}`.
    pub fn full(k: usize) -> Self {
        assert!(k <= MAX_VERTICES);
        if k == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << k) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn pair(a: usize, b: usize) -> Self {
        VertexSet((1u64 << a) | (1u64 << b))
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Image under the vertex map `v -> perm[v]`.
    pub fn map(self, perm: &[usize]) -> VertexSet {
        self.iter().map(|v| perm[v]).collect()
    }

    /// All subsets of `self`, in ascending bit order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some(cur.wrapping_sub(mask) & mask)
            };
            Some(VertexSet(cur))
        })
    }

    /// Re-indexes `self ⊆ ground` into the compressed coordinates of `ground`
    /// (the i-th smallest element of `ground` becomes `i`).
    pub fn compress(self, ground: VertexSet) -> VertexSet {
        ground
            .iter()
            .enumerate()
            .filter(|&(_, v)| self.contains(v))
            .map(|(i, _)| i)
            .collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().fold(0u64, |acc, v| acc | 1u64 << v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A finite simple undirected graph.
///
/// Connectivity is computed at construction. Disconnected graphs can be
/// represented (parsers and `induced_subgraph` produce them) but every
/// metric-dependent operation rejects them with [`Error::Disconnected`].
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
    connected: bool,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(k: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(k)?;
        let mut adj = vec![VertexSet::EMPTY; k];
        for (u, v) in edges {
            if u >= k || v >= k {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for {k} vertices"
                )));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Builds a graph from adjacency rows; rows must be symmetric and loop-free.
    pub fn from_adjacency(rows: Vec<VertexSet>) -> Result<Graph> {
        let k = rows.len();
        check_order(k)?;
        let full = VertexSet::full(k);
        for (v, row) in rows.iter().enumerate() {
            if !row.is_subset(full) {
                return Err(Error::invalid(format!(
                    "row {v} references vertices >= {k}"
                )));
            }
            if row.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if let Some(w) = row.iter().find(|&w| !rows[w].contains(v)) {
                return Err(Error::invalid(format!(
                    "adjacency not symmetric at ({v}, {w})"
                )));
            }
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Graph {
        let connected = reachable_from(&adj, 0) == VertexSet::full(adj.len());
        Graph {
            adj,
            labels: None,
            connected,
        }
    }

    #[must_use]
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order());
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.edge_count() + 1 == self.order()
    }

    pub fn is_complete(&self) -> bool {
        let k = self.order();
        self.adj.iter().all(|r| r.len() + 1 == k)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let k = self.order();
        assert_eq!(perm.len(), k);
        let mut adj = vec![VertexSet::EMPTY; k];
        for (v, row) in self.adj.iter().enumerate() {
            adj[perm[v]] = row.map(perm);
        }
        Graph {
            adj,
            labels: None,
            connected: self.connected,
        }
    }

    /// BFS distance row from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let k = self.order();
        let mut dist = vec![None; k];
        dist[source] = Some(0);
        let mut seen = VertexSet::singleton(source);
        let mut frontier = seen;
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            next = next.difference(seen);
            for v in next.iter() {
                dist[v] = Some(level);
            }
            seen = seen.union(next);
            frontier = next;
        }
        dist
    }

    /// The path `0 - 1 - .. - (k-1)`.
    pub fn path(k: usize) -> Graph {
        Graph::from_edges(k, (1..k).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3);
        Graph::from_edges(k, (0..k).map(|v| (v, (v + 1) % k))).expect("valid cycle")
    }

    pub fn complete(k: usize) -> Graph {
        let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
        Graph::from_edges(k, edges).expect("valid complete graph")
    }

    /// Star with centre `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    /// Complete multipartite graph with the given part sizes, parts laid out
    /// consecutively.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let mut part_of = Vec::new();
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let k = part_of.len();
        let edges = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v]);
        Graph::from_edges(k, edges).expect("valid multipartite graph")
    }

    /// `K_k` with the edges `(0, 1), .., (0, l)` removed (0-based form of the
    /// chordal family whose blowup-polynomial has a closed form).
    pub fn complete_minus_star(k: usize, l: usize) -> Result<Graph> {
        if k < 2 || l + 2 > k {
            return Err(Error::invalid(format!(
                "need 0 <= l <= k-2, got k={k}, l={l}"
            )));
        }
        let edges = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u == 0 && v <= l));
        Graph::from_edges(k, edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(k={}, edges={:?}", self.order(), self.edges())?;
        if !self.connected {
            f.write_str(", disconnected")?;
        }
        f.write_str(")")
    }
}

fn check_order(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::invalid("graph must have at least one vertex"));
    }
    if k > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            requested: k,
            cap: MAX_VERTICES,
        });
    }
    Ok(())
}

fn reachable_from(adj: &[VertexSet], source: usize) -> VertexSet {
    let mut seen = VertexSet::singleton(source);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier.iter() {
            next = next.union(adj[v]);
        }
        frontier = next.difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

/// Blowup multiplicities `n_v >= 1`, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlowupSpec(Vec<usize>);

impl BlowupSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if let Some(pos) = sizes.iter().position(|&n| n == 0) {
            return Err(Error::invalid(format!(
                "blowup size at vertex {pos} is zero"
            )));
        }
        Ok(BlowupSpec(sizes))
    }

    pub fn ones(k: usize) -> Self {
        BlowupSpec(vec![1; k])
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ n_v`, the order of the blown-up graph.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Σ (n_v - 1)`.
    pub fn excess(&self) -> usize {
        self.total() - self.0.len()
    }

    /// For each vertex of the blowup, the base vertex it copies.
    pub fn owners(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(v, &n)| std::iter::repeat_n(v, n))
            .collect()
    }
}

/// The blowup `G[n]`: vertex `v` becomes `n_v` pairwise non-adjacent copies,
/// and copies of `v`, `w` are adjacent iff `v ~ w`. Copies of vertex 0 come
/// first, then copies of vertex 1, and so on.
pub fn blowup(g: &Graph, spec: &BlowupSpec) -> Result<Graph> {
    g.require_connected()?;
    let k = g.order();
    if spec.len() != k {
        return Err(Error::Arity {
            expected: k,
            got: spec.len(),
        });
    }
    if k == 1 && spec.total() > 1 {
        return Err(Error::invalid(
            "blowup of a single vertex with n >= 2 is disconnected",
        ));
    }
    let owners = spec.owners();
    let total = owners.len();
    check_order(total)?;
    let adj = (0..total)
        .map(|a| {
            (0..total)
                .filter(|&b| g.has_edge(owners[a], owners[b]))
                .collect()
        })
        .collect();
    Ok(Graph::from_rows_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 2, 5].into_iter().collect();
        assert_eq!(s.bits(), 0b100101);
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(s.to_string(), "{0,2,5}");
        assert_eq!(s.subsets().count(), 8);
        assert!(s.subsets().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::full(64).len(), 64);
        let ground: VertexSet = [1, 3, 4].into_iter().collect();
        let sub: VertexSet = [1, 4].into_iter().collect();
        assert_eq!(sub.compress(ground).bits(), 0b101);
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 1)]),
            Err(Error::SelfLoop(1))
        );
    }

    #[test]
    fn disconnected_is_flagged() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.require_connected(), Err(Error::Disconnected));
    }

    #[test]
    fn blowup_of_edge() {
        let k2 = Graph::complete(2);
        let p3 = blowup(&k2, &BlowupSpec::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(p3.edges(), vec![(0, 2), (1, 2)]);
        assert!(are_isomorphic(&p3, &Graph::path(3)).is_some());

        let c4 = blowup(&k2, &BlowupSpec::new(vec![2, 2]).unwrap()).unwrap();
        assert!(are_isomorphic(&c4, &Graph::cycle(4)).is_some());
    }

    #[test]
    fn blowup_of_single_vertex_rejected() {
        let k1 = Graph::complete(1);
        assert!(blowup(&k1, &BlowupSpec::new(vec![2]).unwrap()).is_err());
        assert_eq!(blowup(&k1, &BlowupSpec::ones(1)).unwrap(), k1);
    }

    #[test]
    fn blowup_spec_rejects_zero() {
        assert!(BlowupSpec::new(vec![1, 0]).is_err());
    }

    #[test]
    fn complete_minus_star_shape() {
        let g = Graph::complete_minus_star(4, 1).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(!g.has_edge(0, 1));
        assert!(Graph::complete_minus_star(4, 3).is_err());
    }
}
