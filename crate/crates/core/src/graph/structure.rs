use super::{BlowupSpec, Graph, VertexSet};
use crate::error::{Error, Result};

/// An induced subgraph together with the map back to the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertices[i]` is the parent vertex of subgraph vertex `i` (ascending).
    pub vertices: Vec<usize>,
    pub has_isolated: bool,
}

impl InducedSubgraph {
    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }
}

pub fn induced_subgraph(g: &Graph, s: VertexSet) -> Result<InducedSubgraph> {
    if s.is_empty() {
        return Err(Error::invalid("induced subgraph on the empty set"));
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::invalid(format!("{s} is not a vertex subset")));
    }
    let vertices: Vec<usize> = s.iter().collect();
    let rows: Vec<VertexSet> = vertices
        .iter()
        .map(|&v| g.neighbors(v).intersection(s).compress(s))
        .collect();
    let has_isolated = vertices.len() > 1 && rows.iter().any(|r| r.is_empty());
    Ok(InducedSubgraph {
        graph: Graph::from_rows_unchecked(rows),
        vertices,
        has_isolated,
    })
}

/// The parts of a complete multipartite structure, if `g` has one. Parts are
/// the classes of the non-adjacency relation, which must be transitive
/// (equivalently, the complement is a disjoint union of cliques). Parts are
/// ordered by smallest member.
pub fn complete_multipartite_partition(g: &Graph) -> Option<Vec<VertexSet>> {
    let all = g.vertices();
    let mut parts = Vec::new();
    let mut seen = VertexSet::EMPTY;
    for v in 0..g.order() {
        if seen.contains(v) {
            continue;
        }
        let part = all.difference(g.neighbors(v));
        let closed = part.iter().all(|w| all.difference(g.neighbors(w)) == part);
        if !closed {
            return None;
        }
        seen = seen.union(part);
        parts.push(part);
    }
    Some(parts)
}

/// Twin-class quotient of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinCollapse {
    /// The blowup-minimal graph.
    pub base: Graph,
    /// Multiplicities with `blowup(base, spec) ≅ g`.
    pub spec: BlowupSpec,
    /// `classes[i]` lists the original vertices merged into base vertex `i`.
    pub classes: Vec<VertexSet>,
}

/// Repeatedly merges non-adjacent vertices with identical neighbourhoods.
/// Base vertices are ordered by the smallest original vertex in their class.
pub fn collapse_twins(g: &Graph) -> Result<TwinCollapse> {
    g.require_connected()?;
    let mut graph = g.clone();
    let mut classes: Vec<VertexSet> = (0..g.order()).map(VertexSet::singleton).collect();
    loop {
        let k = graph.order();
        let mut rep: Vec<usize> = (0..k).collect();
        for v in 0..k {
            if let Some(u) = (0..v).find(|&u| {
                rep[u] == u && !graph.has_edge(u, v) && graph.neighbors(u) == graph.neighbors(v)
            }) {
                rep[v] = u;
            }
        }
        let reps: Vec<usize> = (0..k).filter(|&v| rep[v] == v).collect();
        if reps.len() == k {
            break;
        }
        let new_index: Vec<usize> = {
            let mut idx = vec![0; k];
            for (i, &r) in reps.iter().enumerate() {
                idx[r] = i;
            }
            (0..k).map(|v| idx[rep[v]]).collect()
        };
        let mut merged = vec![VertexSet::EMPTY; reps.len()];
        for v in 0..k {
            merged[new_index[v]] = merged[new_index[v]].union(classes[v]);
        }
        let adj = reps
            .iter()
            .map(|&r| graph.neighbors(r).iter().map(|w| new_index[w]).collect())
            .collect();
        graph = Graph::from_rows_unchecked(adj);
        classes = merged;
    }
    let spec = BlowupSpec::new(classes.iter().map(|c| c.len()).collect())?;
    Ok(TwinCollapse {
        base: graph,
        spec,
        classes,
    })
}

/// Vertex set of the smallest subtree of `t` containing `s`, obtained by
/// deleting leaves outside `s` until none remain.
pub fn steiner_tree_vertices(t: &Graph, s: VertexSet) -> Result<VertexSet> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if s.is_empty() {
        return Err(Error::invalid("Steiner tree of the empty set"));
    }
    if !s.is_subset(t.vertices()) {
        return Err(Error::invalid(format!("{s} is not a vertex subset")));
    }
    Ok(prune_leaves(t, s))
}

pub(crate) fn prune_leaves(t: &Graph, s: VertexSet) -> VertexSet {
    let mut alive = t.vertices();
    loop {
        let removable: VertexSet = alive
            .difference(s)
            .iter()
            .filter(|&v| t.neighbors(v).intersection(alive).len() <= 1)
            .collect();
        if removable.is_empty() {
            return alive;
        }
        alive = alive.difference(removable);
    }
}
