use serde::{Deserialize, Serialize};

use super::SetFamily;
use crate::error::{Error, Result};
use crate::graph::{distance_matrix, prune_leaves, Graph, VertexSet};
use crate::linalg::all_principal_minors_with;
use crate::par::{self, Config};
use crate::poly::{blowup_polynomial_with, MultiAffinePoly};

/// Subsets with a non-zero coefficient.
pub fn support_family(p: &MultiAffinePoly) -> SetFamily {
    SetFamily::new(p.k(), p.support()).expect("support lies in the ground set")
}

pub fn blowup_support_family(g: &Graph) -> Result<SetFamily> {
    blowup_support_family_with(g, &Config::default())
}

/// The support of `p_G`, cross-checked against the non-singular principal
/// submatrices of `D + 2·Id` computed separately.
pub fn blowup_support_family_with(g: &Graph, cfg: &Config) -> Result<SetFamily> {
    let d = distance_matrix(g)?;
    let family = support_family(&blowup_polynomial_with(&d, cfg)?);
    let minors = all_principal_minors_with(&d.shifted(), cfg)?;
    let nonsingular = SetFamily::new(
        g.order(),
        minors
            .iter()
            .enumerate()
            .filter(|(_, m)| !num_traits::Zero::is_zero(*m))
            .map(|(bits, _)| VertexSet::from_bits(bits as u64)),
    )?;
    if nonsingular != family {
        return Err(Error::Consistency(
            "polynomial support differs from the non-singular minors".into(),
        ));
    }
    Ok(family)
}

/// Feasible sets of the tree-blowup delta-matroid: `I` is infeasible iff its
/// Steiner tree has two leaves, both in `I`, whose unique neighbours in the
/// Steiner tree coincide.
pub fn tree_blowup_matroid(t: &Graph) -> Result<SetFamily> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let k = t.order();
    let cap = Config::default().max_poly_k;
    if k > cap {
        return Err(Error::Capacity {
            what: "tree-blowup family",
            requested: k,
            cap,
        });
    }
    let feasible = VertexSet::full(k).subsets().filter(|&i| {
        if i.is_empty() {
            return true;
        }
        let steiner = prune_leaves(t, i);
        let mut parents = VertexSet::EMPTY;
        for v in steiner.iter() {
            let nbrs = t.neighbors(v).intersection(steiner);
            if nbrs.len() == 1 && i.contains(v) {
                let parent = nbrs.first().expect("one neighbour");
                if parents.contains(parent) {
                    return false;
                }
                parents = parents.with(parent);
            }
        }
        true
    });
    SetFamily::new(k, feasible)
}

/// `2^{0..k-1}` minus `{i, i+2}` and `{i, i+1, i+2}` for `0 ≤ i ≤ k-3`.
pub fn path_rhs_family(k: usize) -> Result<SetFamily> {
    if k == 0 {
        return Err(Error::invalid("path family needs k >= 1"));
    }
    let mut excluded = Vec::new();
    for i in 0..k.saturating_sub(2) {
        excluded.push(VertexSet::pair(i, i + 2));
        excluded.push(VertexSet::pair(i, i + 2).with(i + 1));
    }
    SetFamily::new(
        k,
        VertexSet::full(k)
            .subsets()
            .filter(|s| !excluded.contains(s)),
    )
}

/// Which supersets may witness infeasibility in [`matroid_prime`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeKind {
    /// `G(Ĩ)` connected.
    Connected,
    /// `G(Ĩ)` connected and isometric: its distances are those of `G`.
    Isometric,
}

impl TryFrom<u8> for PrimeKind {
    type Error = Error;
    fn try_from(kind: u8) -> Result<Self> {
        match kind {
            1 => Ok(PrimeKind::Connected),
            2 => Ok(PrimeKind::Isometric),
            _ => Err(Error::invalid(format!("kind must be 1 or 2, got {kind}"))),
        }
    }
}

pub fn matroid_prime(g: &Graph, kind: PrimeKind) -> Result<SetFamily> {
    matroid_prime_with(g, kind, &Config::default())
}

/// `I` is infeasible iff it contains distinct `v_1, v_2` for which some
/// `Ĩ ⊇ I` of the given kind makes `v_1, v_2` twins in `G(Ĩ)` (equal
/// neighbourhoods inside `Ĩ`). Good supersets are found per pair and then
/// closed downward with a superset-sum transform.
pub fn matroid_prime_with(g: &Graph, kind: PrimeKind, cfg: &Config) -> Result<SetFamily> {
    g.require_connected()?;
    let k = g.order();
    if k > cfg.max_matroid_k {
        return Err(Error::Capacity {
            what: "matroid_prime superset enumeration",
            requested: k,
            cap: cfg.max_matroid_k,
        });
    }
    let size = 1usize << k;
    let global = distance_matrix(g)?;
    let admissible: Vec<bool> = par::map_indices(cfg.exec, size, |bits| {
        let s = VertexSet::from_bits(bits as u64);
        let Some(first) = s.first() else {
            return false;
        };
        let dist = bfs_within(g, s, first);
        if dist.iter().any(|(_, d)| d.is_none()) {
            return false;
        }
        match kind {
            PrimeKind::Connected => true,
            PrimeKind::Isometric => s.iter().all(|u| {
                bfs_within(g, s, u).into_iter().all(|(v, d)| {
                    d.map(num_bigint::BigInt::from).as_ref() == Some(global.get(u, v))
                })
            }),
        }
    });

    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();
    let per_pair: Vec<Vec<bool>> = par::map_slice(cfg.exec, &pairs, |&(a, b)| {
        let pair = VertexSet::pair(a, b);
        let mut good: Vec<bool> = (0..size)
            .map(|bits| {
                let s = VertexSet::from_bits(bits as u64);
                pair.is_subset(s)
                    && admissible[bits]
                    && g.neighbors(a).intersection(s) == g.neighbors(b).intersection(s)
            })
            .collect();
        for bit in 0..k {
            for bits in 0..size {
                if bits & (1 << bit) == 0 && good[bits | (1 << bit)] {
                    good[bits] = true;
                }
            }
        }
        for (bits, flag) in good.iter_mut().enumerate() {
            *flag &= pair.is_subset(VertexSet::from_bits(bits as u64));
        }
        good
    });
    let feasible = (0..size)
        .filter(|&bits| per_pair.iter().all(|good| !good[bits]))
        .map(|bits| VertexSet::from_bits(bits as u64));
    SetFamily::new(k, feasible)
}

/// BFS distances from `source` in the subgraph induced on `s`.
fn bfs_within(g: &Graph, s: VertexSet, source: usize) -> Vec<(usize, Option<usize>)> {
    let mut dist: Vec<Option<usize>> = vec![None; g.order()];
    dist[source] = Some(0);
    let mut frontier = VertexSet::singleton(source);
    let mut seen = frontier;
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let next = frontier
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)))
            .intersection(s)
            .difference(seen);
        for v in next.iter() {
            dist[v] = Some(level);
        }
        seen = seen.union(next);
        frontier = next;
    }
    s.iter().map(|v| (v, dist[v])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_trees;
    use crate::matroid::{compare_families, is_delta_matroid, Witness};
    use crate::poly::graph_polynomial;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// The graph with vertices u, w1, w2, z, v1, v2, x numbered 0..6.
    fn g_circ() -> Graph {
        Graph::from_edges(
            7,
            [
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (3, 5),
                (5, 6),
                (2, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn support_examples() {
        let f = blowup_support_family(&Graph::complete(3)).unwrap();
        assert_eq!(f.len(), 8);
        let f = blowup_support_family(&Graph::path(4)).unwrap();
        assert_eq!(
            f.infeasible(),
            vec![set(&[0, 2]), set(&[0, 1, 2]), set(&[1, 3]), set(&[1, 2, 3])]
        );
        let p9 = graph_polynomial(&Graph::path(9)).unwrap();
        assert!(!support_family(&p9).contains(VertexSet::full(9)));
    }

    #[test]
    fn path_family_examples() {
        assert_eq!(
            path_rhs_family(3).unwrap().infeasible(),
            vec![set(&[0, 2]), set(&[0, 1, 2])]
        );
        assert_eq!(path_rhs_family(2).unwrap(), SetFamily::power_set(2));
        assert_eq!(path_rhs_family(5).unwrap().len(), 26);
    }

    #[test]
    fn tree_family_examples() {
        let star = tree_blowup_matroid(&Graph::star(3)).unwrap();
        for s in VertexSet::full(4).subsets() {
            let leaves = s.without(0).len();
            assert_eq!(star.contains(s), leaves < 2, "{s}");
        }
        for k in 1..=8 {
            assert_eq!(
                tree_blowup_matroid(&Graph::path(k)).unwrap(),
                path_rhs_family(k).unwrap()
            );
        }
        assert!(matches!(
            tree_blowup_matroid(&Graph::cycle(4)),
            Err(Error::NotATree)
        ));
    }

    #[test]
    fn prime_on_trees_matches_tree_family() {
        for n in 1..=7 {
            for t in enumerate_trees(n).unwrap() {
                let expected = tree_blowup_matroid(&t).unwrap();
                assert_eq!(matroid_prime(&t, PrimeKind::Connected).unwrap(), expected);
                assert_eq!(matroid_prime(&t, PrimeKind::Isometric).unwrap(), expected);
            }
        }
    }

    #[test]
    fn prime_on_complete_graph_is_power_set() {
        for kind in [PrimeKind::Connected, PrimeKind::Isometric] {
            assert_eq!(
                matroid_prime(&Graph::complete(3), kind).unwrap(),
                SetFamily::power_set(3)
            );
        }
    }

    #[test]
    fn g_circ_fails_both_kinds() {
        for kind in [PrimeKind::Connected, PrimeKind::Isometric] {
            let f = matroid_prime(&g_circ(), kind).unwrap();
            assert!(matches!(
                is_delta_matroid(&f).unwrap(),
                Some(Witness::Exchange { .. })
            ));
        }
    }

    #[test]
    fn kind_two_is_contained_in_support_complement() {
        let g = g_circ();
        let support = blowup_support_family(&g).unwrap();
        let prime = matroid_prime(&g, PrimeKind::Isometric).unwrap();
        // kind-2 infeasible implies a vanishing coefficient
        assert!(compare_families(&support, &prime)
            .unwrap()
            .only_in_first
            .is_empty());
    }

    #[test]
    fn capacity_and_kind_parsing() {
        let cfg = Config {
            max_matroid_k: 5,
            ..Config::default()
        };
        assert!(matches!(
            matroid_prime_with(&Graph::path(6), PrimeKind::Connected, &cfg),
            Err(Error::Capacity { .. })
        ));
        assert!(PrimeKind::try_from(3).is_err());
        assert_eq!(PrimeKind::try_from(2).unwrap(), PrimeKind::Isometric);
    }
}
