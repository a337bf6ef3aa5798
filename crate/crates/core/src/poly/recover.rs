use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{graph_polynomial, MultiAffinePoly};
use crate::error::{Error, Result};
use crate::graph::{distance_matrix, Graph, VertexSet};

/// Largest variable count accepted by [`polynomial_symmetries`].
pub const MAX_SYMMETRY_K: usize = 10;

/// Rebuilds the graph from the quadratic coefficients:
/// `d_ij² = 4 - c_ij / (-2)^(k-2)`. The candidate graph is accepted only if
/// its distances reproduce every `d_ij` and its polynomial reproduces `p`.
#[allow(clippy::needless_range_loop)]
pub fn recover_graph(p: &MultiAffinePoly) -> Result<Graph> {
    let k = p.k();
    if k == 0 {
        return Err(Error::Recovery("polynomial has no variables".into()));
    }
    let scale: BigInt = BigInt::from(-2).pow(k.saturating_sub(2) as u32);
    let mut dist = vec![vec![0usize; k]; k];
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let c = p.coeff(VertexSet::pair(i, j));
            let (q, r) = c.div_rem(&scale);
            if !r.is_zero() {
                return Err(Error::Recovery(format!(
                    "coefficient of n{}*n{} is not a multiple of {scale}",
                    i + 1,
                    j + 1
                )));
            }
            let sq = BigInt::from(4) - q;
            let d = if sq.is_positive() {
                sq.sqrt()
            } else {
                BigInt::zero()
            };
            if !sq.is_positive() || &d * &d != sq {
                return Err(Error::Recovery(format!(
                    "d({},{})^2 = {sq} is not a positive square",
                    i + 1,
                    j + 1
                )));
            }
            let d = d
                .to_usize()
                .ok_or_else(|| Error::Recovery("distance out of range".into()))?;
            dist[i][j] = d;
            dist[j][i] = d;
            if d == 1 {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::from_edges(k, edges)?;
    if !g.is_connected() {
        return Err(Error::Recovery(
            "recovered adjacency is disconnected".into(),
        ));
    }
    let actual = distance_matrix(&g)?;
    for (i, row) in dist.iter().enumerate() {
        for (j, &d) in row.iter().enumerate() {
            if actual.get(i, j) != &BigInt::from(d) {
                return Err(Error::Recovery(format!(
                    "recovered distances are not a graph metric at ({},{})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if &graph_polynomial(&g)? != p {
        return Err(Error::Recovery(
            "polynomial of the recovered graph differs from the input".into(),
        ));
    }
    Ok(g)
}

/// Variable permutations fixing the polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Symmetries {
    /// `perm[i]` is the image of variable `i`; sorted lexicographically.
    pub perms: Vec<Vec<usize>>,
    pub fully_symmetric: bool,
}

impl Symmetries {
    pub fn order(&self) -> usize {
        self.perms.len()
    }
}

/// All `σ` with `c_{σ(S)} = c_S` for every `S`, by backtracking on linear and
/// quadratic coefficients, pruned by each variable's sorted coefficient
/// profile, and confirmed on the full table.
pub fn polynomial_symmetries(p: &MultiAffinePoly) -> Result<Symmetries> {
    let k = p.k();
    if k > MAX_SYMMETRY_K {
        return Err(Error::Capacity {
            what: "symmetry search",
            requested: k,
            cap: MAX_SYMMETRY_K,
        });
    }
    let profiles: Vec<Vec<BigInt>> = (0..k)
        .map(|v| {
            let mut prof: Vec<BigInt> = p
                .coeffs()
                .iter()
                .filter(|(s, _)| s.contains(v))
                .map(|(s, c)| c * BigInt::from(s.len()))
                .collect();
            prof.sort();
            prof
        })
        .collect();
    let mut perms = Vec::new();
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; k];
    extend(p, &profiles, 0, &mut image, &mut used, &mut perms);
    perms.sort();
    let factorial: usize = (1..=k).product();
    Ok(Symmetries {
        fully_symmetric: perms.len() == factorial,
        perms,
    })
}

fn extend(
    p: &MultiAffinePoly,
    profiles: &[Vec<BigInt>],
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let k = p.k();
    if v == k {
        if p.coeffs().iter().all(|(s, c)| &p.coeff(s.map(image)) == c) {
            out.push(image.clone());
        }
        return;
    }
    for w in 0..k {
        if used[w] || profiles[v] != profiles[w] {
            continue;
        }
        let consistent = p.coeff(VertexSet::singleton(v)) == p.coeff(VertexSet::singleton(w))
            && (0..v)
                .all(|u| p.coeff(VertexSet::pair(u, v)) == p.coeff(VertexSet::pair(image[u], w)));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        extend(p, profiles, v + 1, image, used, out);
        used[w] = false;
        image[v] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, automorphisms, DistMatrix, MetricCheck};
    use crate::poly::blowup_polynomial;

    #[test]
    fn round_trips() {
        for g in [
            Graph::path(4),
            Graph::complete(3),
            Graph::cycle(5),
            Graph::star(4),
        ] {
            let back = recover_graph(&graph_polynomial(&g).unwrap()).unwrap();
            assert!(are_isomorphic(&g, &back).is_some());
            assert_eq!(back, g);
        }
        let k1 = recover_graph(&graph_polynomial(&Graph::complete(1)).unwrap()).unwrap();
        assert_eq!(k1.order(), 1);
    }

    #[test]
    fn rejects_non_graph_polynomials() {
        let d = DistMatrix::from_i64_rows(&[vec![0, 3], vec![3, 0]], MetricCheck::Full).unwrap();
        let p = blowup_polynomial(&d).unwrap();
        // d = 3 is a square root but the two vertices are not adjacent
        assert!(matches!(recover_graph(&p), Err(Error::Recovery(_))));
        let q = MultiAffinePoly::new(2, [(VertexSet::pair(0, 1), BigInt::from(2))]).unwrap();
        assert!(matches!(recover_graph(&q), Err(Error::Recovery(_))));
    }

    #[test]
    fn symmetry_examples() {
        let s = polynomial_symmetries(&graph_polynomial(&Graph::complete(3)).unwrap()).unwrap();
        assert_eq!(s.order(), 6);
        assert!(s.fully_symmetric);

        let s = polynomial_symmetries(&graph_polynomial(&Graph::path(3)).unwrap()).unwrap();
        assert_eq!(s.perms, vec![vec![0, 1, 2], vec![2, 1, 0]]);
        assert!(!s.fully_symmetric);

        let g = Graph::complete_minus_star(4, 1).unwrap();
        let s = polynomial_symmetries(&graph_polynomial(&g).unwrap()).unwrap();
        assert_eq!(s.perms, automorphisms(&g));
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn symmetry_capacity() {
        let p = MultiAffinePoly::zero(11);
        assert!(matches!(
            polynomial_symmetries(&p),
            Err(Error::Capacity { .. })
        ));
    }
}
