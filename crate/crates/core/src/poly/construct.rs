use num_bigint::BigInt;
use num_traits::Pow;

use super::MultiAffinePoly;
use crate::error::Result;
use crate::graph::{
    blowup_distance_matrix, distance_matrix, BlowupSpec, DistMatrix, Graph, VertexSet,
};
use crate::linalg::{all_principal_minors_with, determinant};
use crate::par::Config;

/// `det(diag(n)·(D + 2·Id) - 2·Id)`, expanded: the coefficient of
/// `∏_{i∈S} n_i` is `(-2)^(k-|S|) · det (D + 2·Id)[S, S]`.
pub fn blowup_polynomial(d: &DistMatrix) -> Result<MultiAffinePoly> {
    blowup_polynomial_with(d, &Config::default())
}

pub fn blowup_polynomial_with(d: &DistMatrix, cfg: &Config) -> Result<MultiAffinePoly> {
    let k = d.k();
    let minors = all_principal_minors_with(&d.shifted(), cfg)?;
    let minus_two = BigInt::from(-2);
    let powers: Vec<BigInt> = (0..=k).map(|e| minus_two.clone().pow(e as u32)).collect();
    MultiAffinePoly::new(
        k,
        minors.into_iter().enumerate().map(|(bits, minor)| {
            let s = VertexSet::from_bits(bits as u64);
            (s, &powers[k - s.len()] * minor)
        }),
    )
}

/// The blowup-polynomial of a connected graph.
pub fn graph_polynomial(g: &Graph) -> Result<MultiAffinePoly> {
    blowup_polynomial(&distance_matrix(g)?)
}

/// `(det D_{G[n]}, (-2)^(Σ(n_v - 1)) · p_G(n))`, computed independently: the
/// left side from the blowup's own distance matrix.
pub fn blowup_determinant_sides(g: &Graph, spec: &BlowupSpec) -> Result<(BigInt, BigInt)> {
    let d = distance_matrix(g)?;
    let lhs = determinant(&blowup_distance_matrix(&d, spec)?.to_matrix());
    let p = blowup_polynomial(&d)?;
    let n: Vec<BigInt> = spec.sizes().iter().map(|&s| BigInt::from(s)).collect();
    let rhs = BigInt::from(-2).pow(spec.excess() as u32) * p.evaluate_int(&n)?;
    Ok((lhs, rhs))
}

pub fn verify_blowup_determinant(g: &Graph, spec: &BlowupSpec) -> Result<bool> {
    let (lhs, rhs) = blowup_determinant_sides(g, spec)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{blowup, MetricCheck};

    #[test]
    fn small_examples() {
        let p = graph_polynomial(&Graph::complete(2)).unwrap();
        assert_eq!(p.to_string(), "3*n1*n2 - 4*n1 - 4*n2 + 4");
        let p = graph_polynomial(&Graph::complete(1)).unwrap();
        assert_eq!(p.to_string(), "2*n1 - 2");
    }

    #[test]
    fn determinant_identity_on_small_blowups() {
        for g in [Graph::path(3), Graph::cycle(4), Graph::star(3)] {
            for sizes in [vec![1, 2, 1], vec![3, 1, 2], vec![2, 2, 2]] {
                let mut sizes = sizes;
                sizes.resize(g.order(), 1);
                let spec = BlowupSpec::new(sizes).unwrap();
                assert!(verify_blowup_determinant(&g, &spec).unwrap());
                // the blowup's own BFS metric gives the same left side
                let big = blowup(&g, &spec).unwrap();
                let direct = determinant(&distance_matrix(&big).unwrap().to_matrix());
                let (lhs, _) = blowup_determinant_sides(&g, &spec).unwrap();
                assert_eq!(direct, lhs);
            }
        }
    }

    #[test]
    fn general_metric_input() {
        let d = DistMatrix::from_i64_rows(&[vec![0, 3], vec![3, 0]], MetricCheck::Full).unwrap();
        let p = blowup_polynomial(&d).unwrap();
        // det [[2n1-2, 3n1],[3n2, 2n2-2]]
        assert_eq!(p.to_string(), "-5*n1*n2 - 4*n1 - 4*n2 + 4");
    }

    #[test]
    fn capacity_is_enforced() {
        let cfg = Config {
            max_poly_k: 3,
            ..Config::default()
        };
        let d = distance_matrix(&Graph::path(4)).unwrap();
        assert!(matches!(
            blowup_polynomial_with(&d, &cfg),
            Err(Error::Capacity {
                requested: 4,
                cap: 3,
                ..
            })
        ));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let d = distance_matrix(&Graph::cycle(7)).unwrap();
        assert_eq!(
            blowup_polynomial_with(&d, &Config::sequential()).unwrap(),
            blowup_polynomial_with(&d, &Config::default()).unwrap()
        );
    }
}
