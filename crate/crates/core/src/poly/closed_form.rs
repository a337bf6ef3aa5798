use num_bigint::BigInt;
use num_traits::Pow;

use super::MultiAffinePoly;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Blowup-polynomial of `K_k` minus the edges `(0,1), .., (0,l)`, expanded
/// from the elementary-symmetric double sum without computing any minors.
/// Vertex `0` is the one missing edges, `1..=l` its non-neighbours.
pub fn kkl_closed_form(k: usize, l: usize) -> Result<MultiAffinePoly> {
    if k < 2 || l + 2 > k {
        return Err(Error::invalid(format!(
            "closed form needs 0 <= l <= k-2, got k={k}, l={l}"
        )));
    }
    let low: VertexSet = (1..=l).collect();
    let minus_two = BigInt::from(-2);
    let mut terms = Vec::with_capacity(1 << k);
    for rest in VertexSet::full(k).without(0).subsets() {
        let r = rest.intersection(low).len() as i64;
        let s = rest.len() as i64 - r;
        let e = k as i64 - r - s;
        terms.push((rest, minus_two.clone().pow(e as u32) * (1 + r + s)));
        terms.push((
            rest.with(0),
            minus_two.clone().pow((e - 1) as u32) * ((1 - r) * (s + 2)),
        ));
    }
    MultiAffinePoly::new(k, terms)
}

/// `∏(n_i - 2) + Σ_i n_i ∏_{i'≠i}(n_{i'} - 2)`, built by polynomial products.
pub fn complete_graph_closed_form(k: usize) -> Result<MultiAffinePoly> {
    if k == 0 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    let product_except = |skip: Option<usize>| -> Result<MultiAffinePoly> {
        (0..k)
            .filter(|&i| Some(i) != skip)
            .try_fold(MultiAffinePoly::constant(k, BigInt::from(1)), |acc, i| {
                acc.mul_disjoint(&MultiAffinePoly::variable_plus(k, i, -2))
            })
    };
    let mut total = product_except(None)?;
    for i in 0..k {
        let n_i = MultiAffinePoly::new(k, [(VertexSet::singleton(i), BigInt::from(1))])?;
        total = total.add(&n_i.mul_disjoint(&product_except(Some(i))?)?)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::linalg::IntPolynomial;
    use crate::poly::graph_polynomial;

    #[test]
    fn k2_specialization() {
        assert_eq!(
            kkl_closed_form(2, 0).unwrap().to_string(),
            "3*n1*n2 - 4*n1 - 4*n2 + 4"
        );
        assert_eq!(
            complete_graph_closed_form(2).unwrap().to_string(),
            "3*n1*n2 - 4*n1 - 4*n2 + 4"
        );
    }

    #[test]
    fn matches_pipeline() {
        for k in 2..=6 {
            for l in 0..=k - 2 {
                let g = Graph::complete_minus_star(k, l).unwrap();
                assert_eq!(
                    kkl_closed_form(k, l).unwrap(),
                    graph_polynomial(&g).unwrap(),
                    "k={k} l={l}"
                );
            }
            assert_eq!(
                complete_graph_closed_form(k).unwrap(),
                kkl_closed_form(k, 0).unwrap()
            );
        }
    }

    #[test]
    fn complete_univariate() {
        for k in 1..=8usize {
            let u = complete_graph_closed_form(k).unwrap().univariate();
            let expected = &IntPolynomial::from_i64s(&[-2, 1]).pow(k as u32 - 1)
                * &IntPolynomial::from_i64s(&[-2, k as i64 + 1]);
            assert_eq!(u, expected, "k={k}");
        }
    }

    #[test]
    fn range_errors() {
        assert!(kkl_closed_form(4, 3).is_err());
        assert!(kkl_closed_form(1, 0).is_err());
    }
}
