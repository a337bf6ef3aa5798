use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::linalg::{inertia, IntMatrix};
use crate::par::{self, Exec};
use crate::poly::HomogPoly;

/// Hessian of `∂^α h` for a multiset `α` of `k - 2` indices into
/// `z_0, .., z_k`. The derivative is a quadratic form, so the Hessian is a
/// constant integer matrix: entry `(a, b)` is `coef(β)·β_0!` with
/// `β = α + e_a + e_b`, and zero if `β` is not a monomial of `h`.
pub fn derivative_hessian(h: &HomogPoly, alpha: &[usize]) -> IntMatrix {
    let k = h.k();
    let mut base = vec![0u32; k + 1];
    for &i in alpha {
        base[i] += 1;
    }
    IntMatrix::from_fn(k + 1, |a, b| {
        let mut beta = base.clone();
        beta[a] += 1;
        beta[b] += 1;
        match key_of(&beta) {
            Some(j) => {
                let factorial: BigInt = (1..=beta[0]).map(BigInt::from).product();
                h.coeff(j) * factorial
            }
            None => BigInt::zero(),
        }
    })
}

/// The key of `z_0^β_0 ∏ z_j^β_j` when every `β_j ≤ 1` for `j ≥ 1`.
fn key_of(beta: &[u32]) -> Option<VertexSet> {
    let mut j = VertexSet::EMPTY;
    for (i, &e) in beta.iter().enumerate().skip(1) {
        match e {
            0 => {}
            1 => j = j.with(i - 1),
            _ => return None,
        }
    }
    Some(j)
}

fn exponent_vector(h: &HomogPoly, j: VertexSet) -> Vec<u32> {
    let mut e = vec![0u32; h.k() + 1];
    e[0] = h.z0_exponent(j) as u32;
    for i in j.iter() {
        e[i + 1] = 1;
    }
    e
}

/// Exchange property of the support: for `α, β` in it and `i` with
/// `α_i > β_i` there is `j` with `α_j < β_j` and `α - e_i + e_j` in it.
pub fn support_is_m_convex(h: &HomogPoly) -> bool {
    let support: BTreeSet<Vec<u32>> = h.coeffs().keys().map(|&j| exponent_vector(h, j)).collect();
    support.iter().all(|alpha| {
        support.iter().all(|beta| {
            (0..alpha.len()).filter(|&i| alpha[i] > beta[i]).all(|i| {
                (0..alpha.len()).filter(|&j| alpha[j] < beta[j]).any(|j| {
                    let mut moved = alpha.clone();
                    moved[i] -= 1;
                    moved[j] += 1;
                    support.contains(&moved)
                })
            })
        })
    })
}

/// All multisets of size `len` from `0..n`, as sorted vectors.
fn multisets(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, len: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, len, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, len, 0, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Exact Lorentzian decision for a homogeneous polynomial of degree `k ≥ 2`:
/// non-negative coefficients, M-convex support, and for every multiset `α`
/// of `k - 2` indices the Hessian of `∂^α h` has at most one positive
/// eigenvalue. Derivatives that vanish identically satisfy the last
/// condition trivially.
pub fn lorentzian_check(h: &HomogPoly) -> Result<bool> {
    lorentzian_check_with(h, Exec::default())
}

pub fn lorentzian_check_with(h: &HomogPoly, exec: Exec) -> Result<bool> {
    let k = h.k();
    if k < 2 {
        return Err(Error::invalid(format!(
            "Lorentzian check needs degree at least 2, got {k}"
        )));
    }
    if h.coeffs().values().any(Signed::is_negative) || !support_is_m_convex(h) {
        return Ok(false);
    }
    let alphas = multisets(k + 1, k - 2);
    let bad = par::find_map_first(exec, alphas.len(), |idx| {
        let hess = derivative_hessian(h, &alphas[idx]);
        match inertia(&hess) {
            Ok(inr) if inr.positive <= 1 => None,
            Ok(_) => Some(Ok(())),
            Err(e) => Some(Err(e)),
        }
    });
    match bad {
        None => Ok(true),
        Some(Ok(())) => Ok(false),
        Some(Err(e)) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::linalg::Inertia;
    use crate::poly::graph_polynomial;

    fn homog(g: &Graph) -> HomogPoly {
        graph_polynomial(g).unwrap().homogenize()
    }

    #[test]
    fn k2_hessian() {
        let h = homog(&Graph::complete(2));
        let hess = derivative_hessian(&h, &[]);
        assert_eq!(
            hess,
            IntMatrix::from_i64_rows(&[&[8, 4, 4], &[4, 0, 3], &[4, 3, 0]]).unwrap()
        );
        assert_eq!(
            inertia(&hess).unwrap(),
            Inertia {
                positive: 1,
                negative: 2,
                zero: 0
            }
        );
        assert!(lorentzian_check(&h).unwrap());
    }

    #[test]
    fn examples() {
        assert!(lorentzian_check(&homog(&Graph::cycle(4))).unwrap());
        assert!(lorentzian_check(&homog(&Graph::complete(4))).unwrap());
        assert!(lorentzian_check(&homog(&Graph::star(3))).unwrap());
        assert!(!lorentzian_check(&homog(&Graph::path(4))).unwrap());
        assert!(lorentzian_check(&homog(&Graph::complete(1))).is_err());
    }

    #[test]
    fn twin_derivatives_vanish() {
        // in C_4 the opposite vertices are twins, so ∂_{z1}∂_{z3} h = 0
        let h = homog(&Graph::cycle(4));
        let hess = derivative_hessian(&h, &[1, 3]);
        assert_eq!(hess, IntMatrix::zeros(5));
    }

    #[test]
    fn multiset_counts() {
        // C(n + len - 1, len)
        assert_eq!(multisets(8, 5).len(), 792);
        assert_eq!(multisets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn m_convexity() {
        assert!(support_is_m_convex(&homog(&Graph::complete(3))));
        // z0^2 + z1*z2 has support {(2,0,0), (0,1,1)}: not M-convex
        let h = crate::poly::MultiAffinePoly::new(
            2,
            [
                (VertexSet::EMPTY, BigInt::from(1)),
                (VertexSet::pair(0, 1), BigInt::from(1)),
            ],
        )
        .unwrap()
        .homogenize();
        assert!(!support_is_m_convex(&h));
        assert!(!lorentzian_check(&h).unwrap());
    }
}
