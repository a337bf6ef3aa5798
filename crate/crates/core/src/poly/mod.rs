//! The multi-affine blowup-polynomial and its homogenization.

mod closed_form;
mod construct;
mod recover;
mod serde_impl;

pub use closed_form::{complete_graph_closed_form, kkl_closed_form};
pub use construct::{
    blowup_determinant_sides, blowup_polynomial, blowup_polynomial_with, graph_polynomial,
    verify_blowup_determinant,
};
pub use recover::{polynomial_symmetries, recover_graph, Symmetries, MAX_SYMMETRY_K};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::linalg::{IntMatrix, IntPolynomial, Rational};

/// A multi-affine polynomial in `n_0, .., n_{k-1}` with integer coefficients,
/// stored sparsely: the monomial `∏_{i∈S} n_i` maps to its coefficient, and
/// absent subsets have coefficient zero.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiAffinePoly {
    k: usize,
    coeffs: BTreeMap<VertexSet, BigInt>,
}

impl MultiAffinePoly {
    /// Drops zero coefficients; fails on subsets outside `{0, .., k-1}`.
    pub fn new(k: usize, coeffs: impl IntoIterator<Item = (VertexSet, BigInt)>) -> Result<Self> {
        let full = VertexSet::full(k);
        let mut map = BTreeMap::new();
        for (s, c) in coeffs {
            if !s.is_subset(full) {
                return Err(Error::invalid(format!(
                    "monomial {s} uses a variable >= {k}"
                )));
            }
            if !c.is_zero() {
                *map.entry(s).or_insert_with(BigInt::zero) += c;
            }
        }
        map.retain(|_, c: &mut BigInt| !c.is_zero());
        Ok(MultiAffinePoly { k, coeffs: map })
    }

    pub fn zero(k: usize) -> Self {
        MultiAffinePoly {
            k,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(k: usize, c: BigInt) -> Self {
        MultiAffinePoly::new(k, [(VertexSet::EMPTY, c)]).expect("empty monomial")
    }

    /// `n_i + c`.
    pub fn variable_plus(k: usize, i: usize, c: i64) -> Self {
        MultiAffinePoly::new(
            k,
            [
                (VertexSet::singleton(i), BigInt::one()),
                (VertexSet::EMPTY, BigInt::from(c)),
            ],
        )
        .expect("variable in range")
    }

    /// Number of variables.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeff(&self, s: VertexSet) -> BigInt {
        self.coeffs.get(&s).cloned().unwrap_or_default()
    }

    /// Non-zero coefficients in ascending subset order.
    pub fn coeffs(&self) -> &BTreeMap<VertexSet, BigInt> {
        &self.coeffs
    }

    /// Subsets with a non-zero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|s| s.len()).max()
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.k {
            return Err(Error::Arity {
                expected: self.k,
                got: x.len(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .map(|(s, c)| {
                s.iter()
                    .fold(Rational::from_integer(c.clone()), |acc, i| acc * &x[i])
            })
            .sum())
    }

    pub fn evaluate_int(&self, x: &[BigInt]) -> Result<BigInt> {
        if x.len() != self.k {
            return Err(Error::Arity {
                expected: self.k,
                got: x.len(),
            });
        }
        Ok(self
            .coeffs
            .iter()
            .map(|(s, c)| s.iter().fold(c.clone(), |acc, i| acc * &x[i]))
            .sum())
    }

    /// The specialization `n_0 = .. = n_{k-1} = n`.
    pub fn univariate(&self) -> IntPolynomial {
        let mut out = vec![BigInt::zero(); self.k + 1];
        for (s, c) in &self.coeffs {
            out[s.len()] += c;
        }
        IntPolynomial::new(out)
    }

    /// `(-z_0)^k · p(z_1/(-z_0), .., z_k/(-z_0))`.
    pub fn homogenize(&self) -> HomogPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(s, c)| {
                let c = if (self.k - s.len()) % 2 == 1 {
                    -c
                } else {
                    c.clone()
                };
                (*s, c)
            })
            .collect();
        HomogPoly { k: self.k, coeffs }
    }

    /// Sets `n_j = 0` for `j ∉ s`, divides by `(-2)^(k-|s|)` and renumbers
    /// the remaining variables in ascending order. For a blowup-polynomial and
    /// a vertex set inducing a subgraph without isolated vertices this is the
    /// blowup-polynomial of that subgraph.
    pub fn restrict(&self, s: VertexSet) -> Result<MultiAffinePoly> {
        if !s.is_subset(VertexSet::full(self.k)) {
            return Err(Error::invalid(format!("{s} is not a variable subset")));
        }
        let divisor: BigInt = BigInt::from(-2).pow((self.k - s.len()) as u32);
        let mut out = BTreeMap::new();
        for (t, c) in self.coeffs.iter().filter(|(t, _)| t.is_subset(s)) {
            let (q, r) = c.div_rem(&divisor);
            if !r.is_zero() {
                return Err(Error::Consistency(format!(
                    "coefficient {c} at {t} is not divisible by {divisor}"
                )));
            }
            out.insert(t.compress(s), q);
        }
        MultiAffinePoly::new(s.len(), out)
    }

    /// `(∂_i ∂_j p)(0)`: the coefficient of `n_i n_j` off the diagonal, and
    /// zero on it since `p` is multi-affine.
    pub fn hessian_at_zero(&self) -> IntMatrix {
        IntMatrix::from_fn(self.k, |i, j| {
            if i == j {
                BigInt::zero()
            } else {
                self.coeff(VertexSet::pair(i, j))
            }
        })
    }

    /// `p(-n_0, .., -n_{k-1})`.
    #[must_use]
    pub fn reflected(&self) -> MultiAffinePoly {
        MultiAffinePoly {
            k: self.k,
            coeffs: self
                .coeffs
                .iter()
                .map(|(s, c)| (*s, if s.len() % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Renames variable `i` to `perm[i]`.
    #[must_use]
    pub fn permuted(&self, perm: &[usize]) -> MultiAffinePoly {
        MultiAffinePoly {
            k: self.k,
            coeffs: self
                .coeffs
                .iter()
                .map(|(s, c)| (s.map(perm), c.clone()))
                .collect(),
        }
    }

    /// Product of two polynomials whose monomials never share a variable
    /// (so the product stays multi-affine).
    pub fn mul_disjoint(&self, other: &MultiAffinePoly) -> Result<MultiAffinePoly> {
        if self.k != other.k {
            return Err(Error::Arity {
                expected: self.k,
                got: other.k,
            });
        }
        let mut terms = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                if !s.intersection(*t).is_empty() {
                    return Err(Error::invalid("product would not be multi-affine"));
                }
                terms.push((s.union(*t), a * b));
            }
        }
        MultiAffinePoly::new(self.k, terms)
    }

    pub fn add(&self, other: &MultiAffinePoly) -> Result<MultiAffinePoly> {
        if self.k != other.k {
            return Err(Error::Arity {
                expected: self.k,
                got: other.k,
            });
        }
        MultiAffinePoly::new(
            self.k,
            self.coeffs
                .iter()
                .chain(other.coeffs.iter())
                .map(|(s, c)| (*s, c.clone())),
        )
    }

    /// Human-readable form with 1-based variable names, highest degree
    /// first, e.g. `3*n1*n2 - 4*n1 - 4*n2 + 4`.
    pub fn display_with(&self, var: &str) -> String {
        let mut terms: Vec<(&VertexSet, &BigInt)> = self.coeffs.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.len().cmp(&a.len()).then_with(|| a.iter().cmp(b.iter())));
        render_terms(terms.into_iter().map(|(s, c)| {
            let names: Vec<String> = s.iter().map(|i| format!("{var}{}", i + 1)).collect();
            (names.join("*"), c)
        }))
    }
}

impl fmt::Display for MultiAffinePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("n"))
    }
}

impl fmt::Debug for MultiAffinePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiAffinePoly(k={}, {})", self.k, self)
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (mono, c) in terms {
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The homogenized polynomial in `z_0, .., z_k`: homogeneous of degree `k`,
/// degree at most one in each of `z_1, .., z_k`. The key `J ⊆ {0, .., k-1}`
/// stands for the monomial `z_0^(k-|J|) · ∏_{j∈J} z_{j+1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogPoly {
    k: usize,
    coeffs: BTreeMap<VertexSet, BigInt>,
}

impl HomogPoly {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeff(&self, j: VertexSet) -> BigInt {
        self.coeffs.get(&j).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<VertexSet, BigInt> {
        &self.coeffs
    }

    /// Exponent of `z_0` in the monomial keyed by `j`.
    pub fn z0_exponent(&self, j: VertexSet) -> usize {
        self.k - j.len()
    }

    pub fn all_coeffs_nonneg(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn display(&self) -> String {
        let mut terms: Vec<(&VertexSet, &BigInt)> = self.coeffs.iter().collect();
        terms.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        render_terms(terms.into_iter().map(|(j, c)| {
            let mut names = Vec::new();
            match self.k - j.len() {
                0 => {}
                1 => names.push("z0".to_string()),
                e => names.push(format!("z0^{e}")),
            }
            names.extend(j.iter().map(|i| format!("z{}", i + 1)));
            (names.join("*"), c)
        }))
    }
}

impl fmt::Debug for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogPoly(k={}, {})", self.k, self.display())
    }
}
