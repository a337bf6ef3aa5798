use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::IntPolynomial;
use crate::poly::{HomogPoly, MultiAffinePoly};

/// A general sparse integer polynomial, keyed by exponent vectors. Used to
/// run the line test on homogenized polynomials and on hand-built inputs
/// that are not multi-affine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn new(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Arity {
                    expected: nvars,
                    got: e.len(),
                });
            }
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SparsePoly { nvars, terms: map })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// `q^d · f((a + t·b)/q)` as a polynomial in `t`, where `d` is the total
    /// degree; a positive multiple of the restriction to the line.
    pub fn line_restriction(&self, a: &[BigInt], b: &[BigInt], q: &BigInt) -> IntPolynomial {
        let d = self.total_degree();
        let factors: Vec<IntPolynomial> = a
            .iter()
            .zip(b)
            .map(|(ai, bi)| IntPolynomial::linear(ai.clone(), bi.clone()))
            .collect();
        let mut out = IntPolynomial::zero();
        for (e, c) in &self.terms {
            let deg: u32 = e.iter().sum();
            let scale = c * q.pow(d - deg);
            let mut term = IntPolynomial::constant(scale);
            for (f, &ei) in factors.iter().zip(e) {
                if ei > 0 {
                    term = &term * &f.pow(ei);
                }
            }
            out = &out + &term;
        }
        out
    }
}

impl From<&MultiAffinePoly> for SparsePoly {
    fn from(p: &MultiAffinePoly) -> Self {
        let k = p.k();
        let terms = p.coeffs().iter().map(|(s, c)| {
            let mut e = vec![0u32; k];
            for i in s.iter() {
                e[i] = 1;
            }
            (e, c.clone())
        });
        SparsePoly::new(k, terms).expect("exponent vectors have length k")
    }
}

/// Variables `z_0, .., z_k`.
impl From<&HomogPoly> for SparsePoly {
    fn from(h: &HomogPoly) -> Self {
        let k = h.k();
        let terms = h.coeffs().iter().map(|(j, c)| {
            let mut e = vec![0u32; k + 1];
            e[0] = h.z0_exponent(*j) as u32;
            for i in j.iter() {
                e[i + 1] = 1;
            }
            (e, c.clone())
        });
        SparsePoly::new(k + 1, terms).expect("exponent vectors have length k + 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn restriction_of_square_plus_one() {
        let f = SparsePoly::new(1, [(vec![2], 1.into()), (vec![0], 1.into())]).unwrap();
        // q = 2, x = 1/2, v = 3/2: 4·((1 + 3t)/2)^2 + 4 = 9t^2 + 6t + 5
        let r = f.line_restriction(&ints(&[1]), &ints(&[3]), &BigInt::from(2));
        assert_eq!(r, IntPolynomial::from_i64s(&[5, 6, 9]));
    }

    #[test]
    fn arity_is_checked() {
        assert!(SparsePoly::new(2, [(vec![1], BigInt::from(1))]).is_err());
    }
}
