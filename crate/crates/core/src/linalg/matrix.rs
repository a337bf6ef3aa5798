use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::par::{self, Config};

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("matrix is not square"));
        }
        Ok(IntMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix::from_fn(n, |i, j| BigInt::from(u8::from(i == j)))
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix::from_fn(n, |_, _| BigInt::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.n + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.data
            .chunks(self.n.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Principal submatrix on the rows and columns in `s`.
    pub fn submatrix(&self, s: VertexSet) -> IntMatrix {
        let idx: Vec<usize> = s.iter().collect();
        IntMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    #[must_use]
    pub fn add_scaled_identity(&self, c: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| {
            if i == j {
                self.get(i, j) + c
            } else {
                self.get(i, j).clone()
            }
        })
    }

    #[must_use]
    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.get(i, j) * c)
    }

    #[must_use]
    pub fn entrywise_square(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.get(i, j) * self.get(i, j))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        IntMatrix::from_fn(self.n, |i, j| {
            (0..self.n).map(|m| self.get(i, m) * other.get(m, j)).sum()
        })
    }

    fn to_i128(&self) -> Option<Vec<i128>> {
        self.data.iter().map(|x| x.to_i128()).collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Runs in `i128` with checked arithmetic and restarts in `BigInt` on the
/// first overflow. Every intermediate value is a minor of the input, so the
/// exact divisions never truncate.
pub fn determinant(m: &IntMatrix) -> BigInt {
    if let Some(d) = m.to_i128().and_then(|a| bareiss_i128(a, m.n)) {
        return BigInt::from(d);
    }
    bareiss_big(m.data.clone(), m.n)
}

fn bareiss_i128(mut a: Vec<i128>, n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i * n + k] != 0) else {
                return Some(0);
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let aik = a[i * n + k];
            for j in k + 1..n {
                let lhs = a[i * n + j].checked_mul(pivot)?;
                let rhs = aik.checked_mul(a[k * n + j])?;
                let num = lhs.checked_sub(rhs)?;
                debug_assert_eq!(num % prev, 0);
                a[i * n + j] = num / prev;
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1];
    Some(if negate { -d } else { d })
}

fn bareiss_big(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = a[i * n + k].clone();
            for j in k + 1..n {
                let num = &a[i * n + j] * &pivot - &aik * &a[k * n + j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i * n + j] = q;
            }
        }
        prev = pivot;
    }
    let d = a.pop().expect("non-empty");
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of the principal submatrix on `s`; the empty minor is 1.
pub fn principal_minor(m: &IntMatrix, s: VertexSet) -> Result<BigInt> {
    if m.n < 64 && !s.is_subset(VertexSet::full(m.n)) {
        return Err(Error::invalid(format!(
            "{s} is not a subset of the {} indices",
            m.n
        )));
    }
    Ok(determinant(&m.submatrix(s)))
}

/// Every principal minor, indexed by the bit pattern of the subset.
pub fn all_principal_minors(m: &IntMatrix) -> Result<Vec<BigInt>> {
    all_principal_minors_with(m, &Config::default())
}

pub fn all_principal_minors_with(m: &IntMatrix, cfg: &Config) -> Result<Vec<BigInt>> {
    let cap = cfg.max_poly_k.min(30);
    if m.n > cap {
        return Err(Error::Capacity {
            what: "principal-minor table",
            requested: m.n,
            cap,
        });
    }
    Ok(par::map_indices(cfg.exec, 1usize << m.n, |bits| {
        determinant(&m.submatrix(VertexSet::from_bits(bits as u64)))
    }))
}

/// `det(x·Id - m)` by the Faddeev–LeVerrier recurrence.
///
/// With `N_0 = Id` and `c_n = 1`: `c_{n-j} = -tr(m·N_{j-1}) / j` and
/// `N_j = m·N_{j-1} + c_{n-j}·Id`. Each division is checked to be exact.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.n;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc = IntMatrix::identity(n);
    for j in 1..=n {
        let prod = m.mul(&acc);
        let (c, r) = (-prod.trace()).div_rem(&BigInt::from(j));
        assert!(r.is_zero(), "Faddeev-LeVerrier division by {j} not exact");
        acc = prod.add_scaled_identity(&c);
        coeffs[n - j] = c;
    }
    IntPolynomial::new(coeffs)
}

/// Signs of the eigenvalues of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Eigenvalue sign counts, read off the characteristic polynomial.
///
/// A symmetric matrix has a real-rooted characteristic polynomial, and for
/// real-rooted polynomials Descartes' rule of signs is exact: the number of
/// positive roots equals the sign variations of the coefficients, the number
/// of negative roots those of `p(-x)`, and the zero root has multiplicity
/// equal to the number of vanishing low-order coefficients.
pub fn inertia(m: &IntMatrix) -> Result<Inertia> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let p = char_poly(m);
    let coeffs = p.coeffs();
    let zero = coeffs.iter().take_while(|c| c.is_zero()).count();
    let rest = &coeffs[zero..];
    let positive = sign_variations(rest.iter().map(|c| c.signum()));
    let negative = sign_variations(rest.iter().enumerate().map(|(i, c)| {
        if i % 2 == 1 {
            -c.signum()
        } else {
            c.signum()
        }
    }));
    debug_assert_eq!(positive + negative + zero, m.n);
    Ok(Inertia {
        positive,
        negative,
        zero,
    })
}

pub(crate) fn sign_variations(signs: impl Iterator<Item = BigInt>) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for s in signs.filter(|s| !s.is_zero()) {
        let pos = s.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

/// Positive semidefiniteness by the all-principal-minors criterion.
pub fn is_psd(m: &IntMatrix) -> Result<bool> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if m.n > 30 {
        return Err(Error::Capacity {
            what: "PSD minor test",
            requested: m.n,
            cap: 30,
        });
    }
    Ok((0..1u64 << m.n)
        .all(|bits| !determinant(&m.submatrix(VertexSet::from_bits(bits))).is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance_matrix, Graph};
    use crate::linalg::eval_rational;
    use num_traits::Pow;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn m_of(g: &Graph) -> IntMatrix {
        distance_matrix(g).unwrap().shifted()
    }

    /// Laplace expansion along the first row; independent of elimination.
    fn cofactor_det(m: &IntMatrix) -> BigInt {
        let n = m.n();
        if n == 0 {
            return BigInt::one();
        }
        (0..n)
            .map(|j| {
                let rest: VertexSet = (1..n).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let minor = IntMatrix::from_fn(n - 1, |r, c| {
                    m.get(rest.iter().nth(r).unwrap(), cols[c]).clone()
                });
                let term = m.get(0, j) * cofactor_det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&IntMatrix::identity(3)), big(1));
        let m = IntMatrix::from_i64_rows(&[&[2, 3], &[3, 2]]).unwrap();
        assert_eq!(determinant(&m), big(-5));
        assert_eq!(determinant(&m_of(&Graph::path(9))), big(0));
        assert_eq!(determinant(&IntMatrix::zeros(0)), big(1));
    }

    #[test]
    fn determinant_needs_pivoting() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]).unwrap();
        assert_eq!(determinant(&m), cofactor_det(&m));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big_entry: BigInt = BigInt::from(1u64) << 70usize;
        let m = IntMatrix::from_fn(3, |i, j| if i == j { big_entry.clone() } else { big(1) });
        assert_eq!(determinant(&m), cofactor_det(&m));
        let near = BigInt::from(i128::MAX / 4);
        let m = IntMatrix::from_fn(2, |i, j| if i == j { near.clone() } else { big(3) });
        assert_eq!(determinant(&m), cofactor_det(&m));
    }

    #[test]
    fn principal_minor_examples() {
        let m = m_of(&Graph::path(3));
        assert_eq!(principal_minor(&m, VertexSet::EMPTY).unwrap(), big(1));
        assert_eq!(principal_minor(&m, VertexSet::pair(0, 2)).unwrap(), big(0));
        let m4 = m_of(&Graph::path(4));
        assert_eq!(
            principal_minor(&m4, VertexSet::pair(0, 3)).unwrap(),
            big(-5)
        );
        assert!(principal_minor(&m, VertexSet::singleton(5)).is_err());
    }

    #[test]
    fn minor_table_examples() {
        let t = all_principal_minors(&IntMatrix::identity(2)).unwrap();
        assert_eq!(t, vec![big(1); 4]);

        // M_{K_3} = J + Id: minors are |S| + 1, matching the cofactor oracle.
        let m = m_of(&Graph::complete(3));
        let t = all_principal_minors(&m).unwrap();
        for bits in 0..8u64 {
            let s = VertexSet::from_bits(bits);
            assert_eq!(t[bits as usize], big(s.len() as i64 + 1));
            assert_eq!(t[bits as usize], cofactor_det(&m.submatrix(s)));
        }

        let t = all_principal_minors(&m_of(&Graph::cycle(4))).unwrap();
        assert!(t.iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn minor_table_capacity() {
        let cfg = Config {
            max_poly_k: 3,
            ..Config::default()
        };
        assert!(matches!(
            all_principal_minors_with(&IntMatrix::identity(4), &cfg),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn minor_table_matches_single_minors() {
        for g in [Graph::path(6), Graph::cycle(7), Graph::star(5)] {
            let m = m_of(&g);
            let seq = all_principal_minors_with(&m, &Config::sequential()).unwrap();
            let par = all_principal_minors(&m).unwrap();
            assert_eq!(seq, par);
            for (bits, v) in seq.iter().enumerate() {
                let s = VertexSet::from_bits(bits as u64);
                assert_eq!(*v, principal_minor(&m, s).unwrap());
            }
        }
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            char_poly(&IntMatrix::identity(2)),
            IntPolynomial::from_i64s(&[1, -2, 1])
        );
        let d = distance_matrix(&Graph::complete(2)).unwrap().to_matrix();
        assert_eq!(char_poly(&d), IntPolynomial::from_i64s(&[-1, 0, 1]));
        let d = distance_matrix(&Graph::path(3)).unwrap().to_matrix();
        assert_eq!(char_poly(&d), IntPolynomial::from_i64s(&[-4, -6, 0, 1]));
    }

    #[test]
    fn inertia_examples() {
        let i3 = inertia(&IntMatrix::identity(3)).unwrap();
        assert_eq!((i3.positive, i3.negative, i3.zero), (3, 0, 0));
        let m = IntMatrix::from_i64_rows(&[&[0, 3], &[3, 0]]).unwrap();
        let i = inertia(&m).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
        let h = IntMatrix::from_i64_rows(&[&[8, 4, 4], &[4, 0, 3], &[4, 3, 0]]).unwrap();
        let i = inertia(&h).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 2, 0));
        let singular = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]).unwrap();
        let i = inertia(&singular).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 0, 1));
        let asym = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 1]]).unwrap();
        assert_eq!(inertia(&asym), Err(Error::NotSymmetric));
    }

    #[test]
    fn psd_examples() {
        assert!(is_psd(&IntMatrix::identity(3)).unwrap());
        assert!(is_psd(&m_of(&Graph::cycle(4))).unwrap());
        assert!(!is_psd(&m_of(&Graph::path(4))).unwrap());
        let asym = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 1]]).unwrap();
        assert_eq!(is_psd(&asym), Err(Error::NotSymmetric));
    }

    fn small_matrix(max_n: usize) -> impl Strategy<Value = IntMatrix> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(-9i64..=9, n * n)
                .prop_map(move |v| IntMatrix::from_fn(n, |i, j| BigInt::from(v[i * n + j])))
        })
    }

    fn symmetric_matrix(max_n: usize) -> impl Strategy<Value = IntMatrix> {
        small_matrix(max_n)
            .prop_map(|m| IntMatrix::from_fn(m.n(), |i, j| m.get(i.min(j), i.max(j)).clone()))
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(m in small_matrix(5)) {
            prop_assert_eq!(determinant(&m), cofactor_det(&m));
        }

        #[test]
        fn char_poly_matches_determinant(
            m in small_matrix(5),
            xs in proptest::collection::vec((-20i64..20, 1i64..6), 5),
        ) {
            // At x = a/b: b^n·det(x·Id - m) = det(a·Id - b·m).
            let p = char_poly(&m);
            for (a, b) in xs {
                let x = super::super::Rational::new(big(a), big(b));
                let lhs = eval_rational(&p, &x) * super::super::Rational::from_integer(big(b).pow(m.n() as u32));
                let rhs = determinant(&m.scale(&big(-b)).add_scaled_identity(&big(a)));
                prop_assert_eq!(lhs, super::super::Rational::from_integer(rhs));
            }
        }

        #[test]
        fn inertia_sums_and_psd_agree(m in symmetric_matrix(5)) {
            let i = inertia(&m).unwrap();
            prop_assert_eq!(i.positive + i.negative + i.zero, m.n());
            prop_assert_eq!(is_psd(&m).unwrap(), i.negative == 0);
        }

        #[test]
        fn symmetric_char_poly_is_real_rooted(m in symmetric_matrix(5)) {
            prop_assume!(m.n() > 0);
            prop_assert!(crate::linalg::sturm_is_real_rooted(&char_poly(&m)).unwrap());
        }
    }
}
