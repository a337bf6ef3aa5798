use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{
    line_realroot_check_general, lorentzian_check_with, rayleigh_sample_check, Sampling,
    SparsePoly, StabilityVerdict,
};
use crate::error::Result;
use crate::graph::{complete_multipartite_partition, distance_matrix, Graph};
use crate::linalg::{char_poly, is_psd, IntPolynomial, Rational};
use crate::poly::{blowup_polynomial, MultiAffinePoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StronglyRayleighVerdict {
    /// `(-1)^k · p(-1, .., -1)`.
    pub value_at_minus_ones: String,
    pub value_positive: bool,
    /// Coefficients of `p(-z)/p(-1, .., -1)` are all `≥ 0`.
    pub normalized_nonneg: bool,
    pub normalized_sum_is_one: bool,
    /// Rayleigh sampling on the reflected polynomial.
    pub stability: StabilityVerdict,
    pub passed: bool,
}

/// Exact parts: `(-1)^k·p(-1,..,-1) > 0`, and the normalized reflection
/// `p(-z)/p(-1,..,-1)` has non-negative coefficients summing to one. The
/// reflection's real stability is sampled.
pub fn strongly_rayleigh_normalized_check(
    p: &MultiAffinePoly,
    s: &Sampling,
) -> Result<StronglyRayleighVerdict> {
    let k = p.k();
    let reflected = p.reflected();
    let at_minus_ones: BigInt = reflected.coeffs().values().sum();
    let signed = if k % 2 == 1 {
        -&at_minus_ones
    } else {
        at_minus_ones.clone()
    };
    let value_positive = signed.is_positive();
    let (normalized_nonneg, normalized_sum_is_one) = if at_minus_ones.is_zero() {
        (false, false)
    } else {
        let normalized: Vec<Rational> = reflected
            .coeffs()
            .values()
            .map(|c| Rational::new(c.clone(), at_minus_ones.clone()))
            .collect();
        let sum: Rational = normalized.iter().cloned().sum();
        (
            normalized.iter().all(|c| !c.is_negative()),
            sum == Rational::one(),
        )
    };
    let stability = rayleigh_sample_check(&reflected, s)?;
    let passed = value_positive && normalized_nonneg && normalized_sum_is_one && stability.passed;
    Ok(StronglyRayleighVerdict {
        value_at_minus_ones: signed.to_string(),
        value_positive,
        normalized_nonneg,
        normalized_sum_is_one,
        stability,
        passed,
    })
}

/// The equivalence battery for one graph. The four exact flags are decided;
/// the two `_sampled` flags are evidence only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem4Report {
    pub k: usize,
    pub seed: u64,
    pub samples: usize,
    /// All coefficients of the homogenized polynomial are `≥ 0`.
    pub coeffs_nonneg: bool,
    /// `D + 2·Id` is positive semidefinite.
    pub psd: bool,
    pub multipartite: bool,
    pub lorentzian: bool,
    /// Reported equal to `lorentzian`.
    pub strongly_log_concave: bool,
    /// Reported equal to `lorentzian`.
    pub completely_log_concave: bool,
    /// Line test on the homogenized polynomial found no violation.
    pub homog_stable_sampled: bool,
    pub strongly_rayleigh_sampled: bool,
    /// The four exact flags agree.
    pub consistent: bool,
    /// A sampled check failed although the exact flags are all true.
    pub sampled_contradiction: bool,
}

impl Theorem4Report {
    pub fn exact_flags(&self) -> [bool; 4] {
        [
            self.coeffs_nonneg,
            self.psd,
            self.multipartite,
            self.lorentzian,
        ]
    }
}

pub fn theorem4_report(g: &Graph, s: &Sampling) -> Result<Theorem4Report> {
    let d = distance_matrix(g)?;
    let p = blowup_polynomial(&d)?;
    let h = p.homogenize();
    let coeffs_nonneg = h.all_coeffs_nonneg();
    let psd = is_psd(&d.shifted())?;
    let multipartite = complete_multipartite_partition(g).is_some();
    let lorentzian = if g.order() >= 2 {
        lorentzian_check_with(&h, s.exec)?
    } else {
        // a single positive linear form
        coeffs_nonneg
    };
    let homog_stable_sampled = line_realroot_check_general(&SparsePoly::from(&h), s)?.passed;
    let strongly_rayleigh_sampled = strongly_rayleigh_normalized_check(&p, s)?.passed;
    let consistent = coeffs_nonneg == psd && psd == multipartite && multipartite == lorentzian;
    let sampled_contradiction =
        consistent && coeffs_nonneg && !(homog_stable_sampled && strongly_rayleigh_sampled);
    Ok(Theorem4Report {
        k: g.order(),
        seed: s.seed,
        samples: s.count,
        coeffs_nonneg,
        psd,
        multipartite,
        lorentzian,
        strongly_log_concave: lorentzian,
        completely_log_concave: lorentzian,
        homog_stable_sampled,
        strongly_rayleigh_sampled,
        consistent,
        sampled_contradiction,
    })
}

/// `(u_G(n), (-n)^k·χ_D(2/n - 2))`, the right side expanded as
/// `(-1)^k Σ_j c_j (2 - 2n)^j n^(k-j)` with `χ_D = Σ_j c_j x^j`.
pub fn spectrum_sides(g: &Graph) -> Result<(IntPolynomial, IntPolynomial)> {
    let d = distance_matrix(g)?;
    let k = d.k();
    let u = blowup_polynomial(&d)?.univariate();
    let chi = char_poly(&d.to_matrix());
    let shift = IntPolynomial::from_i64s(&[2, -2]);
    let n = IntPolynomial::from_i64s(&[0, 1]);
    let mut rhs = IntPolynomial::zero();
    for (j, c) in chi.coeffs().iter().enumerate() {
        let term =
            &(&shift.pow(j as u32) * &n.pow((k - j) as u32)) * &IntPolynomial::constant(c.clone());
        rhs = &rhs + &term;
    }
    if k % 2 == 1 {
        rhs = -rhs;
    }
    Ok((u, rhs))
}

pub fn spectrum_correspondence_check(g: &Graph) -> Result<bool> {
    let (u, rhs) = spectrum_sides(g)?;
    Ok(u == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::poly::graph_polynomial;

    fn sampling() -> Sampling {
        Sampling::new(5, 40)
    }

    #[test]
    fn strongly_rayleigh_examples() {
        let s = sampling();
        for g in [Graph::cycle(4), Graph::complete(3)] {
            let v = strongly_rayleigh_normalized_check(&graph_polynomial(&g).unwrap(), &s).unwrap();
            assert!(v.value_positive && v.normalized_nonneg && v.normalized_sum_is_one);
            assert!(v.passed);
        }
        let v = strongly_rayleigh_normalized_check(&graph_polynomial(&Graph::path(4)).unwrap(), &s)
            .unwrap();
        assert!(!v.normalized_nonneg);
        assert!(!v.passed);
    }

    #[test]
    fn reflected_coefficient_sign_for_p4() {
        let p = graph_polynomial(&Graph::path(4)).unwrap();
        let r = p.reflected();
        // reflected coefficient at {0,3}, scaled by the positive (-1)^k p(-1)
        assert!(r.coeff(VertexSet::pair(0, 3)).is_negative());
    }

    #[test]
    fn theorem4_examples() {
        let s = sampling();
        let r = theorem4_report(&Graph::cycle(4), &s).unwrap();
        assert_eq!(r.exact_flags(), [true; 4]);
        assert!(r.consistent && !r.sampled_contradiction);
        assert!(r.homog_stable_sampled && r.strongly_rayleigh_sampled);

        let r = theorem4_report(&Graph::path(4), &s).unwrap();
        assert_eq!(r.exact_flags(), [false; 4]);
        assert!(r.consistent);

        let r = theorem4_report(&Graph::star(3), &s).unwrap();
        assert_eq!(r.exact_flags(), [true; 4]);
        assert_eq!((r.seed, r.samples), (5, 40));
    }

    #[test]
    fn spectrum_examples() {
        let (u, rhs) = spectrum_sides(&Graph::complete(2)).unwrap();
        assert_eq!(u, IntPolynomial::from_i64s(&[4, -8, 3]));
        assert_eq!(u, rhs);
        let (u, rhs) = spectrum_sides(&Graph::path(3)).unwrap();
        assert_eq!(u, IntPolynomial::from_i64s(&[-8, 24, -12]));
        assert_eq!(u, rhs);
        for g in [Graph::cycle(5), Graph::star(4), Graph::complete(1)] {
            assert!(spectrum_correspondence_check(&g).unwrap());
        }
    }
}
