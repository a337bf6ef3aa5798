use num_bigint::BigInt;
use num_traits::{Pow, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::SparsePoly;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::linalg::{sturm_is_real_rooted, Rational};
use crate::par::{self, Exec};
use crate::poly::MultiAffinePoly;

/// Half-width of the sampling box.
pub const DEFAULT_BOX: i64 = 10;
/// Default number of sample points.
pub const DEFAULT_SAMPLES: usize = 200;
/// Sample coordinates are multiples of `1/DEFAULT_DENOMINATOR`.
pub const DEFAULT_DENOMINATOR: i64 = 4;

/// Seeded sampling parameters. Points are drawn from `ChaCha8` in sample
/// order before any evaluation, so results do not depend on `exec`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampling {
    pub seed: u64,
    pub count: usize,
    pub bound: i64,
    pub denominator: i64,
    #[serde(skip)]
    pub exec: Exec,
}

impl Sampling {
    pub fn new(seed: u64, count: usize) -> Self {
        Sampling {
            seed,
            count,
            bound: DEFAULT_BOX,
            denominator: DEFAULT_DENOMINATOR,
            exec: Exec::default(),
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::invalid("sample count must be at least 1"));
        }
        if self.bound < 1 || self.denominator < 1 {
            return Err(Error::invalid(
                "sampling box and denominator must be positive",
            ));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Numerators in `[-B·q, B·q]`.
    fn box_point(&self, rng: &mut ChaCha8Rng, k: usize) -> Vec<BigInt> {
        let m = self.bound * self.denominator;
        (0..k)
            .map(|_| BigInt::from(rng.random_range(-m..=m)))
            .collect()
    }

    /// Numerators in `[1, B·q]`.
    fn positive_point(&self, rng: &mut ChaCha8Rng, k: usize) -> Vec<BigInt> {
        let m = self.bound * self.denominator;
        (0..k)
            .map(|_| BigInt::from(rng.random_range(1..=m)))
            .collect()
    }

    fn as_rationals(&self, nums: &[BigInt]) -> Vec<String> {
        let q = BigInt::from(self.denominator);
        nums.iter()
            .map(|a| Rational::new(a.clone(), q.clone()).to_string())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub sample: usize,
    /// 0-based variable pair for the Rayleigh test; absent for the line test.
    pub pair: Option<(usize, usize)>,
    pub point: Vec<String>,
    /// Line direction for the line test.
    pub direction: Option<Vec<String>>,
    /// The negative Rayleigh difference, or the restricted polynomial.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub passed: bool,
    pub seed: u64,
    pub samples_checked: usize,
    /// Line restrictions that were constant and so carry no information.
    pub skipped: usize,
    pub first_violation: Option<Violation>,
}

/// `Σ_{S⊇T} c_S · q^(k-|S|) · ∏_{l∈S∖T} a_l`, i.e. `q^(k-|T|)·(∂_T p)(a/q)`.
fn scaled_derivative(p: &MultiAffinePoly, t: VertexSet, a: &[BigInt], qpow: &[BigInt]) -> BigInt {
    let k = p.k();
    p.coeffs()
        .iter()
        .filter(|(s, _)| t.is_subset(**s))
        .map(|(s, c)| {
            s.difference(t)
                .iter()
                .fold(c * &qpow[k - s.len()], |acc, l| acc * &a[l])
        })
        .sum()
}

/// Checks `∂_i p · ∂_j p - p · ∂_i∂_j p ≥ 0` for every pair `i < j` at
/// seeded rational points of `[-B, B]^k`. All arithmetic is exact: each
/// difference is scaled by `q^(2k-2)`, which keeps its sign.
pub fn rayleigh_sample_check(p: &MultiAffinePoly, s: &Sampling) -> Result<StabilityVerdict> {
    s.validate()?;
    let k = p.k();
    let mut rng = s.rng();
    let points: Vec<Vec<BigInt>> = (0..s.count).map(|_| s.box_point(&mut rng, k)).collect();
    let q = BigInt::from(s.denominator);
    let qpow: Vec<BigInt> = (0..=k).map(|e| q.clone().pow(e as u32)).collect();

    let outcomes = par::map_indices(s.exec, points.len(), |idx| {
        let a = &points[idx];
        let d0 = scaled_derivative(p, VertexSet::EMPTY, a, &qpow);
        let d1: Vec<BigInt> = (0..k)
            .map(|i| scaled_derivative(p, VertexSet::singleton(i), a, &qpow))
            .collect();
        for i in 0..k {
            for j in i + 1..k {
                let dij = scaled_derivative(p, VertexSet::pair(i, j), a, &qpow);
                let delta = &d1[i] * &d1[j] - &d0 * dij;
                if delta.is_negative() {
                    let scale = q.clone().pow((2 * k - 2) as u32);
                    return Some(Violation {
                        sample: idx,
                        pair: Some((i, j)),
                        point: s.as_rationals(a),
                        direction: None,
                        value: Rational::new(delta, scale).to_string(),
                    });
                }
            }
        }
        None
    });
    let first_violation = outcomes.into_iter().flatten().next();
    Ok(StabilityVerdict {
        passed: first_violation.is_none(),
        seed: s.seed,
        samples_checked: s.count,
        skipped: 0,
        first_violation,
    })
}

enum LineOutcome {
    RealRooted,
    Constant,
    Violation(Violation),
}

/// Restricts `f` to seeded lines `x + t·v` with `x ∈ [-B, B]^k` and
/// `v ∈ (0, B]^k` and checks each restriction is real-rooted by Sturm's
/// theorem. Constant restrictions are skipped and counted.
pub fn line_realroot_check_general(f: &SparsePoly, s: &Sampling) -> Result<StabilityVerdict> {
    s.validate()?;
    let k = f.nvars();
    let mut rng = s.rng();
    let lines: Vec<(Vec<BigInt>, Vec<BigInt>)> = (0..s.count)
        .map(|_| {
            let x = s.box_point(&mut rng, k);
            let v = s.positive_point(&mut rng, k);
            (x, v)
        })
        .collect();
    let q = BigInt::from(s.denominator);

    let outcomes = par::map_slice(s.exec, &lines, |(x, v)| {
        let r = f.line_restriction(x, v, &q);
        if r.degree().unwrap_or(0) == 0 {
            return Ok(LineOutcome::Constant);
        }
        if sturm_is_real_rooted(&r)? {
            Ok(LineOutcome::RealRooted)
        } else {
            Ok(LineOutcome::Violation(Violation {
                sample: 0,
                pair: None,
                point: s.as_rationals(x),
                direction: Some(s.as_rationals(v)),
                value: r.display_with("t"),
            }))
        }
    });
    let mut skipped = 0;
    let mut first_violation = None;
    for (idx, outcome) in outcomes.into_iter().enumerate() {
        match outcome? {
            LineOutcome::RealRooted => {}
            LineOutcome::Constant => skipped += 1,
            LineOutcome::Violation(mut v) => {
                if first_violation.is_none() {
                    v.sample = idx;
                    first_violation = Some(v);
                }
            }
        }
    }
    Ok(StabilityVerdict {
        passed: first_violation.is_none(),
        seed: s.seed,
        samples_checked: s.count,
        skipped,
        first_violation,
    })
}

pub fn line_realroot_check(p: &MultiAffinePoly, s: &Sampling) -> Result<StabilityVerdict> {
    line_realroot_check_general(&SparsePoly::from(p), s)
}
