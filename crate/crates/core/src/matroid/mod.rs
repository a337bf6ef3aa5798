//! Set families over a finite ground set and delta-matroid verification.
//!
//! The empty set is feasible in every family built here: the constant term
//! of a blowup-polynomial is `(-2)^k ≠ 0`, and the Steiner rule is vacuous.

mod exchange;
mod families;

pub use exchange::{is_delta_matroid, is_delta_matroid_with, Witness};
pub use families::{
    blowup_support_family, blowup_support_family_with, matroid_prime, matroid_prime_with,
    path_rhs_family, support_family, tree_blowup_matroid, PrimeKind,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexSet, MAX_VERTICES};

/// A family of subsets of `{0, .., ground_size-1}`, sorted and without
/// repeats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFamily")]
pub struct SetFamily {
    ground_size: usize,
    feasible: Vec<VertexSet>,
}

#[derive(Deserialize)]
struct RawFamily {
    ground_size: usize,
    feasible: Vec<VertexSet>,
}

impl TryFrom<RawFamily> for SetFamily {
    type Error = Error;
    fn try_from(raw: RawFamily) -> Result<Self> {
        SetFamily::new(raw.ground_size, raw.feasible)
    }
}

impl SetFamily {
    pub fn new(ground_size: usize, sets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if ground_size > MAX_VERTICES {
            return Err(Error::invalid(format!("ground set of size {ground_size}")));
        }
        let ground = VertexSet::full(ground_size);
        let mut feasible: Vec<VertexSet> = sets.into_iter().collect();
        if let Some(bad) = feasible.iter().find(|s| !s.is_subset(ground)) {
            return Err(Error::invalid(format!(
                "{bad} is not a subset of a ground set of size {ground_size}"
            )));
        }
        feasible.sort_unstable();
        feasible.dedup();
        Ok(SetFamily {
            ground_size,
            feasible,
        })
    }

    /// Every subset of the ground set.
    pub fn power_set(ground_size: usize) -> Self {
        SetFamily {
            ground_size,
            feasible: VertexSet::full(ground_size).subsets().collect(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn feasible(&self) -> &[VertexSet] {
        &self.feasible
    }

    pub fn len(&self) -> usize {
        self.feasible.len()
    }

    pub fn is_empty(&self) -> bool {
        self.feasible.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.feasible.binary_search(&s).is_ok()
    }

    /// Subsets of the ground set that are not feasible, ascending.
    pub fn infeasible(&self) -> Vec<VertexSet> {
        VertexSet::full(self.ground_size)
            .subsets()
            .filter(|s| !self.contains(*s))
            .collect()
    }
}

/// Symmetric difference of two families on the same ground set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDiff {
    pub only_in_first: Vec<VertexSet>,
    pub only_in_second: Vec<VertexSet>,
}

impl FamilyDiff {
    pub fn is_empty(&self) -> bool {
        self.only_in_first.is_empty() && self.only_in_second.is_empty()
    }

    /// The first family is a proper subfamily of the second.
    pub fn first_is_strict_subset(&self) -> bool {
        self.only_in_first.is_empty() && !self.only_in_second.is_empty()
    }
}

pub fn compare_families(a: &SetFamily, b: &SetFamily) -> Result<FamilyDiff> {
    if a.ground_size != b.ground_size {
        return Err(Error::Arity {
            expected: a.ground_size,
            got: b.ground_size,
        });
    }
    Ok(FamilyDiff {
        only_in_first: a
            .feasible
            .iter()
            .copied()
            .filter(|s| !b.contains(*s))
            .collect(),
        only_in_second: b
            .feasible
            .iter()
            .copied()
            .filter(|s| !a.contains(*s))
            .collect(),
    })
}
