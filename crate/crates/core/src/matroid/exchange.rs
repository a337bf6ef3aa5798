use serde::{Deserialize, Serialize};

use super::SetFamily;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::par::{self, Exec};

/// Why a family is not a delta-matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A ground element in no feasible set.
    Uncovered { element: usize },
    /// Feasible `a`, `b` and `x ∈ a Δ b` such that `a Δ {x, y}` is infeasible
    /// for every `y ∈ a Δ b` (including `y = x`).
    Exchange {
        a: VertexSet,
        b: VertexSet,
        x: usize,
    },
}

/// Above this ground size membership uses binary search instead of a table.
const TABLE_LIMIT: usize = 24;

struct Membership<'a> {
    family: &'a SetFamily,
    table: Option<Vec<bool>>,
}

impl Membership<'_> {
    fn contains(&self, s: VertexSet) -> bool {
        match &self.table {
            Some(t) => t[s.index()],
            None => self.family.contains(s),
        }
    }
}

pub fn is_delta_matroid(f: &SetFamily) -> Result<Option<Witness>> {
    is_delta_matroid_with(f, Exec::default())
}

/// Checks that the family covers the ground set and satisfies the symmetric
/// exchange axiom. Returns the first witness in lexicographic order of
/// `(a, b, x)`, independent of `exec`.
pub fn is_delta_matroid_with(f: &SetFamily, exec: Exec) -> Result<Option<Witness>> {
    if f.is_empty() {
        return Err(Error::invalid("delta-matroid check on an empty family"));
    }
    let covered = f
        .feasible()
        .iter()
        .fold(VertexSet::EMPTY, |acc, s| acc.union(*s));
    if let Some(element) = (0..f.ground_size()).find(|&v| !covered.contains(v)) {
        return Ok(Some(Witness::Uncovered { element }));
    }
    let table = (f.ground_size() <= TABLE_LIMIT).then(|| {
        let mut t = vec![false; 1usize << f.ground_size()];
        for s in f.feasible() {
            t[s.index()] = true;
        }
        t
    });
    let member = Membership { family: f, table };
    let sets = f.feasible();
    Ok(par::find_map_first(exec, sets.len(), |ia| {
        let a = sets[ia];
        sets.iter().find_map(|&b| {
            let diff = a.symmetric_difference(b);
            diff.iter()
                .find(|&x| {
                    !diff.iter().any(|y| {
                        member.contains(a.symmetric_difference(VertexSet::singleton(x).with(y)))
                    })
                })
                .map(|x| Witness::Exchange { a, b, x })
        })
    }))
}
