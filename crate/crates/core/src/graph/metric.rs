use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BlowupSpec, Graph};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// How much of the metric axioms to enforce on user-supplied matrices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MetricCheck {
    /// Symmetric, zero diagonal, off-diagonal `>= 1`, triangle inequality.
    #[default]
    Full,
    /// Only symmetry and zero diagonal.
    Relaxed,
}

/// A symmetric integer matrix with zero diagonal: the distance matrix of a
/// connected graph or a user-supplied finite metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    k: usize,
    entries: Vec<BigInt>,
    from_graph: bool,
}

impl DistMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>, check: MetricCheck) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::invalid("distance matrix is empty"));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != k) {
            return Err(Error::invalid(format!("row {i} does not have {k} entries")));
        }
        let entries: Vec<BigInt> = rows.into_iter().flatten().collect();
        let d = DistMatrix {
            k,
            entries,
            from_graph: false,
        };
        d.validate(check)?;
        Ok(d)
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], check: MetricCheck) -> Result<Self> {
        DistMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            check,
        )
    }

    fn validate(&self, check: MetricCheck) -> Result<()> {
        let k = self.k;
        for i in 0..k {
            if !self.get(i, i).is_zero() {
                return Err(Error::invalid(format!("diagonal entry {i} is non-zero")));
            }
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        if check == MetricCheck::Relaxed {
            return Ok(());
        }
        let one = BigInt::one();
        for i in 0..k {
            for j in 0..k {
                if i != j && *self.get(i, j) < one {
                    return Err(Error::invalid(format!(
                        "off-diagonal entry ({i}, {j}) is below 1"
                    )));
                }
                for m in 0..k {
                    if self.get(i, j) > &(self.get(i, m) + self.get(m, j)) {
                        return Err(Error::invalid(format!(
                            "triangle inequality fails for ({i}, {m}, {j})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.k + j]
    }

    /// True when the matrix was computed from a graph by [`distance_matrix`].
    pub fn is_graph_metric(&self) -> bool {
        self.from_graph
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.k, |i, j| self.get(i, j).clone())
    }

    /// `M = D + 2·Id`.
    pub fn shifted(&self) -> IntMatrix {
        let two = BigInt::from(2);
        IntMatrix::from_fn(self.k, |i, j| {
            if i == j {
                self.get(i, j) + &two
            } else {
                self.get(i, j).clone()
            }
        })
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.k).map(|r| r.to_vec()).collect()
    }
}

/// All-pairs shortest-path lengths by BFS.
pub fn distance_matrix(g: &Graph) -> Result<DistMatrix> {
    g.require_connected()?;
    let k = g.order();
    let mut entries = Vec::with_capacity(k * k);
    for v in 0..k {
        entries.extend(
            g.bfs_distances(v)
                .into_iter()
                .map(|d| BigInt::from(d.expect("connected"))),
        );
    }
    Ok(DistMatrix {
        k,
        entries,
        from_graph: true,
    })
}

/// Distance matrix of the blowup, built directly from the base metric:
/// block `(i, j)` is `d_ij` everywhere for `i != j`, and diagonal blocks are
/// `2` off the diagonal and `0` on it. Rows follow the vertex order of
/// [`blowup`](super::blowup).
pub fn blowup_distance_matrix(d: &DistMatrix, spec: &BlowupSpec) -> Result<DistMatrix> {
    if spec.len() != d.k {
        return Err(Error::Arity {
            expected: d.k,
            got: spec.len(),
        });
    }
    let owners = spec.owners();
    let total = owners.len();
    let two = BigInt::from(2);
    let mut entries = Vec::with_capacity(total * total);
    for a in 0..total {
        for b in 0..total {
            let (v, w) = (owners[a], owners[b]);
            entries.push(if a == b {
                BigInt::zero()
            } else if v == w {
                two.clone()
            } else {
                d.get(v, w).clone()
            });
        }
    }
    Ok(DistMatrix {
        k: total,
        entries,
        from_graph: false,
    })
}

/// Parses a distance matrix file: a header line `dist n=<k>` followed by `k`
/// rows of whitespace-separated integers. `#` starts a comment.
pub fn parse_distance_matrix(text: &str, check: MetricCheck) -> Result<DistMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let bad_header = || Error::Parse {
        line: hline,
        msg: format!("expected `dist n=<k>`, got {header:?}"),
    };
    let mut fields = header.split_whitespace();
    if fields.next() != Some("dist") {
        return Err(bad_header());
    }
    let k: usize = fields
        .next()
        .and_then(|f| f.strip_prefix("n="))
        .and_then(|v| v.parse().ok())
        .ok_or_else(bad_header)?;
    let mut rows = Vec::with_capacity(k);
    for (line, text) in lines {
        let row: Vec<BigInt> = text
            .split_whitespace()
            .map(|t| t.parse::<BigInt>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse {
                line,
                msg: e.to_string(),
            })?;
        if row.len() != k {
            return Err(Error::Parse {
                line,
                msg: format!("expected {k} entries, got {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Error::Parse {
            line: hline,
            msg: format!("expected {k} rows, got {}", rows.len()),
        });
    }
    DistMatrix::from_rows(rows, check)
}
