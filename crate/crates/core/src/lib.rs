//! Exact computation of graph blowup-polynomials and the properties built on
//! them.
//!
//! For a connected graph `G` on `k` vertices with distance matrix `D` and
//! `M = D + 2·Id`, the blowup-polynomial is the multi-affine integer
//! polynomial `p_G(n) = det(diag(n)·M - 2·Id)`. Its coefficient at the
//! monomial `∏_{i∈I} n_i` is `(-2)^(k-|I|)·det M[I, I]`, and it satisfies
//! `det D_{G[n]} = (-2)^(Σ(n_v - 1))·p_G(n)` for every blowup `G[n]`.
//!
//! * [`graph`]: graphs, metrics, blowups, isomorphism, corpus enumeration
//! * [`linalg`]: Bareiss determinants, minors, characteristic polynomials,
//!   inertia, Sturm sequences
//! * [`poly`]: the polynomial engine (construction, evaluation,
//!   homogenization, restriction, recovery, symmetries, closed forms)
//! * [`stability`]: sampled real-stability certificates and the exact
//!   Lorentzian / PSD / multipartite battery
//! * [`matroid`]: set families and delta-matroid verification
//! * [`reproduce`]: the bundled reproduction checks run by `blowup reproduce`

pub mod error;
pub mod graph;
pub mod linalg;
pub mod matroid;
pub mod par;
pub mod poly;
pub mod reproduce;
pub mod stability;

pub use error::{Error, Result};
pub use par::{Config, Exec};
