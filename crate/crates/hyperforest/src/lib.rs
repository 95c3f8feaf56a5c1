//! Exact counting of spanning hyperforests on complete hypergraphs.
//!
//! The library computes the generating polynomials and exact counts of
//! rooted and unrooted spanning hyperforests of the complete hypergraph
//! on `n` vertices, where a hyperedge of cardinality `k` carries a weight
//! `w_k` depending only on its cardinality.  Everything is exact: counts
//! are big integers, weights and generating-polynomial coefficients are
//! big rationals.
//!
//! Three independent computation routes are provided and cross-checked:
//!
//! * [`counts`]: closed forms built from the polynomial families
//!   `P_s(x)` and `Π_s(λ)` (Bell polynomials, generalized Hermite and
//!   associated Laguerre polynomials in the uniform case);
//! * [`egf`]: truncated exponential generating functions of the rooted
//!   hypertree series `T(z)` solved from its functional equation, with
//!   Lagrange inversion as an internal second route;
//! * [`grassmann`] + [`enumerate`]: a small exact Berezin-integration
//!   engine over `2n` anticommuting generators evaluated literally at
//!   small `n`, against brute-force enumeration of spanning hyperforests.
//!
//! [`asym`] evaluates the large-`n` approximations of the uniform counts
//! in log-domain floating point, for comparison against the exact tables.

pub mod asym;
pub mod counts;
pub mod egf;
pub mod enumerate;
mod error;
pub mod exact;
pub mod grassmann;
pub mod hypergraph;
pub mod special;

pub use counts::{RootedTable, UnrootedTable, WeightSpec};
pub use error::{Error, Result};
pub use exact::{Int, Rat, Ring, TruncatedSeries, UniPoly, Var};
pub use hypergraph::Hypergraph;
