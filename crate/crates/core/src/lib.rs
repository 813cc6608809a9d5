//! Spectral analysis of signed weighted graph Laplacians.
//!
//! A [`SignedGraph`] carries black (positive) and red (negative) edges. Red
//! edge magnitudes are treated as variables `t_1..t_R`; the crate computes
//!
//! - the exact spectral index (inertia) of the Laplacian and its limits as
//!   red weights go to zero or infinity ([`spectral`]),
//! - the multilinear crossing polynomial whose zero set is exactly where an
//!   extra zero eigenvalue appears, and its roots along rays ([`crossing`]),
//! - discriminants that measure eigenvalue level repulsion, together with
//!   the spanning-forest, all-minors and cycle-space identities behind them,
//!   and the wildcard test for full factorization ([`discriminants`]),
//! - an l1 stability certificate ([`stability`]),
//! - Monte Carlo statistics over random `G(N, M)` graphs with two red edges
//!   ([`ensemble`]).
//!
//! All combinatorial quantities are computed with exact rationals. Floats
//! only appear where a quantity is intrinsically approximate (eigenvalues,
//! irrational root midpoints, the gap).
//!
//! ```
//! use signlap::{parse_graph, crossing, discriminants};
//!
//! // K_4 with two red edges sharing vertex 0.
//! let g = parse_graph(r#"{"n":4,"edges":[
//!     {"u":0,"v":1,"w":"-1"},{"u":0,"v":2,"w":"-1"},{"u":0,"v":3,"w":"1"},
//!     {"u":1,"v":2,"w":"1"},{"u":1,"v":3,"w":"1"},{"u":2,"v":3,"w":"1"}]}"#).unwrap();
//! let p = crossing::coefficients(&g).unwrap();
//! let delta = discriminants::discriminant2(&p).unwrap();
//! assert_eq!(delta, signlap::Rational::from_integer((-16).into()));
//! ```

pub mod cli;
pub mod crossing;
pub mod discriminants;
pub mod enumerate;
pub mod ensemble;
mod error;
pub mod exact;
pub mod graph;
pub mod poly;
pub mod spectral;
pub mod stability;

pub use crate::crossing::CrossingPolynomial;
pub use crate::error::{Error, Result};
pub use crate::exact::{parse_rational, Rational, RationalMatrix};
pub use crate::graph::{parse_graph, ComponentCounts, Edge, Minor, SignedGraph};
pub use crate::spectral::SpectralIndex;
