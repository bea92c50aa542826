//! Exact tools for strongly walk-regular graphs.
//!
//! A graph is strongly `l`-walk-regular with parameters `(lambda, mu, nu)`
//! when the number of walks of length `l` between two vertices is `lambda`
//! for adjacent pairs, `mu` for distinct non-adjacent pairs and `nu` from a
//! vertex to itself. This crate decides the property exactly, classifies
//! the graphs that can have it, builds the standard example families, and
//! explores the eigenvalue conditions for regular graphs with four distinct
//! eigenvalues. All arithmetic is over arbitrary-precision integers or
//! rationals.

pub mod algebra;
pub mod error;
pub mod graph;
pub mod search;
pub mod swr;

pub use algebra::{BigMatrix, IntPoly, QuadraticSurd, Spectrum};
pub use error::{AlgebraError, FamilyError, Graph6Error, SearchError, SwrError};
pub use graph::families::{construct_family, Family};
pub use graph::graph6::{parse_graph6, write_graph6};
pub use graph::Graph;
