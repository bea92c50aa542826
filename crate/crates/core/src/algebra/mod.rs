//! Exact integer linear algebra and polynomial arithmetic.

pub mod matrix;
pub mod poly;
pub mod roots;
pub mod spectrum;
pub mod surd;

pub use matrix::BigMatrix;
pub use poly::{poly_divmod, polymod_pow, squarefree_part, IntPoly};
pub use spectrum::{spectrum, Eigenvalue, Spectrum, SpectrumEntry};
pub use surd::{ParseQuadraticError, QuadraticSurd, RealQuadratic};
