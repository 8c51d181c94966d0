//! Constructions of the generalized quadrangle GQ(2,4) on the 27 invertible
//! non-identity symmetric 3×3 binary matrices, and exhaustive checks of its
//! models: a quadric in PG(5,2), the matrix set with determinant
//! collinearity, planes `(X|1)` of PG(5,2), and the doily with its double-six.

pub mod atlas;
pub mod checks;
pub mod error;
pub mod export;
pub mod gf2;
pub mod projective;
pub mod quadrangle;
pub mod planes;
pub mod report;

pub use error::{GqError, Result};
