//! Exact linear algebra over `Q` and `F_p`.
//!
//! Subspaces are stored in reduced row echelon form, so equal subspaces have
//! bit-identical bases and quotients get reproducible coordinates.

mod echelon;
mod matrix;
mod scalar;
mod vector;

pub use echelon::{flip, image, inverse, kernel, permute_factors, rank, rref, solve_unique, Quotient, Subspace};
pub use matrix::{Matrix, RowIter};
pub use scalar::{Field, Scalar};
pub use vector::Vector;
