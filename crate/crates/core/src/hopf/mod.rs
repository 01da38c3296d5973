//! Hopf π-coalgebras: families of algebras `H_α` indexed by a finite group,
//! with comultiplications `Δ_{α,β}: H_{αβ} -> H_α ⊗ H_β`, a counit on `H_1`
//! and antipodes `S_α: H_α -> H_{α⁻¹}`.

mod algebra;
mod coalgebra;
mod convolution;
mod families;
pub mod verify;

pub use algebra::Algebra;
pub use coalgebra::{HopfPiCoalgebra, PiCoalgebra};
pub use convolution::{convolution, convolution_unit, iterated_comult, iterated_comult_matrix, Bracketing, GradedMap};
pub use families::{constant_family, group_algebra, inversion, sweedler, sweedler_scaling, twisted_family};
pub use verify::{verify_hopf, verify_pi_coalgebra};
