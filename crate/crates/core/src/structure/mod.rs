//! Invariant frames of covariant bimodules and the data they determine:
//! the commutation functionals `f_ij`, `g_ij`, the matrix elements `R_ij`,
//! and the free bimodule rebuilt from `(f, R)`.

mod coefficients;
mod frames;
mod functionals;
mod reconstruct;
pub mod verify;

pub use coefficients::{eta_frames, eta_from, matrix_r, r_from_frames, RMatrix};
pub use frames::{invariant_subspace_left, invariant_subspace_right, left_frames, projection_p, Frame};
pub use functionals::{
    commutation, functional_star, functionals_f, functionals_g, functionals_from_frames, star_functional,
    FunctionalMatrix,
};
pub use reconstruct::{
    check_isomorphic, reconstruct, MATCHES_LEFT_ACTION, MATCHES_LEFT_COACTION, MATCHES_RIGHT_ACTION,
    MATCHES_RIGHT_COACTION,
};
pub use verify::{compare_f_and_g, verify_structure, StructureData};
