//! First order differential calculi over Hopf π-coalgebras, realised as
//! quotients `Γ_α = A²_α / N_α` of the universal calculus.

mod adjoint;
mod calculus;
mod coaction;
mod covariance;
mod enumerate;
mod ideal;

pub use adjoint::{
    ad_map, check_ad_coassociative, check_ad_invariant, check_ad_multiplicative, is_ad_invariant, AD_COASSOCIATIVE,
    AD_INVARIANT, AD_MULTIPLICATIVE,
};
pub use calculus::{calculus_from_ideal, calculus_from_ideal_right, Construction, Fodc, GammaSpace, LEIBNIZ, SURJECTIVE, UNIT_CLOSED};
pub use coaction::{
    check_phi_identities, phi_l, phi_r, r_inv, r_map, t_inv, t_map, universal_differential, universal_kernel,
    R_FROM_PHI_L, R_INTERTWINES_PHI_L, T_FROM_PHI_R, T_INTERTWINES_PHI_R,
};
pub use covariance::{
    check_bicovariant, check_left_covariant, check_right_covariant, covariant_bimodule, delta_l_by_formula,
    delta_r_by_formula, induced_delta_l, induced_delta_r, is_left_covariant, is_right_covariant, LEFT_COVARIANT,
    LEFT_FORMULA, LEFT_INTERTWINES_D, RIGHT_COVARIANT, RIGHT_FORMULA, RIGHT_INTERTWINES_D,
};
pub use enumerate::{enumerate_right_ideals, DEFAULT_MAX_DIM};
pub use ideal::{counit_kernel, ideal_from_calculus, RightIdeal};
