use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::hopf::HopfPiCoalgebra;
use crate::linalg::{flip, kernel, permute_factors, Matrix, Subspace};
use crate::report::VerificationReport;

/// `A²_α = ker m_α ⊆ A_α ⊗ A_α`.
pub fn universal_kernel(h: &HopfPiCoalgebra, a: GroupElement) -> Subspace {
    kernel(h.mult(a))
}

/// `D(b) = 1 ⊗ b - b ⊗ 1`, as a map `A_α -> A_α ⊗ A_α`.
pub fn universal_differential(h: &HopfPiCoalgebra, a: GroupElement) -> Matrix {
    let unit = h.algebra(a).unit_matrix();
    let id = h.id(a);
    unit.kron(&id).sub(&id.kron(&unit)).expect("same shape")
}

/// `(Δ ⊗ Δ)(x ⊗ y)` regrouped as `x₁ ⊗ y₁ ⊗ x₂ ⊗ y₂ ∈ A_α ⊗ A_α ⊗ A_β ⊗ A_β`.
pub(crate) fn regrouped_double_comult(h: &HopfPiCoalgebra, a: GroupElement, b: GroupElement) -> Matrix {
    let (da, db) = (h.dim(a), h.dim(b));
    let delta = h.comult(a, b);
    let shuffle = permute_factors(h.field(), &[da, db, da, db], &[0, 2, 1, 3]);
    shuffle.mul(&delta.kron(delta)).expect("shapes agree")
}

fn check_codomain(h: &HopfPiCoalgebra, ab: GroupElement, phi: &Matrix, test: &Matrix, what: &str) -> Result<()> {
    for (k, q) in universal_kernel(h, ab).basis().iter().enumerate() {
        let image = test.mul(phi)?.apply(q)?;
        if !image.is_zero() {
            return Err(Error::CodomainViolation(format!("{what} of basis vector {k} of A² leaves its codomain")));
        }
    }
    Ok(())
}

/// `Φ^l_{α,β}(x ⊗ y) = x₁y₁ ⊗ x₂ ⊗ y₂`, a map `A_{αβ} ⊗ A_{αβ} -> A_α ⊗ A_β ⊗ A_β`
/// sending `A²_{αβ}` into `A_α ⊗ A²_β`.
pub fn phi_l(h: &HopfPiCoalgebra, a: GroupElement, b: GroupElement) -> Result<Matrix> {
    let db = h.dim(b);
    let phi = h.mult(a).kron(&Matrix::identity(h.field(), db * db)).mul(&regrouped_double_comult(h, a, b))?;
    let test = h.id(a).kron(h.mult(b));
    check_codomain(h, h.mul_g(a, b), &phi, &test, "left coaction")?;
    Ok(phi)
}

/// `Φ^r_{α,β}(x ⊗ y) = x₁ ⊗ y₁ ⊗ x₂y₂`, a map `A_{αβ} ⊗ A_{αβ} -> A_α ⊗ A_α ⊗ A_β`
/// sending `A²_{αβ}` into `A²_α ⊗ A_β`.
pub fn phi_r(h: &HopfPiCoalgebra, a: GroupElement, b: GroupElement) -> Result<Matrix> {
    let da = h.dim(a);
    let phi = Matrix::identity(h.field(), da * da).kron(h.mult(b)).mul(&regrouped_double_comult(h, a, b))?;
    let test = h.mult(a).kron(&h.id(b));
    check_codomain(h, h.mul_g(a, b), &phi, &test, "right coaction")?;
    Ok(phi)
}

/// `r_α(x ⊗ y) = (x ⊗ 1) Δ_{α,1}(y)`, a map `A_α ⊗ A_α -> A_α ⊗ A_1`.
pub fn r_map(h: &HopfPiCoalgebra, a: GroupElement) -> Matrix {
    let one = h.one();
    Matrix::compose(&[&h.mult(a).kron(&h.id(one)), &h.id(a).kron(h.comult(a, one))]).expect("shapes agree")
}

/// `r_α⁻¹(x ⊗ y) = x S_{α⁻¹}(y₁) ⊗ y₂` with `Δ_{α⁻¹,α}(y) = y₁ ⊗ y₂`.
pub fn r_inv(h: &HopfPiCoalgebra, a: GroupElement) -> Matrix {
    let ai = h.inv(a);
    let id = h.id(a);
    Matrix::compose(&[
        &h.mult(a).kron(&id),
        &Matrix::kron_all(&[&id, h.antipode(ai), &id]),
        &id.kron(h.comult(ai, a)),
    ])
    .expect("shapes agree")
}

/// `t_α(x ⊗ y) = (1 ⊗ x) Δ_{1,α}(y)`, a map `A_α ⊗ A_α -> A_1 ⊗ A_α`.
pub fn t_map(h: &HopfPiCoalgebra, a: GroupElement) -> Matrix {
    let one = h.one();
    let id = h.id(a);
    Matrix::compose(&[
        &h.id(one).kron(h.mult(a)),
        &flip(h.field(), h.dim(a), h.dim(one)).kron(&id),
        &id.kron(h.comult(one, a)),
    ])
    .expect("shapes agree")
}

/// `t_α⁻¹(x ⊗ y) = y S_α⁻¹(x₂) ⊗ x₁` with `Δ_{α,α⁻¹}(x) = x₁ ⊗ x₂`.
pub fn t_inv(h: &HopfPiCoalgebra, a: GroupElement) -> Result<Matrix> {
    let ai = h.inv(a);
    let id = h.id(a);
    let d = h.dim(a);
    let s_inv = h.antipode_inverse(a)?;
    Matrix::compose(&[
        &h.mult(a).kron(&id),
        &permute_factors(h.field(), &[d, d, d], &[2, 1, 0]),
        &Matrix::kron_all(&[&id, s_inv, &id]),
        &h.comult(a, ai).kron(&id),
    ])
}

pub const R_INTERTWINES_PHI_L: &str = "(Δ ⊗ id) r = (id ⊗ r) Φ^l";
pub const T_INTERTWINES_PHI_R: &str = "(id ⊗ Δ) t = (t ⊗ id) Φ^r";
pub const R_FROM_PHI_L: &str = "r = (id ⊗ ε ⊗ id) Φ^l";
pub const T_FROM_PHI_R: &str = "t = (ε ⊗ id ⊗ id) Φ^r";

/// How `r` and `t` interact with the coactions of the universal calculus,
/// as identities of maps on all of `A_{αβ} ⊗ A_{αβ}` for every pair `(α, β)`.
pub fn check_phi_identities(h: &HopfPiCoalgebra) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let one = h.one();
    let eps = h.counit();
    for (a, b) in h.group().pairs() {
        let ab = h.mul_g(a, b);
        let d = h.dim(ab);
        let lhs = h.comult(a, b).kron(&h.id(one)).mul(&r_map(h, ab))?;
        let rhs = h.id(a).kron(&r_map(h, b)).mul(&phi_l(h, a, b)?)?;
        report.compare(R_INTERTWINES_PHI_L, &[a, b], Some(ab), &[d, d], &lhs, &rhs);
        let lhs = h.id(one).kron(h.comult(a, b)).mul(&t_map(h, ab))?;
        let rhs = t_map(h, a).kron(&h.id(b)).mul(&phi_r(h, a, b)?)?;
        report.compare(T_INTERTWINES_PHI_R, &[a, b], Some(ab), &[d, d], &lhs, &rhs);
    }
    for a in h.group().elements() {
        let d = h.dim(a);
        let lhs = Matrix::kron_all(&[&h.id(a), eps, &h.id(one)]).mul(&phi_l(h, a, one)?)?;
        report.compare(R_FROM_PHI_L, &[a], Some(a), &[d, d], &r_map(h, a), &lhs);
        let rhs = Matrix::kron_all(&[eps, &h.id(one), &h.id(a)]).mul(&phi_r(h, one, a)?)?;
        report.compare(T_FROM_PHI_R, &[a], Some(a), &[d, d], &t_map(h, a), &rhs);
    }
    Ok(report)
}
