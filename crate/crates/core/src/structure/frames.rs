use crate::bimodule::CovariantBimodule;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::{flip, inverse, kernel, rank, Matrix, Subspace, Vector};

/// `{ρ ∈ Γ_α : Δ^l_{1,α}(ρ) = 1_1 ⊗ ρ}`.
pub fn invariant_subspace_left(cb: &CovariantBimodule, a: GroupElement) -> Result<Subspace> {
    let h = cb.host();
    let one = h.one();
    let insert = h.algebra(one).unit_matrix().kron(&Matrix::identity(h.field(), cb.dim(a)));
    Ok(kernel(&cb.delta_l(one, a)?.sub(&insert)?))
}

/// `{η ∈ Γ_α : Δ^r_{α,1}(η) = η ⊗ 1_1}`.
pub fn invariant_subspace_right(cb: &CovariantBimodule, a: GroupElement) -> Result<Subspace> {
    let h = cb.host();
    let one = h.one();
    let insert = Matrix::identity(h.field(), cb.dim(a)).kron(&h.algebra(one).unit_matrix());
    Ok(kernel(&cb.delta_r(a, one)?.sub(&insert)?))
}

/// `P_α(ρ) = Σ S_{α⁻¹}(a_k) ρ_k` where `Δ^l_{α⁻¹,α}(ρ) = Σ a_k ⊗ ρ_k`, as a map `Γ_1 -> Γ_α`.
pub fn projection_p(cb: &CovariantBimodule, a: GroupElement) -> Result<Matrix> {
    let h = cb.host();
    let ai = h.inv(a);
    let twist = h.antipode(ai).kron(&Matrix::identity(h.field(), cb.dim(a)));
    Matrix::compose(&[cb.bimodule().left(a), &twist, cb.delta_l(ai, a)?])
}

/// A family `e_1, …, e_k ∈ Γ_α` that is a basis of `Γ_α` both as a left and
/// as a right `A_α`-module.
///
/// Coordinates on `A_α^k` are block-major: index `i·n_α + m` is `e_m` in block `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    grading: GroupElement,
    component_dim: usize,
    basis: Matrix,
    left_coords: Matrix,
    right_coords: Matrix,
}

impl Frame {
    pub fn new(cb: &CovariantBimodule, a: GroupElement, basis: Matrix) -> Result<Frame> {
        let h = cb.host();
        let field = h.field();
        let n = h.dim(a);
        let size = basis.cols();
        let g = cb.dim(a);
        if basis.rows() != g {
            return Err(Error::DimensionMismatch(format!("frame vectors must lie in Γ_{}", a.0)));
        }
        if g != size * n {
            return Err(Error::StructureInconsistent(format!(
                "Γ_{} has dimension {g}, not that of a free module of rank {size} over a {n}-dimensional algebra",
                a.0
            )));
        }
        let id = Matrix::identity(field, n);
        let left = Matrix::compose(&[cb.bimodule().left(a), &id.kron(&basis), &flip(field, size, n)])?;
        let right = cb.bimodule().right(a).mul(&basis.kron(&id))?;
        let left_coords = inverse(&left)
            .ok_or_else(|| Error::StructureInconsistent(format!("frame of Γ_{} is not a left module basis", a.0)))?;
        let right_coords = inverse(&right)
            .ok_or_else(|| Error::StructureInconsistent(format!("frame of Γ_{} is not a right module basis", a.0)))?;
        Ok(Frame { grading: a, component_dim: n, basis, left_coords, right_coords })
    }

    pub fn grading(&self) -> GroupElement {
        self.grading
    }

    pub fn size(&self) -> usize {
        self.basis.cols()
    }

    /// Frame vectors as the columns of a `dim Γ_α × k` matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn element(&self, i: usize) -> Vector {
        self.basis.column(i)
    }

    /// `Γ_α -> A_α^k`, `Σ a_i e_i -> (a_i)`.
    pub fn left_coords(&self) -> &Matrix {
        &self.left_coords
    }

    /// `Γ_α -> A_α^k`, `Σ e_i b_i -> (b_i)`.
    pub fn right_coords(&self) -> &Matrix {
        &self.right_coords
    }

    fn split(&self, flat: Vector) -> Vec<Vector> {
        let n = self.component_dim;
        (0..self.size()).map(|i| flat.slice(i * n, n)).collect()
    }

    /// The unique `a_i ∈ A_α` with `ρ = Σ a_i e_i`.
    pub fn decompose_left(&self, rho: &Vector) -> Result<Vec<Vector>> {
        Ok(self.split(self.left_coords.apply(rho)?))
    }

    /// The unique `b_i ∈ A_α` with `ρ = Σ e_i b_i`.
    pub fn decompose_right(&self, rho: &Vector) -> Result<Vec<Vector>> {
        Ok(self.split(self.right_coords.apply(rho)?))
    }
}

/// Left-invariant frames `ω^α_i = P_α(ω^1_i)`, with `ω^1` the echelon basis of
/// the left-invariant part of `Γ_1`. These satisfy `Δ^l_{α,β}(ω^{αβ}_i) = 1_α ⊗ ω^β_i`.
pub fn left_frames(cb: &CovariantBimodule) -> Result<Vec<Frame>> {
    let h = cb.host();
    let one = h.one();
    let base = invariant_subspace_left(cb, one)?;
    let size = base.dim();
    let omega1 = base.basis_matrix();
    let mut frames = Vec::with_capacity(h.group().order());
    for a in h.group().elements() {
        let inv = invariant_subspace_left(cb, a)?;
        if inv.dim() != size {
            return Err(Error::DimensionVariesAcrossGrading(format!(
                "left-invariant part has dimension {size} in grading {} but {} in grading {}",
                one.0,
                inv.dim(),
                a.0
            )));
        }
        let omega = if a == one { omega1.clone() } else { projection_p(cb, a)?.mul(&omega1)? };
        if rank(&omega) != size || omega.columns().iter().any(|w| !inv.contains(w)) {
            return Err(Error::StructureInconsistent(format!(
                "P_{} does not carry the invariant basis of Γ_1 onto that of Γ_{}",
                a.0, a.0
            )));
        }
        frames.push(Frame::new(cb, a, omega)?);
    }
    Ok(frames)
}
