use crate::bimodule::CovariantBimodule;
use crate::error::Result;
use crate::group::GroupElement;
use crate::hopf::HopfPiCoalgebra;
use crate::linalg::{Matrix, Scalar, Vector};

use super::coefficients::eta_frames;
use super::frames::{left_frames, Frame};

/// A `k × k` array of linear functionals on each `A_α`. Row `i·k + j` of
/// `matrix(α)` is the functional `(i, j)` on `A_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalMatrix {
    size: usize,
    per_grading: Vec<Matrix>,
}

impl FunctionalMatrix {
    pub fn new(size: usize, per_grading: Vec<Matrix>) -> FunctionalMatrix {
        FunctionalMatrix { size, per_grading }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrix(&self, a: GroupElement) -> &Matrix {
        &self.per_grading[a.0]
    }

    pub fn get(&self, a: GroupElement, i: usize, j: usize) -> Vector {
        self.per_grading[a.0].row(i * self.size + j)
    }

    pub fn eval(&self, a: GroupElement, i: usize, j: usize, x: &Vector) -> Scalar {
        let row = self.get(a, i, j);
        row.entries().iter().zip(x.entries()).fold(x.field().zero(), |acc, (p, q)| &acc + &(p * q))
    }
}

/// `b -> φ * b = (id ⊗ φ) Δ_{α,1}(b)` for a functional `φ` on `A_1`.
pub fn functional_star(h: &HopfPiCoalgebra, a: GroupElement, phi: &Vector) -> Matrix {
    h.id(a).kron(&Matrix::row_of(phi)).mul(h.comult(a, h.one())).expect("shapes agree")
}

/// `b -> b * φ = (φ ⊗ id) Δ_{1,α}(b)` for a functional `φ` on `A_1`.
pub fn star_functional(h: &HopfPiCoalgebra, a: GroupElement, phi: &Vector) -> Matrix {
    Matrix::row_of(phi).kron(&h.id(a)).mul(h.comult(h.one(), a)).expect("shapes agree")
}

/// `φ ∘ S_1⁻¹` as a functional on `A_1`.
pub(crate) fn after_inverse_antipode(h: &HopfPiCoalgebra, phi: &Vector) -> Result<Vector> {
    Ok(Matrix::row_of(phi).mul(h.antipode_inverse(h.one())?)?.row(0))
}

/// The commutation map of a frame: column `i·n + b` holds the left
/// coordinates of `e_i · e_b`, so block `j` of it is `F_ij(e_b)` in
/// `e_i b = Σ_j F_ij(b) e_j`.
pub fn commutation(cb: &CovariantBimodule, frame: &Frame) -> Result<Matrix> {
    let h = cb.host();
    let a = frame.grading();
    Matrix::compose(&[frame.left_coords(), cb.bimodule().right(a), &frame.basis().kron(&h.id(a))])
}

/// `E_α ∘ F_ij` with `E_α = ε Ψ_α`, over all gradings.
pub fn functionals_from_frames(cb: &CovariantBimodule, frames: &[Frame]) -> Result<FunctionalMatrix> {
    let h = cb.host();
    let size = frames.first().map_or(0, Frame::size);
    let mut per_grading = Vec::with_capacity(frames.len());
    for frame in frames {
        let a = frame.grading();
        let n = h.dim(a);
        let chi = h.character(a)?;
        let m = commutation(cb, frame)?;
        let x = Matrix::identity(h.field(), size).kron(&chi).mul(&m)?;
        per_grading.push(Matrix::from_fn(h.field(), size * size, n, |row, b| {
            let (i, j) = (row / size, row % size);
            x.get(j, i * n + b)
        }));
    }
    Ok(FunctionalMatrix { size, per_grading })
}

/// The functionals `f_ij` of the left-invariant frames:
/// `ω_i b = Σ_j (f_ij * b) ω_j`.
pub fn functionals_f(cb: &CovariantBimodule) -> Result<FunctionalMatrix> {
    functionals_from_frames(cb, &left_frames(cb)?)
}

/// The functionals `g_ij` of the right-invariant frames:
/// `η_i b = Σ_j (b * g_ij) η_j`.
pub fn functionals_g(cb: &CovariantBimodule) -> Result<FunctionalMatrix> {
    functionals_from_frames(cb, &eta_frames(cb)?)
}
