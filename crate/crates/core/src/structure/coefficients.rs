use crate::bimodule::CovariantBimodule;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::{solve_unique, Matrix, Vector};

use super::frames::{left_frames, Frame};

/// Elements `R^β_ji ∈ A_β` for `i, j < k`. Column `j·k + i` of `matrix(β)` is `R^β_ji`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    size: usize,
    per_grading: Vec<Matrix>,
}

impl RMatrix {
    pub fn new(size: usize, per_grading: Vec<Matrix>) -> RMatrix {
        RMatrix { size, per_grading }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn matrix(&self, b: GroupElement) -> &Matrix {
        &self.per_grading[b.0]
    }

    pub fn get(&self, b: GroupElement, j: usize, i: usize) -> Vector {
        self.per_grading[b.0].column(j * self.size + i)
    }

    /// Column `i` is `Σ_j e_j ⊗ R^β_ji ∈ K^k ⊗ A_β`.
    pub(crate) fn stacked(&self, b: GroupElement) -> Matrix {
        let k = self.size;
        let m = &self.per_grading[b.0];
        let n = m.rows();
        Matrix::from_fn(m.field(), k * n, k, |row, i| m.get(row % n, (row / n) * k + i))
    }
}

/// `Δ^r_{1,β}(ω^β_i) = Σ_j ω^1_j ⊗ R^β_ji` read off in the given frames.
pub fn r_from_frames(cb: &CovariantBimodule, frames: &[Frame]) -> Result<RMatrix> {
    let h = cb.host();
    let one = h.one();
    let size = frames[one.0].size();
    let mut per_grading = Vec::with_capacity(frames.len());
    for frame in frames {
        let b = frame.grading();
        let n = h.dim(b);
        let image = cb.delta_r(one, b)?.mul(frame.basis())?;
        let system = frames[one.0].basis().kron(&h.id(b));
        let x = solve_unique(&system, &image).map_err(|e| match e {
            Error::NoSolution => Error::StructureInconsistent(format!(
                "Δ^r(1, {}) of a left-invariant frame leaves invΓ_1 ⊗ A_{}",
                b.0, b.0
            )),
            other => other,
        })?;
        per_grading.push(Matrix::from_fn(h.field(), n, size * size, |k, col| {
            let (j, i) = (col / size, col % size);
            x.get(j * n + k, i)
        }));
    }
    Ok(RMatrix { size, per_grading })
}

/// The matrix elements `R_ji` of the right coaction on left-invariant frames.
pub fn matrix_r(cb: &CovariantBimodule) -> Result<RMatrix> {
    if !cb.is_bicovariant() {
        return Err(Error::NotBicovariant("R needs both coactions".into()));
    }
    r_from_frames(cb, &left_frames(cb)?)
}

/// `η^α_j = Σ_i ω^α_i S_{α⁻¹}(R^{α⁻¹}_ij)` from given frames and `R`.
pub fn eta_from(cb: &CovariantBimodule, omega: &[Frame], r: &RMatrix) -> Result<Vec<Frame>> {
    let h = cb.host();
    let size = r.size();
    let mut frames = Vec::with_capacity(omega.len());
    for frame in omega {
        let a = frame.grading();
        let ai = h.inv(a);
        let mut columns = Vec::with_capacity(size);
        for j in 0..size {
            let mut eta = Vector::zeros(h.field(), cb.dim(a));
            for i in 0..size {
                let coefficient = h.antipode(ai).apply(&r.get(ai, i, j))?;
                eta = eta.add(&cb.bimodule().act_right(a, &frame.element(i), &coefficient));
            }
            columns.push(eta);
        }
        frames.push(Frame::new(cb, a, Matrix::from_columns(h.field(), cb.dim(a), &columns))?);
    }
    Ok(frames)
}

/// The right-invariant frames `η^α_j`.
pub fn eta_frames(cb: &CovariantBimodule) -> Result<Vec<Frame>> {
    let omega = left_frames(cb)?;
    let r = matrix_r(cb)?;
    eta_from(cb, &omega, &r)
}
