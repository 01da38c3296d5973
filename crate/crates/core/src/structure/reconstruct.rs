use crate::bimodule::{CovariantBimodule, PiBimodule};
use crate::error::{Error, Result};
use crate::group::ByPair;
use crate::hopf::HopfPiCoalgebra;
use crate::linalg::{permute_factors, Matrix};
use crate::report::VerificationReport;

use super::coefficients::RMatrix;
use super::frames::Frame;
use super::functionals::functional_star;
use super::verify::{check_character_at, check_intertwining, check_r_coalgebra, F_MULTIPLICATIVE, F_UNITAL, R_INTERTWINES_F};

pub const MATCHES_LEFT_ACTION: &str = "reconstruction matches left action";
pub const MATCHES_RIGHT_ACTION: &str = "reconstruction matches right action";
pub const MATCHES_LEFT_COACTION: &str = "reconstruction matches left coaction";
pub const MATCHES_RIGHT_COACTION: &str = "reconstruction matches right coaction";

fn unit_entry(field: crate::linalg::Field, size: usize, row: usize, col: usize) -> Matrix {
    Matrix::from_triplets(field, size, size, [(row, col, field.one())])
}

/// The free bicovariant bimodule on generators `ω^α_i` with
/// `(Σ a_i ω_i) b = Σ a_i (f_ij * b) ω_j`,
/// `Δ^l(Σ a_i ω_i) = Σ Δ(a_i)(1 ⊗ ω_i)` and
/// `Δ^r(Σ a_i ω_i) = Σ Δ(a_i)(ω_j ⊗ R_ji)`.
///
/// `f` holds the functionals on `A_1` (row `i·k + j` is `f_ij`). Elements of
/// `Γ_α` are coordinatised as `A_α^k`, block `i` being the coefficient of `ω_i`.
pub fn reconstruct<'h>(h: &'h HopfPiCoalgebra, f: &Matrix, r: &RMatrix) -> Result<CovariantBimodule<'h>> {
    let one = h.one();
    let field = h.field();
    let size = r.size();
    if f.shape() != (size * size, h.dim(one)) {
        return Err(Error::DimensionMismatch(format!("f must be {}x{}", size * size, h.dim(one))));
    }
    for b in h.group().elements() {
        if r.matrix(b).shape() != (h.dim(b), size * size) {
            return Err(Error::DimensionMismatch(format!("R in grading {} must be {}x{}", b.0, h.dim(b), size * size)));
        }
    }
    let mut report = VerificationReport::new();
    check_character_at(h, one, f, size, &mut report, F_MULTIPLICATIVE, F_UNITAL);
    check_r_coalgebra(h, r, &mut report)?;
    check_intertwining(h, r, f, f, R_INTERTWINES_F, &mut report);
    if let Some(v) = report.violations().first() {
        return Err(Error::IncompatibleData(format!(
            "{} fails in grading {:?} on basis {:?}",
            v.check,
            v.grading.iter().map(|g| g.0).collect::<Vec<_>>(),
            v.basis
        )));
    }

    let id_k = Matrix::identity(field, size);
    let mut dims = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for a in h.group().elements() {
        let n = h.dim(a);
        dims.push(size * n);
        left.push(id_k.kron(h.mult(a)).mul(&permute_factors(field, &[n, size, n], &[1, 0, 2]))?);
        let mut act = Matrix::zeros(field, size * n, size * n * n);
        for i in 0..size {
            for j in 0..size {
                let star = functional_star(h, a, &f.row(i * size + j));
                let block = h.mult(a).mul(&h.id(a).kron(&star))?;
                act = act.add(&unit_entry(field, size, j, i).kron(&block))?;
            }
        }
        right.push(act);
    }
    let bimodule = PiBimodule::new(h, dims, left, right)?;
    let delta_l = ByPair::try_build(h.group(), |a, b| {
        let (na, nb) = (h.dim(a), h.dim(b));
        permute_factors(field, &[size, na, nb], &[1, 0, 2]).mul(&id_k.kron(h.comult(a, b)))
    })?;
    let delta_r = ByPair::try_build(h.group(), |a, b| {
        let (na, nb) = (h.dim(a), h.dim(b));
        let mut m = Matrix::zeros(field, size * na * nb, size * h.dim(h.mul_g(a, b)));
        for j in 0..size {
            for i in 0..size {
                let twist = h.id(a).kron(&h.algebra(b).right_mult(&r.get(b, j, i))).mul(h.comult(a, b))?;
                m = m.add(&unit_entry(field, size, j, i).kron(&twist))?;
            }
        }
        Ok(m)
    })?;
    CovariantBimodule::new(h, bimodule, Some(delta_l), Some(delta_r))
}

/// Compares `original` and `rebuilt` under the identification `Σ a_i ω_i <-> (a_i)`
/// given by the left-invariant frames of `original`.
pub fn check_isomorphic(original: &CovariantBimodule, omega: &[Frame], rebuilt: &CovariantBimodule) -> Result<VerificationReport> {
    let h = original.host();
    let mut report = VerificationReport::new();
    for frame in omega {
        let a = frame.grading();
        let c = frame.left_coords();
        let id = h.id(a);
        let lhs = c.mul(original.bimodule().left(a))?;
        let rhs = rebuilt.bimodule().left(a).mul(&id.kron(c))?;
        report.compare(MATCHES_LEFT_ACTION, &[a], None, &[h.dim(a), original.dim(a)], &lhs, &rhs);
        let lhs = c.mul(original.bimodule().right(a))?;
        let rhs = rebuilt.bimodule().right(a).mul(&c.kron(&id))?;
        report.compare(MATCHES_RIGHT_ACTION, &[a], None, &[original.dim(a), h.dim(a)], &lhs, &rhs);
    }
    for (a, b) in h.group().pairs() {
        let ab = h.mul_g(a, b);
        let c_ab = omega[ab.0].left_coords();
        let lhs = h.id(a).kron(omega[b.0].left_coords()).mul(original.delta_l(a, b)?)?;
        let rhs = rebuilt.delta_l(a, b)?.mul(c_ab)?;
        report.compare(MATCHES_LEFT_COACTION, &[a, b], None, &[original.dim(ab)], &lhs, &rhs);
        if original.is_right_covariant() {
            let lhs = omega[a.0].left_coords().kron(&h.id(b)).mul(original.delta_r(a, b)?)?;
            let rhs = rebuilt.delta_r(a, b)?.mul(c_ab)?;
            report.compare(MATCHES_RIGHT_COACTION, &[a, b], None, &[original.dim(ab)], &lhs, &rhs);
        }
    }
    Ok(report)
}
