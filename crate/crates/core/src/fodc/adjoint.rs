use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::hopf::{iterated_comult_matrix, Bracketing, HopfPiCoalgebra};
use crate::linalg::{permute_factors, Matrix, Vector};
use crate::report::{VerificationReport, Violation};

use super::coaction::{r_inv, t_map};
use super::ideal::RightIdeal;

pub const AD_INVARIANT: &str = "ad-invariance";
pub const AD_COASSOCIATIVE: &str = "ad coassociative";
pub const AD_MULTIPLICATIVE: &str = "ad twisted multiplicative";

/// `ad_α(a) = t_α(r_α⁻¹(1_α ⊗ a)) = a₂ ⊗ S_{α⁻¹}(a₁) a₃`, a map `A_1 -> A_1 ⊗ A_α`,
/// where `a₁ ⊗ a₂ ⊗ a₃` is the iterated comultiplication along `(α⁻¹, 1, α)`.
/// Both expressions are evaluated and must agree exactly.
pub fn ad_map(h: &HopfPiCoalgebra, a: GroupElement) -> Result<Matrix> {
    let one = h.one();
    let ai = h.inv(a);
    let composite = Matrix::compose(&[&t_map(h, a), &r_inv(h, a), &h.algebra(a).unit_matrix().kron(&h.id(one))])?;
    let path = [ai, one, a];
    let split = iterated_comult_matrix(h.coalgebra(), &path, &Bracketing::right_comb(3))?;
    let explicit = Matrix::compose(&[
        &h.id(one).kron(h.mult(a)),
        &permute_factors(h.field(), &[h.dim(a), h.dim(one), h.dim(a)], &[1, 0, 2]),
        &Matrix::kron_all(&[h.antipode(ai), &h.id(one), &h.id(a)]),
        &split,
    ])?;
    if composite != explicit {
        let j = composite.first_differing_column(&explicit).unwrap_or(0);
        return Err(Error::InternalMismatch(format!(
            "ad_{} on basis element {j}: {} via t∘r⁻¹, {} via comultiplication",
            a.0,
            composite.column(j),
            explicit.column(j)
        )));
    }
    Ok(composite)
}

/// `ad_α(R) ⊆ R ⊗ A_α` for every `α`; one violation per failing grading.
pub fn check_ad_invariant(h: &HopfPiCoalgebra, r: &RightIdeal) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    report.run(AD_INVARIANT);
    for a in h.group().elements() {
        let ad = ad_map(h, a)?;
        let target = r.space().tensor(&crate::linalg::Subspace::full(h.field(), h.dim(a)));
        for (k, v) in r.space().basis().iter().enumerate() {
            let image = ad.apply(v)?;
            if !target.contains(&image) {
                report.record(Violation {
                    check: AD_INVARIANT.to_string(),
                    grading: vec![a],
                    domain: None,
                    basis: vec![k],
                    rhs: target.reduce(&image),
                    lhs: image,
                });
                break;
            }
        }
    }
    Ok(report)
}

pub fn is_ad_invariant(h: &HopfPiCoalgebra, r: &RightIdeal) -> Result<bool> {
    Ok(check_ad_invariant(h, r)?.is_ok())
}

/// `(ad_α ⊗ id) ad_β = (id ⊗ Δ_{α,β}) ad_{αβ}` for all pairs.
pub fn check_ad_coassociative(h: &HopfPiCoalgebra) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    report.run(AD_COASSOCIATIVE);
    let one = h.one();
    for (a, b) in h.group().pairs() {
        let lhs = ad_map(h, a)?.kron(&h.id(b)).mul(&ad_map(h, b)?)?;
        let rhs = h.id(one).kron(h.comult(a, b)).mul(&ad_map(h, h.mul_g(a, b))?)?;
        report.compare(AD_COASSOCIATIVE, &[a, b], Some(one), &[h.dim(one)], &lhs, &rhs);
    }
    Ok(report)
}

/// `ad_α(xy) = (1 ⊗ S_{α⁻¹}(y₁)) ad_α(x) Δ_{1,α}(y₂)` with
/// `Δ_{α⁻¹,α}(y) = y₁ ⊗ y₂`, on all pairs of basis elements of `A_1`.
pub fn check_ad_multiplicative(h: &HopfPiCoalgebra) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    report.run(AD_MULTIPLICATIVE);
    let one = h.one();
    let field = h.field();
    let d1 = h.dim(one);
    for a in h.group().elements() {
        let ai = h.inv(a);
        let ad = ad_map(h, a)?;
        let target = h.algebra(one).tensor(h.algebra(a));
        let lhs = ad.mul(h.mult(one))?;
        let mut columns = Vec::with_capacity(d1 * d1);
        for x in 0..d1 {
            let ad_x = ad.column(x);
            for y in 0..d1 {
                let split = h.comult(ai, a).column(y);
                let mut acc = Vector::zeros(field, target.dim());
                for (k, c) in split.nonzero() {
                    let (i, j) = (k / h.dim(a), k % h.dim(a));
                    let s = h.antipode(ai).column(i);
                    let left = h.unit(one).kron(&s);
                    let right = h.comult(one, a).column(j);
                    let term = target.mul(&target.mul(&left, &ad_x), &right);
                    acc.axpy(c, &term);
                }
                columns.push(acc);
            }
        }
        let rhs = Matrix::from_columns(field, target.dim(), &columns);
        report.compare(AD_MULTIPLICATIVE, &[a], Some(one), &[d1, d1], &lhs, &rhs);
    }
    Ok(report)
}
