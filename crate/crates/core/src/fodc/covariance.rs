use crate::bimodule::CovariantBimodule;
use crate::error::{Error, Result};
use crate::group::{ByPair, GroupElement};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::report::{VerificationReport, Violation};

use super::calculus::Fodc;
use super::coaction::{phi_l, phi_r, regrouped_double_comult};

pub const LEFT_COVARIANT: &str = "left covariance of N";
pub const RIGHT_COVARIANT: &str = "right covariance of N";
pub const LEFT_FORMULA: &str = "left coaction matches Δ(a)(id⊗d)Δ(b)";
pub const RIGHT_FORMULA: &str = "right coaction matches Δ(a)(d⊗id)Δ(b)";
pub const LEFT_INTERTWINES_D: &str = "left coaction intertwines d";
pub const RIGHT_INTERTWINES_D: &str = "right coaction intertwines d";

/// First basis vector of `N_{αβ}` sent outside `A_α ⊗ N_β` by `Φ^l_{α,β}`.
fn left_witness(f: &Fodc, a: GroupElement, b: GroupElement) -> Result<Option<(usize, Vector)>> {
    let h = f.host();
    let phi = phi_l(h, a, b)?;
    let proj = h.id(a).kron(f.space(b).projection());
    for (k, q) in f.kernel(h.mul_g(a, b)).basis().iter().enumerate() {
        let image = proj.apply(&phi.apply(q)?)?;
        if !image.is_zero() {
            return Ok(Some((k, image)));
        }
    }
    Ok(None)
}

/// First basis vector of `N_{αβ}` sent outside `N_α ⊗ A_β` by `Φ^r_{α,β}`.
fn right_witness(f: &Fodc, a: GroupElement, b: GroupElement) -> Result<Option<(usize, Vector)>> {
    let h = f.host();
    let phi = phi_r(h, a, b)?;
    let proj = f.space(a).projection().kron(&h.id(b));
    for (k, q) in f.kernel(h.mul_g(a, b)).basis().iter().enumerate() {
        let image = proj.apply(&phi.apply(q)?)?;
        if !image.is_zero() {
            return Ok(Some((k, image)));
        }
    }
    Ok(None)
}

pub fn is_left_covariant(f: &Fodc) -> Result<bool> {
    for (a, b) in f.host().group().pairs() {
        if left_witness(f, a, b)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_right_covariant(f: &Fodc) -> Result<bool> {
    for (a, b) in f.host().group().pairs() {
        if right_witness(f, a, b)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Δ^l_{α,β}: Γ_{αβ} -> A_α ⊗ Γ_β`, induced by `Φ^l_{α,β}`.
pub fn induced_delta_l(f: &Fodc, a: GroupElement, b: GroupElement) -> Result<Matrix> {
    if let Some((k, image)) = left_witness(f, a, b)? {
        return Err(Error::NotCovariant(format!(
            "Φ^l({}, {}) sends basis vector {k} of N to {image}, outside A ⊗ N",
            a.0, b.0
        )));
    }
    let h = f.host();
    Matrix::compose(&[&h.id(a).kron(f.space(b).projection()), &phi_l(h, a, b)?, f.space(h.mul_g(a, b)).lift()])
}

/// `Δ^r_{α,β}: Γ_{αβ} -> Γ_α ⊗ A_β`, induced by `Φ^r_{α,β}`.
pub fn induced_delta_r(f: &Fodc, a: GroupElement, b: GroupElement) -> Result<Matrix> {
    if let Some((k, image)) = right_witness(f, a, b)? {
        return Err(Error::NotCovariant(format!(
            "Φ^r({}, {}) sends basis vector {k} of N to {image}, outside N ⊗ A",
            a.0, b.0
        )));
    }
    let h = f.host();
    Matrix::compose(&[&f.space(a).projection().kron(&h.id(b)), &phi_r(h, a, b)?, f.space(h.mul_g(a, b)).lift()])
}

/// `x ⊗ y -> Δ(x)(id ⊗ d)Δ(y)`, a map `A_{αβ} ⊗ A_{αβ} -> A_α ⊗ Γ_β`.
pub fn delta_l_by_formula(f: &Fodc, a: GroupElement, b: GroupElement) -> Matrix {
    let h = f.host();
    h.mult(a).kron(&f.a_db(b)).mul(&regrouped_double_comult(h, a, b)).expect("shapes agree")
}

/// `x ⊗ y -> Δ(x)(d ⊗ id)Δ(y)`, a map `A_{αβ} ⊗ A_{αβ} -> Γ_α ⊗ A_β`.
pub fn delta_r_by_formula(f: &Fodc, a: GroupElement, b: GroupElement) -> Matrix {
    let h = f.host();
    f.a_db(a).kron(h.mult(b)).mul(&regrouped_double_comult(h, a, b)).expect("shapes agree")
}

fn on_subspace(m: &Matrix, s: &Subspace) -> Matrix {
    m.mul(&s.basis_matrix()).expect("shapes agree")
}

fn check_side(f: &Fodc, left: bool) -> VerificationReport {
    let h = f.host();
    let (cov, formula, inter) = if left {
        (LEFT_COVARIANT, LEFT_FORMULA, LEFT_INTERTWINES_D)
    } else {
        (RIGHT_COVARIANT, RIGHT_FORMULA, RIGHT_INTERTWINES_D)
    };
    let mut report = VerificationReport::new();
    for name in [cov, formula, inter] {
        report.run(name);
    }
    let mut covariant = true;
    for (a, b) in h.group().pairs() {
        let witness = if left { left_witness(f, a, b) } else { right_witness(f, a, b) };
        if let Some((k, image)) = witness.expect("coactions land in A ⊗ A² by construction") {
            covariant = false;
            report.record(Violation {
                check: cov.to_string(),
                grading: vec![a, b],
                domain: None,
                basis: vec![k],
                rhs: Vector::zeros(h.field(), image.len()),
                lhs: image,
            });
        }
    }
    if !covariant {
        return report;
    }
    for (a, b) in h.group().pairs() {
        let ab = h.mul_g(a, b);
        let (delta, by_formula, d_inter) = if left {
            let dl = induced_delta_l(f, a, b).expect("covariant");
            let via_d = h.id(a).kron(f.d(b)).mul(h.comult(a, b)).expect("shapes");
            (dl.clone(), delta_l_by_formula(f, a, b), (dl.mul(f.d(ab)).expect("shapes"), via_d))
        } else {
            let dr = induced_delta_r(f, a, b).expect("covariant");
            let via_d = f.d(a).kron(&h.id(b)).mul(h.comult(a, b)).expect("shapes");
            (dr.clone(), delta_r_by_formula(f, a, b), (dr.mul(f.d(ab)).expect("shapes"), via_d))
        };
        let a2 = f.space(ab).a2();
        let lhs = on_subspace(&delta.mul(f.space(ab).projection()).expect("shapes"), a2);
        report.compare(formula, &[a, b], None, &[a2.dim()], &lhs, &on_subspace(&by_formula, a2));
        report.compare(inter, &[a, b], Some(ab), &[h.dim(ab)], &d_inter.0, &d_inter.1);
    }
    report
}

/// `Φ^l(N_{αβ}) ⊆ A_α ⊗ N_β` for all pairs; when it holds, also the
/// agreement of `Δ^l` with `Δ(a)(id⊗d)Δ(b)`, `Δ^l d = (id⊗d)Δ` and all
/// left coaction laws.
pub fn check_left_covariant(f: &Fodc) -> VerificationReport {
    let mut report = check_side(f, true);
    if report.is_ok() {
        let cb = covariant_bimodule(f).expect("left covariant");
        report.extend(cb.verify());
    }
    report
}

/// Mirror of [`check_left_covariant`] for `Φ^r` and `Δ^r`.
pub fn check_right_covariant(f: &Fodc) -> VerificationReport {
    let mut report = check_side(f, false);
    if report.is_ok() {
        let cb = covariant_bimodule(f).expect("right covariant");
        report.extend(cb.verify());
    }
    report
}

/// Both covariances and the commutation of `Δ^l` with `Δ^r`.
pub fn check_bicovariant(f: &Fodc) -> VerificationReport {
    let mut report = check_side(f, true);
    report.extend(check_side(f, false));
    if report.is_ok() {
        let cb = covariant_bimodule(f).expect("bicovariant");
        report.extend(cb.verify());
    }
    report
}

/// The bimodule `Γ` with whichever coactions `N` admits.
pub fn covariant_bimodule<'h>(f: &Fodc<'h>) -> Result<CovariantBimodule<'h>> {
    let h = f.host();
    let delta_l = if is_left_covariant(f)? {
        Some(ByPair::try_build(h.group(), |a, b| induced_delta_l(f, a, b))?)
    } else {
        None
    };
    let delta_r = if is_right_covariant(f)? {
        Some(ByPair::try_build(h.group(), |a, b| induced_delta_r(f, a, b))?)
    } else {
        None
    };
    if delta_l.is_none() && delta_r.is_none() {
        return Err(Error::NotCovariant("neither left nor right covariant".into()));
    }
    CovariantBimodule::new(h, f.bimodule().clone(), delta_l, delta_r)
}
