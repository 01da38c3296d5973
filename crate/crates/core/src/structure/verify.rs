use crate::bimodule::CovariantBimodule;
use crate::error::Result;
use crate::group::GroupElement;
use crate::hopf::HopfPiCoalgebra;
use crate::linalg::{rank, Matrix, Vector};
use crate::report::{VerificationReport, Violation};

use super::coefficients::{eta_from, r_from_frames, RMatrix};
use super::frames::{left_frames, Frame};
use super::functionals::{
    after_inverse_antipode, commutation, functional_star, functionals_from_frames, star_functional, FunctionalMatrix,
};

pub const FRAME_TRANSPORT: &str = "Δ^l(ω) = 1 ⊗ ω";
pub const F_RIGHT_COMMUTATION: &str = "ω b = Σ (f * b) ω";
pub const F_LEFT_COMMUTATION: &str = "a ω = Σ ω ((f∘S⁻¹) * a)";
pub const F_MULTIPLICATIVE: &str = "f(ab) = Σ f(a) f(b)";
pub const F_UNITAL: &str = "f(1) = δ";
pub const F_INVERSE_LEFT: &str = "Σ f_ji * (f_hj∘S⁻¹) = δ ε on A_1";
pub const F_INVERSE_RIGHT: &str = "Σ (f_jh∘S⁻¹) * f_ij = δ ε on A_1";
pub const R_FRAME: &str = "Δ^r(ω) = Σ ω ⊗ R";
pub const R_COMULT: &str = "Δ(R) = Σ R ⊗ R";
pub const R_COUNIT: &str = "ε(R) = δ";
pub const R_ANTIPODE_LEFT: &str = "Σ S(R) R = δ 1";
pub const R_ANTIPODE_RIGHT: &str = "Σ R S(R) = δ 1";
pub const ETA_RIGHT_INVARIANT: &str = "Δ^r(η) = η ⊗ 1";
pub const ETA_SPANS: &str = "η spans the right-invariant part";
pub const OMEGA_FROM_ETA: &str = "ω = Σ η R";
pub const ETA_LEFT_COACTION: &str = "Δ^l(η) = Σ S(R) ⊗ η";
pub const G_COMMUTATION: &str = "η b = Σ (b * g) η";
pub const G_MULTIPLICATIVE: &str = "g(ab) = Σ g(a) g(b)";
pub const G_UNITAL: &str = "g(1) = δ";
pub const F_EQUALS_G: &str = "f = g on A_1";
pub const R_INTERTWINES_G: &str = "Σ R (a * f) = Σ (g * a) R";
pub const R_INTERTWINES_F: &str = "Σ R (a * f) = Σ (f * a) R";

/// Everything the invariant frames determine about a covariant bimodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureData {
    pub omega: Vec<Frame>,
    /// Present when the host carries `Ψ`.
    pub f: Option<FunctionalMatrix>,
    /// Present for bicovariant bimodules.
    pub r: Option<RMatrix>,
    pub eta: Option<Vec<Frame>>,
    /// Present for bicovariant bimodules whose host carries `Ψ`.
    pub g: Option<FunctionalMatrix>,
}

impl StructureData {
    pub fn extract(cb: &CovariantBimodule) -> Result<StructureData> {
        let h = cb.host();
        let omega = left_frames(cb)?;
        let f = match h.psi_maps() {
            Some(_) => Some(functionals_from_frames(cb, &omega)?),
            None => None,
        };
        let (r, eta, g) = if cb.is_bicovariant() {
            let r = r_from_frames(cb, &omega)?;
            let eta = eta_from(cb, &omega, &r)?;
            let g = match h.psi_maps() {
                Some(_) => Some(functionals_from_frames(cb, &eta)?),
                None => None,
            };
            (Some(r), Some(eta), g)
        } else {
            (None, None, None)
        };
        Ok(StructureData { omega, f, r, eta, g })
    }

    pub fn size(&self) -> usize {
        self.omega.first().map_or(0, Frame::size)
    }
}

fn algebra_product(h: &HopfPiCoalgebra, a: GroupElement, x: &Vector, y: &Vector) -> Vector {
    h.algebra(a).mul(x, y)
}

pub(crate) fn delta_matrix(field: crate::linalg::Field, size: usize) -> Matrix {
    Matrix::from_fn(field, size * size, 1, |row, _| {
        if row / size == row % size {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// Multiplicativity and unitality of the functionals `fa` on `A_α`.
pub(crate) fn check_character_at(
    h: &HopfPiCoalgebra,
    a: GroupElement,
    fa: &Matrix,
    size: usize,
    report: &mut VerificationReport,
    mult: &str,
    unital: &str,
) {
    let n = h.dim(a);
    let lhs = fa.mul(h.mult(a)).expect("shapes");
    let rhs = Matrix::from_fn(h.field(), size * size, n * n, |row, col| {
        let (i, j) = (row / size, row % size);
        let (x, y) = (col / n, col % n);
        (0..size).fold(h.field().zero(), |acc, k| &acc + &(&fa.get(i * size + k, x) * &fa.get(k * size + j, y)))
    });
    report.compare(mult, &[a], Some(a), &[n, n], &lhs, &rhs);
    let at_unit = fa.mul(&Matrix::column_of(h.unit(a))).expect("shapes");
    report.compare(unital, &[a], None, &[1], &at_unit, &delta_matrix(h.field(), size));
}

fn check_character_laws(h: &HopfPiCoalgebra, f: &FunctionalMatrix, report: &mut VerificationReport, mult: &str, unital: &str) {
    for a in h.group().elements() {
        check_character_at(h, a, f.matrix(a), f.size(), report, mult, unital);
    }
}

/// The commutation map of `frame` compared with the one `φ_ij * b` (or `b * φ_ij`) predicts.
fn check_commutation(
    cb: &CovariantBimodule,
    frame: &Frame,
    phi: &FunctionalMatrix,
    star_on_right: bool,
    check: &str,
    report: &mut VerificationReport,
) -> Result<()> {
    let h = cb.host();
    let a = frame.grading();
    let one = h.one();
    let n = h.dim(a);
    let size = frame.size();
    let actual = commutation(cb, frame)?;
    let mut columns = Vec::with_capacity(size * n);
    for i in 0..size {
        let maps: Vec<Matrix> = (0..size)
            .map(|j| {
                let p = phi.get(one, i, j);
                if star_on_right {
                    star_functional(h, a, &p)
                } else {
                    functional_star(h, a, &p)
                }
            })
            .collect();
        for b in 0..n {
            let blocks: Vec<Vector> = maps.iter().map(|m| m.column(b)).collect();
            columns.push(Vector::concat(&blocks, h.field()));
        }
    }
    let predicted = Matrix::from_columns(h.field(), size * n, &columns);
    report.compare(check, &[a], None, &[size, n], &actual, &predicted);
    Ok(())
}

fn check_f(cb: &CovariantBimodule, omega: &[Frame], f: &FunctionalMatrix, report: &mut VerificationReport) -> Result<()> {
    let h = cb.host();
    let one = h.one();
    let field = h.field();
    let size = f.size();
    for frame in omega {
        check_commutation(cb, frame, f, false, F_RIGHT_COMMUTATION, report)?;
        let a = frame.grading();
        let n = h.dim(a);
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..size {
            for x in 0..n {
                let e = Vector::basis(field, n, x);
                lhs.push(cb.bimodule().act_left(a, &e, &frame.element(i)));
                let mut acc = Vector::zeros(field, cb.dim(a));
                for j in 0..size {
                    let twisted = after_inverse_antipode(h, &f.get(one, i, j))?;
                    let coefficient = functional_star(h, a, &twisted).column(x);
                    acc = acc.add(&cb.bimodule().act_right(a, &frame.element(j), &coefficient));
                }
                rhs.push(acc);
            }
        }
        let g = cb.dim(a);
        report.compare(
            F_LEFT_COMMUTATION,
            &[a],
            Some(a),
            &[size, n],
            &Matrix::from_columns(field, g, &lhs),
            &Matrix::from_columns(field, g, &rhs),
        );
    }
    check_character_laws(h, f, report, F_MULTIPLICATIVE, F_UNITAL);

    // convolution inverse identities, on A_1
    let n1 = h.dim(one);
    let delta = h.comult(one, one);
    let eps = h.counit();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut expected = Vec::new();
    for i in 0..size {
        for k in 0..size {
            let mut l = Matrix::zeros(field, 1, n1);
            let mut r = Matrix::zeros(field, 1, n1);
            for j in 0..size {
                let fji = Matrix::row_of(&f.get(one, j, i));
                let fkj_s = Matrix::row_of(&after_inverse_antipode(h, &f.get(one, k, j))?);
                l = l.add(&fji.kron(&fkj_s).mul(delta)?)?;
                let fjk_s = Matrix::row_of(&after_inverse_antipode(h, &f.get(one, j, k))?);
                let fij = Matrix::row_of(&f.get(one, i, j));
                r = r.add(&fjk_s.kron(&fij).mul(delta)?)?;
            }
            left.push(l.row(0));
            right.push(r.row(0));
            expected.push(if i == k { eps.row(0) } else { Vector::zeros(field, n1) });
        }
    }
    let as_matrix = |rows: &[Vector]| Matrix::from_rows(field, n1, rows).transpose();
    report.compare(F_INVERSE_LEFT, &[one], Some(one), &[n1], &as_matrix(&left), &as_matrix(&expected));
    report.compare(F_INVERSE_RIGHT, &[one], Some(one), &[n1], &as_matrix(&right), &as_matrix(&expected));
    Ok(())
}

/// `Σ_i R^α_ij (a * φ_ih)` against `Σ_i (ψ_ji * a) R^α_hi` on a basis of each `A_α`.
pub(crate) fn check_intertwining(
    h: &HopfPiCoalgebra,
    r: &RMatrix,
    f1: &Matrix,
    g1: &Matrix,
    check: &str,
    report: &mut VerificationReport,
) {
    let size = r.size();
    let field = h.field();
    for a in h.group().elements() {
        let n = h.dim(a);
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..size {
            for k in 0..size {
                for x in 0..n {
                    let mut l = Vector::zeros(field, n);
                    let mut q = Vector::zeros(field, n);
                    for i in 0..size {
                        let af = star_functional(h, a, &f1.row(i * size + k)).column(x);
                        l = l.add(&algebra_product(h, a, &r.get(a, i, j), &af));
                        let ga = functional_star(h, a, &g1.row(j * size + i)).column(x);
                        q = q.add(&algebra_product(h, a, &ga, &r.get(a, k, i)));
                    }
                    lhs.push(l);
                    rhs.push(q);
                }
            }
        }
        report.compare(
            check,
            &[a],
            Some(a),
            &[size, size, n],
            &Matrix::from_columns(field, n, &lhs),
            &Matrix::from_columns(field, n, &rhs),
        );
    }
}

/// `Δ_{α,β}(R^{αβ}_ji) = Σ_h R^α_jh ⊗ R^β_hi` and `ε(R^1_ji) = δ_ji`.
pub(crate) fn check_r_coalgebra(h: &HopfPiCoalgebra, r: &RMatrix, report: &mut VerificationReport) -> Result<()> {
    let one = h.one();
    let field = h.field();
    let size = r.size();
    for (a, b) in h.group().pairs() {
        let ab = h.mul_g(a, b);
        let lhs = h.comult(a, b).mul(r.matrix(ab))?;
        let mut columns = Vec::new();
        for j in 0..size {
            for i in 0..size {
                let mut acc = Vector::zeros(field, h.dim(a) * h.dim(b));
                for k in 0..size {
                    acc = acc.add(&r.get(a, j, k).kron(&r.get(b, k, i)));
                }
                columns.push(acc);
            }
        }
        let rhs = Matrix::from_columns(field, h.dim(a) * h.dim(b), &columns);
        report.compare(R_COMULT, &[a, b], None, &[size, size], &lhs, &rhs);
    }
    let lhs = h.counit().mul(r.matrix(one))?;
    report.compare(R_COUNIT, &[one], None, &[size, size], &lhs, &delta_matrix(field, size).transpose());
    Ok(())
}

fn check_r(cb: &CovariantBimodule, data: &StructureData, report: &mut VerificationReport) -> Result<()> {
    let h = cb.host();
    let one = h.one();
    let field = h.field();
    let r = data.r.as_ref().expect("bicovariant");
    let eta = data.eta.as_ref().expect("bicovariant");
    let size = r.size();
    for (a, b) in h.group().pairs() {
        let ab = h.mul_g(a, b);
        let lhs = cb.delta_r(a, b)?.mul(data.omega[ab.0].basis())?;
        let rhs = data.omega[a.0].basis().kron(&h.id(b)).mul(&r.stacked(b))?;
        report.compare(R_FRAME, &[a, b], None, &[size], &lhs, &rhs);


        let lhs = cb.delta_l(a, b)?.mul(eta[ab.0].basis())?;
        let ai = h.inv(a);
        let mut columns = Vec::new();
        for j in 0..size {
            let mut acc = Vector::zeros(field, h.dim(a) * cb.dim(b));
            for i in 0..size {
                let s = h.antipode(ai).apply(&r.get(ai, i, j))?;
                acc = acc.add(&s.kron(&eta[b.0].element(i)));
            }
            columns.push(acc);
        }
        let rhs = Matrix::from_columns(field, h.dim(a) * cb.dim(b), &columns);
        report.compare(ETA_LEFT_COACTION, &[a, b], None, &[size], &lhs, &rhs);
    }
    check_r_coalgebra(h, r, report)?;

    for a in h.group().elements() {
        let ai = h.inv(a);
        let n = h.dim(a);
        let unit = h.unit(a);
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut expected = Vec::new();
        for i in 0..size {
            for j in 0..size {
                let mut l = Vector::zeros(field, n);
                let mut q = Vector::zeros(field, n);
                for k in 0..size {
                    let s_ik = h.antipode(ai).apply(&r.get(ai, i, k))?;
                    l = l.add(&algebra_product(h, a, &s_ik, &r.get(a, k, j)));
                    let s_kj = h.antipode(ai).apply(&r.get(ai, k, j))?;
                    q = q.add(&algebra_product(h, a, &r.get(a, i, k), &s_kj));
                }
                left.push(l);
                right.push(q);
                expected.push(if i == j { unit.clone() } else { Vector::zeros(field, n) });
            }
        }
        let m = |v: &[Vector]| Matrix::from_columns(field, n, v);
        report.compare(R_ANTIPODE_LEFT, &[a], None, &[size, size], &m(&left), &m(&expected));
        report.compare(R_ANTIPODE_RIGHT, &[a], None, &[size, size], &m(&right), &m(&expected));

        let basis = eta[a.0].basis();
        let lhs = cb.delta_r(a, one)?.mul(basis)?;
        let rhs = basis.kron(&h.algebra(one).unit_matrix());
        report.compare(ETA_RIGHT_INVARIANT, &[a], None, &[size], &lhs, &rhs);
        let spans = super::frames::invariant_subspace_right(cb, a)?;
        if spans.dim() != size || rank(basis) != size {
            report.record(Violation {
                check: ETA_SPANS.to_string(),
                grading: vec![a],
                domain: None,
                basis: Vec::new(),
                lhs: Vector::from_i64s(field, &[rank(basis) as i64]),
                rhs: Vector::from_i64s(field, &[spans.dim() as i64]),
            });
        }

        let mut columns = Vec::new();
        for i in 0..size {
            let mut acc = Vector::zeros(field, cb.dim(a));
            for j in 0..size {
                acc = acc.add(&cb.bimodule().act_right(a, &eta[a.0].element(j), &r.get(a, j, i)));
            }
            columns.push(acc);
        }
        let rhs = Matrix::from_columns(field, cb.dim(a), &columns);
        report.compare(OMEGA_FROM_ETA, &[a], None, &[size], data.omega[a.0].basis(), &rhs);
    }
    report.run(ETA_SPANS);
    Ok(())
}

/// Every identity relating the frames, `f`, `g` and `R` that applies to `cb`.
pub fn verify_structure(cb: &CovariantBimodule) -> Result<(StructureData, VerificationReport)> {
    let h = cb.host();
    let data = StructureData::extract(cb)?;
    let mut report = VerificationReport::new();
    let size = data.size();
    for (a, b) in h.group().pairs() {
        let ab = h.mul_g(a, b);
        let lhs = cb.delta_l(a, b)?.mul(data.omega[ab.0].basis())?;
        let rhs = h.algebra(a).unit_matrix().kron(data.omega[b.0].basis());
        report.compare(FRAME_TRANSPORT, &[a, b], None, &[size], &lhs, &rhs);
    }
    if let Some(f) = &data.f {
        check_f(cb, &data.omega, f, &mut report)?;
    }
    if data.r.is_some() {
        check_r(cb, &data, &mut report)?;
    }
    if let (Some(f), Some(g), Some(r), Some(eta)) = (&data.f, &data.g, &data.r, &data.eta) {
        for frame in eta {
            check_commutation(cb, frame, g, true, G_COMMUTATION, &mut report)?;
        }
        check_character_laws(h, g, &mut report, G_MULTIPLICATIVE, G_UNITAL);
        check_intertwining(h, r, f.matrix(h.one()), f.matrix(h.one()), R_INTERTWINES_F, &mut report);
    }
    Ok((data, report))
}

/// Whether `f_ij = g_ij` on `A_1`, and the intertwining relation with `g`
/// in place of `f` on the right. Both hold for cocommutative `A_1` and may
/// fail otherwise, so they are kept apart from [`verify_structure`].
pub fn compare_f_and_g(h: &HopfPiCoalgebra, data: &StructureData) -> Option<VerificationReport> {
    let (f, g, r) = (data.f.as_ref()?, data.g.as_ref()?, data.r.as_ref()?);
    let one = h.one();
    let size = data.size();
    let mut report = VerificationReport::new();
    report.compare(F_EQUALS_G, &[one], None, &[size, size], &f.matrix(one).transpose(), &g.matrix(one).transpose());
    check_intertwining(h, r, f.matrix(one), g.matrix(one), R_INTERTWINES_G, &mut report);
    Some(report)
}
