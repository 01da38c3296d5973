//! π-graded bimodules over a Hopf π-coalgebra and their left/right coactions.

use crate::error::{Error, Result};
use crate::group::{ByPair, GroupElement};
use crate::hopf::HopfPiCoalgebra;
use crate::linalg::{permute_factors, Matrix, Vector};
use crate::report::VerificationReport;

pub const LEFT_ASSOCIATIVE: &str = "left action associative";
pub const LEFT_UNITAL: &str = "left action unital";
pub const RIGHT_ASSOCIATIVE: &str = "right action associative";
pub const RIGHT_UNITAL: &str = "right action unital";
pub const ACTIONS_COMMUTE: &str = "left and right actions commute";
pub const DL_LEFT_LINEAR: &str = "left coaction respects left action";
pub const DL_RIGHT_LINEAR: &str = "left coaction respects right action";
pub const DL_COASSOCIATIVE: &str = "left coaction coassociative";
pub const DL_COUNITAL: &str = "left coaction counital";
pub const DR_LEFT_LINEAR: &str = "right coaction respects left action";
pub const DR_RIGHT_LINEAR: &str = "right coaction respects right action";
pub const DR_COASSOCIATIVE: &str = "right coaction coassociative";
pub const DR_COUNITAL: &str = "right coaction counital";
pub const COACTIONS_COMMUTE: &str = "left and right coactions commute";

/// `Γ_α` for each `α`, with `A_α ⊗ Γ_α -> Γ_α` and `Γ_α ⊗ A_α -> Γ_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiBimodule {
    dims: Vec<usize>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl PiBimodule {
    pub fn new(h: &HopfPiCoalgebra, dims: Vec<usize>, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<PiBimodule> {
        let n = h.group().order();
        if dims.len() != n || left.len() != n || right.len() != n {
            return Err(Error::DimensionMismatch("one space and two actions per grading".into()));
        }
        for a in h.group().elements() {
            let (g, d) = (dims[a.0], h.dim(a));
            if left[a.0].shape() != (g, d * g) || right[a.0].shape() != (g, g * d) {
                return Err(Error::DimensionMismatch(format!("actions on grading {} have wrong shape", a.0)));
            }
        }
        Ok(PiBimodule { dims, left, right })
    }

    pub fn dim(&self, a: GroupElement) -> usize {
        self.dims[a.0]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `a ⊗ ρ -> aρ`
    pub fn left(&self, a: GroupElement) -> &Matrix {
        &self.left[a.0]
    }

    /// `ρ ⊗ b -> ρb`
    pub fn right(&self, a: GroupElement) -> &Matrix {
        &self.right[a.0]
    }

    /// The map `ρ -> xρ`.
    pub fn left_by(&self, a: GroupElement, x: &Vector) -> Matrix {
        let id = Matrix::identity(x.field(), self.dim(a));
        self.left(a).mul(&Matrix::column_of(x).kron(&id)).expect("shapes agree")
    }

    /// The map `ρ -> ρx`.
    pub fn right_by(&self, a: GroupElement, x: &Vector) -> Matrix {
        let id = Matrix::identity(x.field(), self.dim(a));
        self.right(a).mul(&id.kron(&Matrix::column_of(x))).expect("shapes agree")
    }

    pub fn act_left(&self, a: GroupElement, x: &Vector, rho: &Vector) -> Vector {
        self.left(a).apply(&x.kron(rho)).expect("shapes agree")
    }

    pub fn act_right(&self, a: GroupElement, rho: &Vector, x: &Vector) -> Vector {
        self.right(a).apply(&rho.kron(x)).expect("shapes agree")
    }
}

/// A bimodule with `Δ^l_{α,β}: Γ_{αβ} -> A_α ⊗ Γ_β` and/or
/// `Δ^r_{α,β}: Γ_{αβ} -> Γ_α ⊗ A_β`.
#[derive(Clone, Debug)]
pub struct CovariantBimodule<'h> {
    host: &'h HopfPiCoalgebra,
    bimodule: PiBimodule,
    delta_l: Option<ByPair<Matrix>>,
    delta_r: Option<ByPair<Matrix>>,
}

impl<'h> CovariantBimodule<'h> {
    pub fn new(
        host: &'h HopfPiCoalgebra,
        bimodule: PiBimodule,
        delta_l: Option<ByPair<Matrix>>,
        delta_r: Option<ByPair<Matrix>>,
    ) -> Result<CovariantBimodule<'h>> {
        for ((a, b), m) in delta_l.iter().flat_map(|d| d.iter()) {
            let ab = host.mul_g(a, b);
            if m.shape() != (host.dim(a) * bimodule.dim(b), bimodule.dim(ab)) {
                return Err(Error::DimensionMismatch(format!("left coaction ({}, {}) has wrong shape", a.0, b.0)));
            }
        }
        for ((a, b), m) in delta_r.iter().flat_map(|d| d.iter()) {
            let ab = host.mul_g(a, b);
            if m.shape() != (bimodule.dim(a) * host.dim(b), bimodule.dim(ab)) {
                return Err(Error::DimensionMismatch(format!("right coaction ({}, {}) has wrong shape", a.0, b.0)));
            }
        }
        Ok(CovariantBimodule { host, bimodule, delta_l, delta_r })
    }

    pub fn host(&self) -> &'h HopfPiCoalgebra {
        self.host
    }

    pub fn bimodule(&self) -> &PiBimodule {
        &self.bimodule
    }

    pub fn dim(&self, a: GroupElement) -> usize {
        self.bimodule.dim(a)
    }

    pub fn is_left_covariant(&self) -> bool {
        self.delta_l.is_some()
    }

    pub fn is_right_covariant(&self) -> bool {
        self.delta_r.is_some()
    }

    pub fn is_bicovariant(&self) -> bool {
        self.is_left_covariant() && self.is_right_covariant()
    }

    pub fn delta_l(&self, a: GroupElement, b: GroupElement) -> Result<&Matrix> {
        self.delta_l
            .as_ref()
            .map(|d| d.get(a, b))
            .ok_or_else(|| Error::MissingCoaction("no left coaction".into()))
    }

    pub fn delta_r(&self, a: GroupElement, b: GroupElement) -> Result<&Matrix> {
        self.delta_r
            .as_ref()
            .map(|d| d.get(a, b))
            .ok_or_else(|| Error::MissingCoaction("no right coaction".into()))
    }

    /// Bimodule axioms plus every coaction law that applies.
    pub fn verify(&self) -> VerificationReport {
        let mut report = verify_bimodule(self.host, &self.bimodule);
        if self.delta_l.is_some() {
            report.extend(self.verify_left());
        }
        if self.delta_r.is_some() {
            report.extend(self.verify_right());
        }
        if self.is_bicovariant() {
            report.extend(self.verify_commuting());
        }
        report
    }

    fn verify_left(&self) -> VerificationReport {
        let h = self.host;
        let m = &self.bimodule;
        let field = h.field();
        let mut report = VerificationReport::new();
        for name in [DL_LEFT_LINEAR, DL_RIGHT_LINEAR, DL_COASSOCIATIVE, DL_COUNITAL] {
            report.run(name);
        }
        for (a, b) in h.group().pairs() {
            let ab = h.mul_g(a, b);
            let dl = self.delta_l(a, b).expect("present");
            let (da, db, gb, gab, dab) = (h.dim(a), h.dim(b), m.dim(b), m.dim(ab), h.dim(ab));
            let lhs = dl.mul(m.left(ab)).expect("shapes");
            let regroup = permute_factors(field, &[da, db, da, gb], &[0, 2, 1, 3]);
            let rhs = Matrix::compose(&[&h.mult(a).kron(m.left(b)), &regroup, &h.comult(a, b).kron(dl)]).expect("shapes");
            report.compare(DL_LEFT_LINEAR, &[a, b], None, &[dab, gab], &lhs, &rhs);

            let lhs = dl.mul(m.right(ab)).expect("shapes");
            let regroup = permute_factors(field, &[da, gb, da, db], &[0, 2, 1, 3]);
            let rhs = Matrix::compose(&[&h.mult(a).kron(m.right(b)), &regroup, &dl.kron(h.comult(a, b))]).expect("shapes");
            report.compare(DL_RIGHT_LINEAR, &[a, b], None, &[gab, dab], &lhs, &rhs);
        }
        for (a, b, c) in h.group().triples() {
            let (ab, bc) = (h.mul_g(a, b), h.mul_g(b, c));
            let abc = h.mul_g(ab, c);
            let lhs = h
                .comult(a, b)
                .kron(&Matrix::identity(field, m.dim(c)))
                .mul(self.delta_l(ab, c).expect("present"))
                .expect("shapes");
            let rhs = h
                .id(a)
                .kron(self.delta_l(b, c).expect("present"))
                .mul(self.delta_l(a, bc).expect("present"))
                .expect("shapes");
            report.compare(DL_COASSOCIATIVE, &[a, b, c], None, &[m.dim(abc)], &lhs, &rhs);
        }
        let one = h.one();
        for a in h.group().elements() {
            let id = Matrix::identity(field, m.dim(a));
            let lhs = h.counit().kron(&id).mul(self.delta_l(one, a).expect("present")).expect("shapes");
            report.compare(DL_COUNITAL, &[a], None, &[m.dim(a)], &lhs, &id);
        }
        report
    }

    fn verify_right(&self) -> VerificationReport {
        let h = self.host;
        let m = &self.bimodule;
        let field = h.field();
        let mut report = VerificationReport::new();
        for name in [DR_LEFT_LINEAR, DR_RIGHT_LINEAR, DR_COASSOCIATIVE, DR_COUNITAL] {
            report.run(name);
        }
        for (a, b) in h.group().pairs() {
            let ab = h.mul_g(a, b);
            let dr = self.delta_r(a, b).expect("present");
            let (da, db, ga, gab, dab) = (h.dim(a), h.dim(b), m.dim(a), m.dim(ab), h.dim(ab));
            let lhs = dr.mul(m.left(ab)).expect("shapes");
            let regroup = permute_factors(field, &[da, db, ga, db], &[0, 2, 1, 3]);
            let rhs = Matrix::compose(&[&m.left(a).kron(h.mult(b)), &regroup, &h.comult(a, b).kron(dr)]).expect("shapes");
            report.compare(DR_LEFT_LINEAR, &[a, b], None, &[dab, gab], &lhs, &rhs);

            let lhs = dr.mul(m.right(ab)).expect("shapes");
            let regroup = permute_factors(field, &[ga, db, da, db], &[0, 2, 1, 3]);
            let rhs = Matrix::compose(&[&m.right(a).kron(h.mult(b)), &regroup, &dr.kron(h.comult(a, b))]).expect("shapes");
            report.compare(DR_RIGHT_LINEAR, &[a, b], None, &[gab, dab], &lhs, &rhs);
        }
        for (a, b, c) in h.group().triples() {
            let (ab, bc) = (h.mul_g(a, b), h.mul_g(b, c));
            let abc = h.mul_g(ab, c);
            let lhs = Matrix::identity(field, m.dim(a))
                .kron(h.comult(b, c))
                .mul(self.delta_r(a, bc).expect("present"))
                .expect("shapes");
            let rhs = self
                .delta_r(a, b)
                .expect("present")
                .kron(&h.id(c))
                .mul(self.delta_r(ab, c).expect("present"))
                .expect("shapes");
            report.compare(DR_COASSOCIATIVE, &[a, b, c], None, &[m.dim(abc)], &lhs, &rhs);
        }
        let one = h.one();
        for a in h.group().elements() {
            let id = Matrix::identity(field, m.dim(a));
            let lhs = id.kron(h.counit()).mul(self.delta_r(a, one).expect("present")).expect("shapes");
            report.compare(DR_COUNITAL, &[a], None, &[m.dim(a)], &lhs, &id);
        }
        report
    }

    fn verify_commuting(&self) -> VerificationReport {
        let h = self.host;
        let mut report = VerificationReport::new();
        report.run(COACTIONS_COMMUTE);
        for (a, b, c) in h.group().triples() {
            let (ab, bc) = (h.mul_g(a, b), h.mul_g(b, c));
            let abc = h.mul_g(ab, c);
            let lhs = self
                .delta_l(a, b)
                .expect("present")
                .kron(&h.id(c))
                .mul(self.delta_r(ab, c).expect("present"))
                .expect("shapes");
            let rhs = h
                .id(a)
                .kron(self.delta_r(b, c).expect("present"))
                .mul(self.delta_l(a, bc).expect("present"))
                .expect("shapes");
            report.compare(COACTIONS_COMMUTE, &[a, b, c], None, &[self.dim(abc)], &lhs, &rhs);
        }
        report
    }
}

/// Associativity and unitality of both actions, and `(aρ)b = a(ρb)`.
pub fn verify_bimodule(h: &HopfPiCoalgebra, m: &PiBimodule) -> VerificationReport {
    let mut report = VerificationReport::new();
    for name in [LEFT_ASSOCIATIVE, LEFT_UNITAL, RIGHT_ASSOCIATIVE, RIGHT_UNITAL, ACTIONS_COMMUTE] {
        report.run(name);
    }
    let field = h.field();
    for a in h.group().elements() {
        let (d, g) = (h.dim(a), m.dim(a));
        let id_g = Matrix::identity(field, g);
        let id_a = h.id(a);
        let unit = h.algebra(a).unit_matrix();

        let lhs = m.left(a).mul(&h.mult(a).kron(&id_g)).expect("shapes");
        let rhs = m.left(a).mul(&id_a.kron(m.left(a))).expect("shapes");
        report.compare(LEFT_ASSOCIATIVE, &[a], None, &[d, d, g], &lhs, &rhs);
        let lhs = m.left(a).mul(&unit.kron(&id_g)).expect("shapes");
        report.compare(LEFT_UNITAL, &[a], None, &[g], &lhs, &id_g);

        let lhs = m.right(a).mul(&id_g.kron(h.mult(a))).expect("shapes");
        let rhs = m.right(a).mul(&m.right(a).kron(&id_a)).expect("shapes");
        report.compare(RIGHT_ASSOCIATIVE, &[a], None, &[g, d, d], &lhs, &rhs);
        let lhs = m.right(a).mul(&id_g.kron(&unit)).expect("shapes");
        report.compare(RIGHT_UNITAL, &[a], None, &[g], &lhs, &id_g);

        let lhs = m.right(a).mul(&m.left(a).kron(&id_a)).expect("shapes");
        let rhs = m.left(a).mul(&id_a.kron(m.right(a))).expect("shapes");
        report.compare(ACTIONS_COMMUTE, &[a], None, &[d, g, d], &lhs, &rhs);
    }
    report
}
