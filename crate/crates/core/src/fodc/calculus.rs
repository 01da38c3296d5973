use crate::bimodule::PiBimodule;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::hopf::HopfPiCoalgebra;
use crate::linalg::{rank, Matrix, Quotient, Subspace, Vector};
use crate::report::VerificationReport;

use super::coaction::{r_inv, t_map, universal_differential, universal_kernel};
use super::ideal::RightIdeal;

pub const LEIBNIZ: &str = "Leibniz rule";
pub const SURJECTIVE: &str = "Γ spanned by a·d(b)";
pub const UNIT_CLOSED: &str = "d(1) = 0";

/// `Γ_α = A²_α / N_α`, coordinatised through the echelon basis of `A²_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSpace {
    a2: Subspace,
    kernel: Subspace,
    quotient: Quotient,
    projection: Matrix,
    lift: Matrix,
}

impl GammaSpace {
    fn new(a2: Subspace, kernel: Subspace) -> GammaSpace {
        let coords: Vec<Vector> = kernel
            .basis()
            .iter()
            .map(|v| a2.coordinates(v).expect("N lies in A²"))
            .collect();
        let quotient = Quotient::new(Subspace::span(a2.field(), a2.dim(), &coords));
        let projection = quotient.projection().mul(&a2.coordinate_matrix()).expect("shapes agree");
        let lift = a2.basis_matrix().mul(quotient.section()).expect("shapes agree");
        GammaSpace { a2, kernel, quotient, projection, lift }
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// `A²_α ⊆ A_α ⊗ A_α`.
    pub fn a2(&self) -> &Subspace {
        &self.a2
    }

    /// `N_α ⊆ A²_α`, as a subspace of `A_α ⊗ A_α`.
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    /// `A_α ⊗ A_α ⊇ A²_α -> Γ_α`; meaningful on `A²_α` only.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// A section `Γ_α -> A²_α ⊆ A_α ⊗ A_α` of the projection.
    pub fn lift(&self) -> &Matrix {
        &self.lift
    }
}

/// How a calculus was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Universal,
    /// `N_α = r_α⁻¹(A_α ⊗ R)`.
    LeftFromIdeal(RightIdeal),
    /// `N_α = t_α⁻¹(R ⊗ A_α)`.
    RightFromIdeal(RightIdeal),
    Kernels,
}

/// A π-graded first order differential calculus `(Γ_α, d_α)` realised as a
/// quotient of the universal calculus.
#[derive(Clone, Debug)]
pub struct Fodc<'h> {
    host: &'h HopfPiCoalgebra,
    construction: Construction,
    spaces: Vec<GammaSpace>,
    differentials: Vec<Matrix>,
    bimodule: PiBimodule,
}

impl<'h> Fodc<'h> {
    /// `Γ = A²` with `d = D`.
    pub fn universal(h: &'h HopfPiCoalgebra) -> Fodc<'h> {
        let kernels = h.group().elements().map(|a| Subspace::zero(h.field(), h.dim(a).pow(2))).collect();
        Fodc::build(h, kernels, Construction::Universal).expect("the zero family is a sub-bimodule")
    }

    /// The calculus `A² / N` for a given family `N_α ⊆ A²_α` of sub-bimodules.
    pub fn from_kernels(h: &'h HopfPiCoalgebra, kernels: Vec<Subspace>) -> Result<Fodc<'h>> {
        Fodc::build(h, kernels, Construction::Kernels)
    }

    fn build(h: &'h HopfPiCoalgebra, kernels: Vec<Subspace>, construction: Construction) -> Result<Fodc<'h>> {
        if kernels.len() != h.group().order() {
            return Err(Error::DimensionMismatch("one kernel per grading".into()));
        }
        let mut spaces = Vec::new();
        let mut differentials = Vec::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for a in h.group().elements() {
            let n = &kernels[a.0];
            let d = h.dim(a);
            if n.ambient_dim() != d * d {
                return Err(Error::DimensionMismatch(format!("N_{} must live in A ⊗ A", a.0)));
            }
            let a2 = universal_kernel(h, a);
            if let Some(k) = a2.first_outside(n) {
                return Err(Error::NotASubBimodule(format!("basis vector {k} of N_{} is not in A²", a.0)));
            }
            check_sub_bimodule(h, a, n)?;
            let space = GammaSpace::new(a2, n.clone());
            let id_a = h.id(a);
            differentials.push(space.projection().mul(&universal_differential(h, a))?);
            left.push(Matrix::compose(&[
                space.projection(),
                &h.mult(a).kron(&id_a),
                &id_a.kron(space.lift()),
            ])?);
            right.push(Matrix::compose(&[
                space.projection(),
                &id_a.kron(h.mult(a)),
                &space.lift().kron(&id_a),
            ])?);
            spaces.push(space);
        }
        let dims = spaces.iter().map(GammaSpace::dim).collect();
        let bimodule = PiBimodule::new(h, dims, left, right)?;
        Ok(Fodc { host: h, construction, spaces, differentials, bimodule })
    }

    pub fn host(&self) -> &'h HopfPiCoalgebra {
        self.host
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    /// The right ideal this calculus was built from, if any.
    pub fn ideal(&self) -> Option<&RightIdeal> {
        match &self.construction {
            Construction::LeftFromIdeal(r) | Construction::RightFromIdeal(r) => Some(r),
            _ => None,
        }
    }

    pub fn space(&self, a: GroupElement) -> &GammaSpace {
        &self.spaces[a.0]
    }

    pub fn dim(&self, a: GroupElement) -> usize {
        self.spaces[a.0].dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(GammaSpace::dim).collect()
    }

    pub fn kernel(&self, a: GroupElement) -> &Subspace {
        self.spaces[a.0].kernel()
    }

    /// `d_α: A_α -> Γ_α`.
    pub fn d(&self, a: GroupElement) -> &Matrix {
        &self.differentials[a.0]
    }

    pub fn bimodule(&self) -> &PiBimodule {
        &self.bimodule
    }

    /// `Σ a_k d(b_k)` for `q = Σ a_k ⊗ b_k`; equals the class of `q` when `q ∈ A²`.
    pub fn a_db(&self, a: GroupElement) -> Matrix {
        let id = self.host.id(a);
        self.bimodule.left(a).mul(&id.kron(self.d(a))).expect("shapes agree")
    }

    /// `d(ab) = d(a)b + a d(b)`, `d(1) = 0` and `span{a d(b)} = Γ` in every grading.
    pub fn verify(&self) -> VerificationReport {
        let h = self.host;
        let mut report = VerificationReport::new();
        report.run(LEIBNIZ);
        report.run(UNIT_CLOSED);
        report.run(SURJECTIVE);
        for a in h.group().elements() {
            let at_unit = self.d(a).mul(&h.algebra(a).unit_matrix()).expect("shapes");
            report.compare(UNIT_CLOSED, &[a], None, &[1], &at_unit, &Matrix::zeros(h.field(), self.dim(a), 1));
            let id = h.id(a);
            let d = self.d(a);
            let lhs = d.mul(h.mult(a)).expect("shapes");
            let rhs = self
                .bimodule
                .right(a)
                .mul(&d.kron(&id))
                .expect("shapes")
                .add(&self.a_db(a))
                .expect("shapes");
            report.compare(LEIBNIZ, &[a], Some(a), &[h.dim(a), h.dim(a)], &lhs, &rhs);
            if rank(&self.a_db(a)) != self.dim(a) {
                report.record(crate::report::Violation {
                    check: SURJECTIVE.to_string(),
                    grading: vec![a],
                    domain: None,
                    basis: Vec::new(),
                    lhs: Vector::from_i64s(h.field(), &[rank(&self.a_db(a)) as i64]),
                    rhs: Vector::from_i64s(h.field(), &[self.dim(a) as i64]),
                });
            }
        }
        report
    }
}

fn check_sub_bimodule(h: &HopfPiCoalgebra, a: GroupElement, n: &Subspace) -> Result<()> {
    let id = h.id(a);
    let d = h.dim(a);
    for k in 0..d {
        let e = Vector::basis(h.field(), d, k);
        let left = h.algebra(a).left_mult(&e).kron(&id);
        let right = id.kron(&h.algebra(a).right_mult(&e));
        for (j, q) in n.basis().iter().enumerate() {
            if !n.contains(&left.apply(q)?) || !n.contains(&right.apply(q)?) {
                return Err(Error::NotASubBimodule(format!(
                    "basis vector {j} of N_{} times basis element {k} leaves N",
                    a.0
                )));
            }
        }
    }
    Ok(())
}

/// The left covariant calculus of a right ideal `R ⊆ ker ε`:
/// `N_α = r_α⁻¹(A_α ⊗ R)`.
pub fn calculus_from_ideal<'h>(h: &'h HopfPiCoalgebra, r: &RightIdeal) -> Result<Fodc<'h>> {
    r.validate(h)?;
    let kernels = h
        .group()
        .elements()
        .map(|a| Subspace::full(h.field(), h.dim(a)).tensor(r.space()).image_under(&r_inv(h, a)))
        .collect::<Result<Vec<_>>>()?;
    Fodc::build(h, kernels, Construction::LeftFromIdeal(r.clone()))
}

/// The right covariant calculus of a right ideal `R ⊆ ker ε`:
/// `N_α = t_α⁻¹(R ⊗ A_α)`.
pub fn calculus_from_ideal_right<'h>(h: &'h HopfPiCoalgebra, r: &RightIdeal) -> Result<Fodc<'h>> {
    r.validate(h)?;
    let kernels = h
        .group()
        .elements()
        .map(|a| r.space().tensor(&Subspace::full(h.field(), h.dim(a))).preimage_of(&t_map(h, a)))
        .collect();
    Fodc::build(h, kernels, Construction::RightFromIdeal(r.clone()))
}
