use crate::error::{Error, Result};
use crate::group::{ByPair, FiniteGroup, GroupElement};
use crate::linalg::{inverse, Field, Matrix, Vector};

use super::algebra::Algebra;

/// A family of spaces `C_α` with comultiplications `Δ_{α,β}: C_{αβ} -> C_α ⊗ C_β`
/// and a counit `ε: C_1 -> k`. Only shapes are checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiCoalgebra {
    group: FiniteGroup,
    field: Field,
    dims: Vec<usize>,
    comult: ByPair<Matrix>,
    counit: Matrix,
}

impl PiCoalgebra {
    pub fn new(
        group: FiniteGroup,
        field: Field,
        dims: Vec<usize>,
        comult: ByPair<Matrix>,
        counit: Matrix,
    ) -> Result<PiCoalgebra> {
        if dims.len() != group.order() {
            return Err(Error::DimensionMismatch(format!(
                "{} component dimensions for a group of order {}",
                dims.len(),
                group.order()
            )));
        }
        for ((a, b), m) in comult.iter() {
            let ab = group.mul(a, b);
            let expected = (dims[a.0] * dims[b.0], dims[ab.0]);
            if m.shape() != expected {
                return Err(Error::DimensionMismatch(format!(
                    "comultiplication ({}, {}) must be {}x{}, got {}x{}",
                    a.0, b.0, expected.0, expected.1, m.rows(), m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::InvalidField("comultiplication over another field".into()));
            }
        }
        let d1 = dims[group.identity().0];
        if counit.shape() != (1, d1) {
            return Err(Error::DimensionMismatch(format!(
                "counit must be 1x{d1}, got {}x{}",
                counit.rows(),
                counit.cols()
            )));
        }
        Ok(PiCoalgebra { group, field, dims, comult, counit })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self, a: GroupElement) -> usize {
        self.dims[a.0]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn comult(&self, a: GroupElement, b: GroupElement) -> &Matrix {
        self.comult.get(a, b)
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn identity_map(&self, a: GroupElement) -> Matrix {
        Matrix::identity(self.field, self.dim(a))
    }
}

/// A Hopf π-coalgebra: a π-coalgebra whose components are algebras, whose
/// comultiplications and counit are algebra maps, with antipodes
/// `S_α: H_α -> H_{α⁻¹}`. Optional algebra maps `Ψ_α: H_α -> H_1` feed the
/// structure theory of covariant bimodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPiCoalgebra {
    coalgebra: PiCoalgebra,
    algebras: Vec<Algebra>,
    antipode: Vec<Matrix>,
    antipode_inverse: Vec<Option<Matrix>>,
    psi: Option<Vec<Matrix>>,
}

impl HopfPiCoalgebra {
    pub fn new(
        coalgebra: PiCoalgebra,
        algebras: Vec<Algebra>,
        antipode: Vec<Matrix>,
        psi: Option<Vec<Matrix>>,
    ) -> Result<HopfPiCoalgebra> {
        let group = coalgebra.group();
        if algebras.len() != group.order() || antipode.len() != group.order() {
            return Err(Error::DimensionMismatch("one algebra and one antipode per grading".into()));
        }
        for a in group.elements() {
            let alg = &algebras[a.0];
            if alg.dim() != coalgebra.dim(a) {
                return Err(Error::DimensionMismatch(format!(
                    "algebra {} has dimension {}, component has {}",
                    a.0,
                    alg.dim(),
                    coalgebra.dim(a)
                )));
            }
            if alg.field() != coalgebra.field() {
                return Err(Error::InvalidField("algebra over another field".into()));
            }
            let expected = (coalgebra.dim(group.inv(a)), coalgebra.dim(a));
            if antipode[a.0].shape() != expected {
                return Err(Error::DimensionMismatch(format!(
                    "antipode {} must be {}x{}, got {}x{}",
                    a.0,
                    expected.0,
                    expected.1,
                    antipode[a.0].rows(),
                    antipode[a.0].cols()
                )));
            }
        }
        if let Some(psi) = &psi {
            let d1 = coalgebra.dim(group.identity());
            if psi.len() != group.order() {
                return Err(Error::DimensionMismatch("one psi map per grading".into()));
            }
            for a in group.elements() {
                if psi[a.0].shape() != (d1, coalgebra.dim(a)) {
                    return Err(Error::DimensionMismatch(format!(
                        "psi {} must be {}x{}, got {}x{}",
                        a.0,
                        d1,
                        coalgebra.dim(a),
                        psi[a.0].rows(),
                        psi[a.0].cols()
                    )));
                }
            }
        }
        let antipode_inverse = antipode.iter().map(inverse).collect();
        Ok(HopfPiCoalgebra { coalgebra, algebras, antipode, antipode_inverse, psi })
    }

    /// Same data with the given `Ψ_α` maps.
    pub fn with_psi(self, psi: Option<Vec<Matrix>>) -> Result<HopfPiCoalgebra> {
        HopfPiCoalgebra::new(self.coalgebra, self.algebras, self.antipode, psi)
    }

    pub fn coalgebra(&self) -> &PiCoalgebra {
        &self.coalgebra
    }

    pub fn group(&self) -> &FiniteGroup {
        self.coalgebra.group()
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn one(&self) -> GroupElement {
        self.group().identity()
    }

    pub fn inv(&self, a: GroupElement) -> GroupElement {
        self.group().inv(a)
    }

    pub fn mul_g(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.group().mul(a, b)
    }

    pub fn dim(&self, a: GroupElement) -> usize {
        self.coalgebra.dim(a)
    }

    pub fn comult(&self, a: GroupElement, b: GroupElement) -> &Matrix {
        self.coalgebra.comult(a, b)
    }

    pub fn counit(&self) -> &Matrix {
        self.coalgebra.counit()
    }

    pub fn counit_vector(&self) -> Vector {
        self.counit().row(0)
    }

    pub fn algebra(&self, a: GroupElement) -> &Algebra {
        &self.algebras[a.0]
    }

    pub fn algebras(&self) -> &[Algebra] {
        &self.algebras
    }

    pub fn mult(&self, a: GroupElement) -> &Matrix {
        self.algebras[a.0].mult()
    }

    pub fn unit(&self, a: GroupElement) -> &Vector {
        self.algebras[a.0].unit()
    }

    pub fn id(&self, a: GroupElement) -> Matrix {
        self.coalgebra.identity_map(a)
    }

    /// `S_α: H_α -> H_{α⁻¹}`.
    pub fn antipode(&self, a: GroupElement) -> &Matrix {
        &self.antipode[a.0]
    }

    pub fn antipodes(&self) -> &[Matrix] {
        &self.antipode
    }

    /// `S_α⁻¹: H_{α⁻¹} -> H_α`.
    pub fn antipode_inverse(&self, a: GroupElement) -> Result<&Matrix> {
        self.antipode_inverse[a.0].as_ref().ok_or(Error::AntipodeNotInvertible(a.0))
    }

    pub fn psi(&self, a: GroupElement) -> Option<&Matrix> {
        self.psi.as_ref().map(|p| &p[a.0])
    }

    pub fn psi_maps(&self) -> Option<&[Matrix]> {
        self.psi.as_deref()
    }

    /// The functional `E_α = ε ∘ Ψ_α` on `H_α`.
    pub fn character(&self, a: GroupElement) -> Result<Matrix> {
        let psi = self.psi(a).ok_or(Error::MissingPsi)?;
        self.counit().mul(psi)
    }
}
