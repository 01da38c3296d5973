use crate::error::{Error, Result};
use crate::linalg::{permute_factors, Field, Matrix, Vector};

/// A finite-dimensional unital algebra: multiplication `A ⊗ A -> A` and unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mult: Matrix,
    unit: Vector,
}

impl Algebra {
    pub fn new(mult: Matrix, unit: Vector) -> Result<Algebra> {
        let dim = unit.len();
        if mult.shape() != (dim, dim * dim) {
            return Err(Error::DimensionMismatch(format!(
                "multiplication of a {dim}-dimensional algebra must be {dim}x{}, got {}x{}",
                dim * dim,
                mult.rows(),
                mult.cols()
            )));
        }
        if mult.field() != unit.field() {
            return Err(Error::InvalidField("multiplication and unit over different fields".into()));
        }
        Ok(Algebra { field: unit.field(), dim, mult, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        Algebra {
            field,
            dim: 1,
            mult: Matrix::identity(field, 1),
            unit: Vector::basis(field, 1, 0),
        }
    }

    /// Structure constants `e_i e_j = Σ_k c e_k` from `(i, j, k, c)` entries.
    pub fn from_structure_constants(
        field: Field,
        dim: usize,
        constants: impl IntoIterator<Item = (usize, usize, usize, crate::linalg::Scalar)>,
        unit: Vector,
    ) -> Result<Algebra> {
        let mut triplets = Vec::new();
        for (i, j, k, c) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "structure constant ({i}, {j}, {k}) outside dimension {dim}"
                )));
            }
            triplets.push((k, i * dim + j, c));
        }
        Algebra::new(Matrix::from_triplets(field, dim, dim * dim, triplets), unit)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn unit_matrix(&self) -> Matrix {
        Matrix::column_of(&self.unit)
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field, self.dim)
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        self.mult.apply(&a.kron(b)).expect("elements of this algebra")
    }

    /// `x -> a x`
    pub fn left_mult(&self, a: &Vector) -> Matrix {
        self.mult.mul(&Matrix::column_of(a).kron(&self.identity())).expect("shapes agree")
    }

    /// `x -> x b`
    pub fn right_mult(&self, b: &Vector) -> Matrix {
        self.mult.mul(&self.identity().kron(&Matrix::column_of(b))).expect("shapes agree")
    }

    /// Structure constants `(i, j, k, c)` with `e_i e_j = Σ c e_k`, sorted.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, crate::linalg::Scalar)> {
        let mut out: Vec<_> = self
            .mult
            .triplets()
            .into_iter()
            .map(|(k, col, c)| (col / self.dim, col % self.dim, k, c))
            .collect();
        out.sort();
        out
    }

    /// `A ⊗ B` with `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (p, q) = (self.dim, other.dim);
        let shuffle = permute_factors(self.field, &[p, q, p, q], &[0, 2, 1, 3]);
        let mult = self.mult.kron(&other.mult).mul(&shuffle).expect("shapes agree");
        Algebra { field: self.field, dim: p * q, mult, unit: self.unit.kron(&other.unit) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_algebra() -> Algebra {
        let q = Field::Rationals;
        let one = q.one();
        let c = vec![(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 0, one)];
        Algebra::from_structure_constants(q, 2, c, Vector::basis(q, 2, 0)).unwrap()
    }

    #[test]
    fn structure_constants_round_trip() {
        let a = z2_algebra();
        let again = Algebra::from_structure_constants(a.field(), 2, a.structure_constants(), a.unit().clone());
        assert_eq!(again.unwrap(), a);
    }

    #[test]
    fn tensor_algebra_multiplies_componentwise() {
        let a = z2_algebra();
        let q = a.field();
        let t = a.tensor(&a);
        let u = Vector::basis(q, 2, 1);
        let e = Vector::basis(q, 2, 0);
        let x = u.kron(&e);
        let y = u.kron(&u);
        assert_eq!(t.mul(&x, &y), e.kron(&u));
        assert_eq!(t.unit(), &e.kron(&e));
    }

    #[test]
    fn rejects_bad_shapes() {
        let q = Field::Rationals;
        assert!(Algebra::new(Matrix::zeros(q, 2, 3), Vector::zeros(q, 2)).is_err());
    }
}
