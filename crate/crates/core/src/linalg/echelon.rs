use std::collections::BTreeMap;

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use super::vector::Vector;
use crate::error::{Error, Result};

type SparseRow = BTreeMap<usize, Scalar>;

fn sparse_from(v: &Vector) -> SparseRow {
    v.nonzero().map(|(j, s)| (j, s.clone())).collect()
}

fn dense_from(field: Field, width: usize, row: &SparseRow) -> Vector {
    let mut v = Vector::zeros(field, width);
    for (j, s) in row {
        v.set(*j, s.clone());
    }
    v
}

/// `target -= c * source`
fn eliminate(target: &mut SparseRow, c: &Scalar, source: &SparseRow) {
    for (j, s) in source {
        let updated = match target.get(j) {
            Some(t) => t - &(c * s),
            None => -(c * s),
        };
        if updated.is_zero() {
            target.remove(j);
        } else {
            target.insert(*j, updated);
        }
    }
}

/// An incrementally maintained reduced row echelon form.
///
/// Every stored row has leading coefficient one and vanishes in the pivot
/// columns of all other rows, so the final form depends only on the span.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    field: Field,
    width: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub(crate) fn new(field: Field, width: usize) -> Echelon {
        Echelon { field, width, rows: BTreeMap::new() }
    }

    fn reduce_sparse(&self, v: &mut SparseRow) {
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                eliminate(v, &c, row);
            }
        }
    }

    /// Adds a row; returns whether it enlarged the span.
    fn insert_sparse(&mut self, mut v: SparseRow) -> bool {
        self.reduce_sparse(&mut v);
        let Some((&lead, c)) = v.iter().next() else {
            return false;
        };
        let c_inv = c.inv().expect("leading entry is nonzero");
        for s in v.values_mut() {
            *s = &*s * &c_inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&lead).cloned() {
                eliminate(row, &c, &v);
            }
        }
        self.rows.insert(lead, v);
        true
    }

    pub(crate) fn insert(&mut self, v: &Vector) -> bool {
        debug_assert_eq!(v.len(), self.width);
        self.insert_sparse(sparse_from(v))
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub(crate) fn rows(&self) -> Vec<Vector> {
        self.rows.values().map(|r| dense_from(self.field, self.width, r)).collect()
    }

    fn from_matrix_rows(m: &Matrix) -> Echelon {
        let mut e = Echelon::new(m.field(), m.cols());
        for i in 0..m.rows() {
            e.insert_sparse(m.row_iter(i).map(|(j, s)| (j, s.clone())).collect());
        }
        e
    }
}

/// Reduced row echelon form of the row space, zero rows dropped.
pub fn rref(m: &Matrix) -> Matrix {
    let e = Echelon::from_matrix_rows(m);
    Matrix::from_rows(m.field(), m.cols(), &e.rows())
}

pub fn rank(m: &Matrix) -> usize {
    Echelon::from_matrix_rows(m).rank()
}

/// Null space `{v : m v = 0}` in canonical echelon form.
pub fn kernel(m: &Matrix) -> Subspace {
    let field = m.field();
    let n = m.cols();
    let e = Echelon::from_matrix_rows(m);
    let pivots = e.pivots();
    let mut generators = Vec::new();
    for free in (0..n).filter(|j| !e.rows.contains_key(j)) {
        let mut v = Vector::basis(field, n, free);
        for (p, row) in &e.rows {
            if let Some(c) = row.get(&free) {
                v.set(*p, -c);
            }
        }
        generators.push(v);
    }
    debug_assert_eq!(generators.len() + pivots.len(), n);
    Subspace::span(field, n, &generators)
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::span(m.field(), m.rows(), &m.columns())
}

/// Two-sided inverse of a square matrix, `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let field = m.field();
    let mut e = Echelon::new(field, 2 * n);
    for i in 0..n {
        let mut row: SparseRow = m.row_iter(i).map(|(j, s)| (j, s.clone())).collect();
        row.insert(n + i, field.one());
        e.insert_sparse(row);
    }
    if e.pivots() != (0..n).collect::<Vec<_>>() {
        return None;
    }
    let t = e
        .rows
        .iter()
        .flat_map(|(p, row)| row.range(n..).map(move |(j, s)| (*p, j - n, s.clone())));
    Some(Matrix::from_triplets(field, n, n, t))
}

/// The unique `x` with `a x = b`; fails if there is none or more than one.
pub fn solve_unique(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch("solve: row counts differ".into()));
    }
    let n = a.cols();
    let field = a.field();
    let mut e = Echelon::new(field, n + b.cols());
    for i in 0..a.rows() {
        let mut row: SparseRow = a.row_iter(i).map(|(j, s)| (j, s.clone())).collect();
        row.extend(b.row_iter(i).map(|(j, s)| (n + j, s.clone())));
        e.insert_sparse(row);
    }
    let pivots = e.pivots();
    if pivots.iter().any(|&p| p >= n) {
        return Err(Error::NoSolution);
    }
    if pivots.len() < n {
        return Err(Error::NotUnique);
    }
    let t = e
        .rows
        .iter()
        .flat_map(|(p, row)| row.range(n..).map(move |(j, s)| (*p, j - n, s.clone())));
    Ok(Matrix::from_triplets(field, n, b.cols(), t))
}

/// A linear subspace of `K^ambient`, held as its reduced row echelon basis.
///
/// Two subspaces are equal exactly when their bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Subspace {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            e.insert(v);
        }
        Subspace::from_echelon(e)
    }

    fn from_echelon(e: Echelon) -> Subspace {
        Subspace { field: e.field, ambient: e.width, pivots: e.pivots(), basis: e.rows() }
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.ambient);
        for (p, v) in self.pivots.iter().zip(&self.basis) {
            e.rows.insert(*p, sparse_from(v));
        }
        e
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let basis = (0..ambient).map(|i| Vector::basis(field, ambient, i)).collect();
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient, &self.basis)
    }

    /// `dim x ambient` matrix reading off coordinates of members of the subspace.
    pub fn coordinate_matrix(&self) -> Matrix {
        let t = self.pivots.iter().enumerate().map(|(i, &p)| (i, p, self.field.one()));
        Matrix::from_triplets(self.field, self.dim(), self.ambient, t)
    }

    /// The remainder of `v` after clearing all pivot coordinates.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut row = sparse_from(v);
        self.echelon().reduce_sparse(&mut row);
        dense_from(self.field, self.ambient, &row)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.len() == self.ambient && self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// First basis vector of `other` lying outside `self`.
    pub fn first_outside(&self, other: &Subspace) -> Option<usize> {
        other.basis.iter().position(|v| !self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` lies outside.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(Vector::from_entries(self.field, self.pivots.iter().map(|&p| v.get(p).clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v);
        }
        Subspace::from_echelon(e)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let inside = other.preimage_of(&self.basis_matrix());
        let vectors: Vec<Vector> = inside
            .basis
            .iter()
            .map(|c| self.basis_matrix().apply(c).expect("coordinates fit the basis"))
            .collect();
        Subspace::span(self.field, self.ambient, &vectors)
    }

    /// `m(self)`.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        let vectors = self.basis.iter().map(|v| m.apply(v)).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(self.field, m.rows(), &vectors))
    }

    /// `{v : m v in self}`.
    pub fn preimage_of(&self, m: &Matrix) -> Subspace {
        let q = Quotient::new(self.clone());
        kernel(&q.projection().mul(m).expect("codomain matches the ambient space"))
    }

    /// `self ⊗ other` inside `K^ambient ⊗ K^other.ambient`.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let vectors: Vec<Vector> =
            self.basis.iter().flat_map(|a| other.basis.iter().map(move |b| a.kron(b))).collect();
        Subspace::span(self.field, self.ambient * other.ambient, &vectors)
    }
}

/// The quotient `K^n / kernel`, with coordinates on the non-pivot positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    kernel: Subspace,
    representatives: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

impl Quotient {
    pub fn new(kernel: Subspace) -> Quotient {
        let field = kernel.field;
        let n = kernel.ambient;
        let representatives: Vec<usize> = (0..n).filter(|j| !kernel.pivots.contains(j)).collect();
        let slot: BTreeMap<usize, usize> =
            representatives.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        let echelon = kernel.echelon();
        let mut t = Vec::new();
        for j in 0..n {
            let mut row: SparseRow = BTreeMap::from([(j, field.one())]);
            echelon.reduce_sparse(&mut row);
            for (i, s) in row {
                t.push((slot[&i], j, s));
            }
        }
        let q = representatives.len();
        let projection = Matrix::from_triplets(field, q, n, t);
        let section = Matrix::from_triplets(
            field,
            n,
            q,
            representatives.iter().enumerate().map(|(k, &j)| (j, k, field.one())),
        );
        Quotient { kernel, representatives, projection, section }
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates in the quotient are the entries at these ambient positions.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &Vector) -> Vector {
        self.projection.apply(v).expect("vector lies in the ambient space")
    }

    pub fn lift(&self, v: &Vector) -> Vector {
        self.section.apply(v).expect("vector lies in the quotient")
    }
}

/// Permutation of tensor factors: output factor `t` is input factor `perm[t]`.
pub fn permute_factors(field: Field, dims: &[usize], perm: &[usize]) -> Matrix {
    assert_eq!(dims.len(), perm.len());
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut t = Vec::with_capacity(total);
    let mut idx = vec![0usize; dims.len()];
    for col in 0..total {
        let mut rem = col;
        for k in (0..dims.len()).rev() {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        let row = perm.iter().zip(&out_dims).fold(0, |acc, (&p, &d)| acc * d + idx[p]);
        t.push((row, col, field.one()));
    }
    Matrix::from_triplets(field, total, total, t)
}

/// `A ⊗ B -> B ⊗ A`.
pub fn flip(field: Field, dim_a: usize, dim_b: usize) -> Matrix {
    permute_factors(field, &[dim_a, dim_b], &[1, 0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_group_algebra_multiplication() {
        // multiplication of k[Z/2] in the basis e, u
        let q = Field::Rationals;
        let m = Matrix::from_i64_rows(q, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        assert_eq!(k.basis()[0], Vector::from_i64s(q, &[1, 0, 0, -1]));
        assert_eq!(k.basis()[1], Vector::from_i64s(q, &[0, 1, -1, 0]));
    }

    #[test]
    fn span_is_canonical() {
        let q = Field::Rationals;
        let a = Subspace::span(q, 3, &[Vector::from_i64s(q, &[2, 4, 6]), Vector::from_i64s(q, &[1, 1, 1])]);
        let b = Subspace::span(
            q,
            3,
            &[Vector::from_i64s(q, &[3, 5, 7]), Vector::from_i64s(q, &[0, 1, 2]), Vector::from_i64s(q, &[1, 2, 3])],
        );
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
    }

    #[test]
    fn quotient_section_splits_projection() {
        let q = Field::Rationals;
        let k = Subspace::span(q, 4, &[Vector::from_i64s(q, &[0, 1, -1, 0])]);
        let quo = Quotient::new(k.clone());
        assert_eq!(quo.dim(), 3);
        let id = quo.projection().mul(quo.section()).unwrap();
        assert_eq!(id, Matrix::identity(q, 3));
        for v in k.basis() {
            assert!(quo.project(v).is_zero());
        }
    }

    #[test]
    fn inverse_and_solve() {
        let f5 = Field::prime(5).unwrap();
        let m = Matrix::from_i64_rows(f5, &[&[1, 2], &[3, 4]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f5, 2));
        assert!(inverse(&Matrix::from_i64_rows(f5, &[&[1, 2], &[2, 4]])).is_none());
        let b = Matrix::from_i64_rows(f5, &[&[1], &[0]]);
        assert_eq!(solve_unique(&m, &b).unwrap(), inv.mul(&b).unwrap());
        let tall = Matrix::from_i64_rows(f5, &[&[1], &[1]]);
        assert!(matches!(solve_unique(&tall, &b), Err(Error::NoSolution)));
    }

    #[test]
    fn flip_swaps_factors() {
        let q = Field::Rationals;
        let a = Vector::from_i64s(q, &[1, 2]);
        let b = Vector::from_i64s(q, &[3, 4, 5]);
        assert_eq!(flip(q, 2, 3).apply(&a.kron(&b)).unwrap(), b.kron(&a));
        let c = Vector::from_i64s(q, &[7, 11]);
        let p = permute_factors(q, &[2, 3, 2], &[2, 0, 1]);
        assert_eq!(p.apply(&a.kron(&b).kron(&c)).unwrap(), c.kron(&a).kron(&b));
    }

    #[test]
    fn intersection_and_preimage() {
        let q = Field::Rationals;
        let a = Subspace::span(q, 3, &[Vector::from_i64s(q, &[1, 0, 0]), Vector::from_i64s(q, &[0, 1, 0])]);
        let b = Subspace::span(q, 3, &[Vector::from_i64s(q, &[0, 1, 0]), Vector::from_i64s(q, &[0, 0, 1])]);
        assert_eq!(a.intersection(&b), Subspace::span(q, 3, &[Vector::from_i64s(q, &[0, 1, 0])]));
        let m = Matrix::from_i64_rows(q, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let pre = a.preimage_of(&m);
        assert_eq!(pre.image_under(&m).unwrap(), a);
    }
}
