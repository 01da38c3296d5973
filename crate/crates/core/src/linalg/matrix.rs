use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{Field, Scalar};
use super::vector::Vector;
use crate::error::{Error, Result};

/// Matrices with fewer entries than this are stored densely.
const DENSE_LIMIT: usize = 64;

#[derive(Clone, Debug)]
enum Storage {
    /// Row-major, zeros included.
    Dense(Vec<Scalar>),
    /// One list per row, sorted by column, nonzero entries only.
    Sparse(Vec<Vec<(usize, Scalar)>>),
}

/// An exact matrix acting on column vectors: `rows x cols` maps `K^cols -> K^rows`.
#[derive(Clone, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    storage: Storage,
}

pub enum RowIter<'a> {
    Dense(std::iter::Enumerate<std::slice::Iter<'a, Scalar>>),
    Sparse(std::slice::Iter<'a, (usize, Scalar)>),
}

impl<'a> Iterator for RowIter<'a> {
    type Item = (usize, &'a Scalar);

    fn next(&mut self) -> Option<Self::Item> {
        match self {
            RowIter::Dense(it) => it.find(|(_, s)| !s.is_zero()),
            RowIter::Sparse(it) => it.next().map(|(j, s)| (*j, s)),
        }
    }
}

impl Matrix {
    /// Builds a matrix from sparse rows; each row is sorted and free of zeros.
    fn from_sparse_rows(field: Field, rows: usize, cols: usize, data: Vec<Vec<(usize, Scalar)>>) -> Matrix {
        if rows * cols < DENSE_LIMIT {
            let mut dense = vec![field.zero(); rows * cols];
            for (i, row) in data.into_iter().enumerate() {
                for (j, s) in row {
                    dense[i * cols + j] = s;
                }
            }
            Matrix { field, rows, cols, storage: Storage::Dense(dense) }
        } else {
            Matrix { field, rows, cols, storage: Storage::Sparse(data) }
        }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix::from_sparse_rows(field, rows, cols, vec![Vec::new(); rows])
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let data = (0..n).map(|i| vec![(i, field.one())]).collect();
        Matrix::from_sparse_rows(field, n, n, data)
    }

    /// Sums duplicate positions; drops zeros.
    pub fn from_triplets(
        field: Field,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Matrix {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (i, j, s) in triplets {
            assert!(i < rows && j < cols, "triplet ({i}, {j}) outside {rows}x{cols}");
            if s.is_zero() {
                continue;
            }
            let slot = acc[i].entry(j).or_insert_with(|| field.zero());
            *slot = &*slot + &s;
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, s)| !s.is_zero()).collect())
            .collect();
        Matrix::from_sparse_rows(field, rows, cols, data)
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let data = (0..rows)
            .map(|i| (0..cols).map(|j| (j, f(i, j))).filter(|(_, s)| !s.is_zero()).collect())
            .collect();
        Matrix::from_sparse_rows(field, rows, cols, data)
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        let triplets = columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.nonzero().map(move |(i, s)| (i, j, s.clone())).collect::<Vec<_>>());
        Matrix::from_triplets(field, rows, columns.len(), triplets)
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Matrix {
        let data = rows
            .iter()
            .map(|r| r.nonzero().map(|(j, s)| (j, s.clone())).collect())
            .collect();
        Matrix::from_sparse_rows(field, rows.len(), cols, data)
    }

    /// A single column holding `v`.
    pub fn column_of(v: &Vector) -> Matrix {
        Matrix::from_columns(v.field(), v.len(), std::slice::from_ref(v))
    }

    /// A single row holding `v`.
    pub fn row_of(v: &Vector) -> Matrix {
        Matrix::from_rows(v.field(), v.len(), std::slice::from_ref(v))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.storage, Storage::Dense(_))
    }

    pub fn row_iter(&self, i: usize) -> RowIter<'_> {
        match &self.storage {
            Storage::Dense(d) => RowIter::Dense(d[i * self.cols..(i + 1) * self.cols].iter().enumerate()),
            Storage::Sparse(s) => RowIter::Sparse(s[i].iter()),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match &self.storage {
            Storage::Dense(d) => d[i * self.cols + j].clone(),
            Storage::Sparse(s) => s[i]
                .binary_search_by_key(&j, |(c, _)| *c)
                .map(|k| s[i][k].1.clone())
                .unwrap_or_else(|_| self.field.zero()),
        }
    }

    pub fn nnz(&self) -> usize {
        (0..self.rows).map(|i| self.row_iter(i).count()).sum()
    }

    pub fn triplets(&self) -> Vec<(usize, usize, Scalar)> {
        (0..self.rows)
            .flat_map(|i| self.row_iter(i).map(move |(j, s)| (i, j, s.clone())).collect::<Vec<_>>())
            .collect()
    }

    pub fn row(&self, i: usize) -> Vector {
        let mut v = Vector::zeros(self.field, self.cols);
        for (j, s) in self.row_iter(i) {
            v.set(j, s.clone());
        }
        v
    }

    pub fn column(&self, j: usize) -> Vector {
        let mut v = Vector::zeros(self.field, self.rows);
        for i in 0..self.rows {
            let s = self.get(i, j);
            if !s.is_zero() {
                v.set(i, s);
            }
        }
        v
    }

    pub fn columns(&self) -> Vec<Vector> {
        let mut cols = vec![Vector::zeros(self.field, self.rows); self.cols];
        for i in 0..self.rows {
            for (j, s) in self.row_iter(i) {
                cols[j].set(i, s.clone());
            }
        }
        cols
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rows).all(|i| self.row_iter(i).next().is_none())
    }

    fn check_same_shape(&self, other: &Matrix, what: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Matrix product `self * other`, i.e. the composite "other, then self".
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.field.zero();
        let data = (0..self.rows)
            .map(|i| {
                let mut acc: Vec<Scalar> = Vec::new();
                let mut touched = false;
                for (k, a) in self.row_iter(i) {
                    for (j, b) in other.row_iter(k) {
                        if !touched {
                            acc = vec![zero.clone(); other.cols];
                            touched = true;
                        }
                        acc[j] = &acc[j] + &(a * b);
                    }
                }
                acc.into_iter().enumerate().filter(|(_, s)| !s.is_zero()).collect()
            })
            .collect();
        Ok(Matrix::from_sparse_rows(self.field, self.rows, other.cols, data))
    }

    /// Chains products left to right: `compose(&[a, b, c]) = a * b * c`.
    pub fn compose(factors: &[&Matrix]) -> Result<Matrix> {
        let (first, rest) = factors.split_first().expect("compose needs at least one factor");
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "applying {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = Vector::zeros(self.field, self.rows);
        for i in 0..self.rows {
            let mut acc = self.field.zero();
            for (j, a) in self.row_iter(i) {
                let b = v.get(j);
                if !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            out.set(i, acc);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "sum")?;
        Ok(Matrix::from_triplets(
            self.field,
            self.rows,
            self.cols,
            self.triplets().into_iter().chain(other.triplets()),
        ))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let t = self.triplets().into_iter().map(|(i, j, s)| (i, j, &s * c));
        Matrix::from_triplets(self.field, self.rows, self.cols, t)
    }

    pub fn transpose(&self) -> Matrix {
        let t = self.triplets().into_iter().map(|(i, j, s)| (j, i, s));
        Matrix::from_triplets(self.field, self.cols, self.rows, t)
    }

    /// Kronecker product; row and column index `(i, j) -> i * dim_B + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = other.shape();
        let other_t = other.triplets();
        let mut t = Vec::with_capacity(self.nnz() * other_t.len());
        for (i1, j1, a) in self.triplets() {
            for (i2, j2, b) in &other_t {
                t.push((i1 * r2 + i2, j1 * c2 + j2, &a * b));
            }
        }
        Matrix::from_triplets(self.field, self.rows * r2, self.cols * c2, t)
    }

    /// Kronecker product of several factors, left to right.
    pub fn kron_all(factors: &[&Matrix]) -> Matrix {
        let (first, rest) = factors.split_first().expect("kron_all needs at least one factor");
        rest.iter().fold((*first).clone(), |acc, m| acc.kron(m))
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack with different row counts".into()));
        }
        let t = self
            .triplets()
            .into_iter()
            .chain(other.triplets().into_iter().map(|(i, j, s)| (i, j + self.cols, s)));
        Ok(Matrix::from_triplets(self.field, self.rows, self.cols + other.cols, t))
    }

    /// Columns selected in the given order.
    pub fn select_columns(&self, which: &[usize]) -> Matrix {
        let cols = self.columns();
        let picked: Vec<Vector> = which.iter().map(|&j| cols[j].clone()).collect();
        Matrix::from_columns(self.field, self.rows, &picked)
    }

    /// Rows selected in the given order.
    pub fn select_rows(&self, which: &[usize]) -> Matrix {
        let rows: Vec<Vector> = which.iter().map(|&i| self.row(i)).collect();
        Matrix::from_rows(self.field, self.cols, &rows)
    }

    /// First column where `self` and `other` differ.
    pub fn first_differing_column(&self, other: &Matrix) -> Option<usize> {
        if self.shape() != other.shape() {
            return Some(0);
        }
        let a = self.columns();
        let b = other.columns();
        (0..self.cols).find(|&j| a[j] != b[j])
    }

    /// All columns where `self` and `other` differ.
    pub fn differing_columns(&self, other: &Matrix) -> Vec<usize> {
        if self.shape() != other.shape() {
            return (0..self.cols.max(other.cols)).collect();
        }
        let a = self.columns();
        let b = other.columns();
        (0..self.cols).filter(|&j| a[j] != b[j]).collect()
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Matrix) -> bool {
        self.field == other.field
            && self.shape() == other.shape()
            && (0..self.rows).all(|i| self.row_iter(i).eq(other.row_iter(i)))
    }
}

impl Eq for Matrix {}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn storage_switches_at_the_dense_limit() {
        let q = Field::Rationals;
        assert!(Matrix::identity(q, 7).is_dense());
        assert!(!Matrix::identity(q, 8).is_dense());
        assert_eq!(Matrix::identity(q, 8).nnz(), 8);
    }

    #[test]
    fn dense_and_sparse_products_agree() {
        let q = Field::Rationals;
        let a = Matrix::from_fn(q, 9, 9, |i, j| q.from_i64(((i * 3 + j * 5) % 4) as i64 - 1));
        let small = Matrix::from_fn(q, 3, 3, |i, j| q.from_i64((i + 2 * j) as i64 % 3));
        let big = small.kron(&Matrix::identity(q, 3));
        assert!(small.is_dense() && !big.is_dense());
        let lhs = a.mul(&big).unwrap();
        let mut expected = vec![vec![q.zero(); 9]; 9];
        for (i, row) in expected.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                for k in 0..9 {
                    *slot = &*slot + &(&a.get(i, k) * &big.get(k, j));
                }
            }
        }
        assert_eq!(lhs, Matrix::from_fn(q, 9, 9, |i, j| expected[i][j].clone()));
    }

    #[test]
    #[allow(clippy::identity_op, clippy::erasing_op)]
    fn kron_index_convention() {
        let q = Field::Rationals;
        let a = Matrix::from_i64_rows(q, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64_rows(q, &[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        assert_eq!(k.get(1 * 2 + 0, 0 * 2 + 1), q.from_i64(3 * 5));
        assert_eq!(k.get(0 * 2 + 1, 1 * 2 + 1), q.from_i64(2 * 7));
    }

    #[test]
    fn shape_errors_are_reported() {
        let q = Field::Rationals;
        let a = Matrix::zeros(q, 2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
        assert!(a.apply(&Vector::zeros(q, 2)).is_err());
    }
}
