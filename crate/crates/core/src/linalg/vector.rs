use std::fmt;

use super::scalar::{Field, Scalar};

/// A dense coordinate vector over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: Field, len: usize) -> Vector {
        Vector { field, entries: vec![field.zero(); len] }
    }

    pub fn basis(field: Field, len: usize, index: usize) -> Vector {
        let mut v = Vector::zeros(field, len);
        v.entries[index] = field.one();
        v
    }

    pub fn from_entries(field: Field, entries: Vec<Scalar>) -> Vector {
        debug_assert!(entries.iter().all(|s| field.contains(s)));
        Vector { field, entries }
    }

    pub fn from_i64s(field: Field, values: &[i64]) -> Vector {
        Vector { field, entries: values.iter().map(|v| field.from_i64(*v)).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        self.entries[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().enumerate().filter(|(_, s)| !s.is_zero())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Vector { field: self.field, entries }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Vector { field: self.field, entries }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector { field: self.field, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Scalar, other: &Vector) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    /// Tensor product with index `(i, j) -> i * other.len() + j`.
    pub fn kron(&self, other: &Vector) -> Vector {
        let mut entries = Vec::with_capacity(self.len() * other.len());
        for a in &self.entries {
            for b in &other.entries {
                entries.push(a * b);
            }
        }
        Vector { field: self.field, entries }
    }

    pub fn concat(parts: &[Vector], field: Field) -> Vector {
        let entries = parts.iter().flat_map(|p| p.entries.iter().cloned()).collect();
        Vector { field, entries }
    }

    pub fn slice(&self, start: usize, len: usize) -> Vector {
        Vector { field: self.field, entries: self.entries[start..start + len].to_vec() }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}
