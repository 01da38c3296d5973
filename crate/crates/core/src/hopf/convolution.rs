use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::linalg::{Matrix, Vector};

use super::algebra::Algebra;
use super::coalgebra::PiCoalgebra;

/// A linear map `C_α -> A` into some algebra `A`, tagged with its grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub grading: GroupElement,
    pub matrix: Matrix,
}

impl GradedMap {
    pub fn new(grading: GroupElement, matrix: Matrix) -> GradedMap {
        GradedMap { grading, matrix }
    }
}

/// `f * g = m ∘ (f ⊗ g) ∘ Δ_{α,β}`, a map `C_{αβ} -> A`.
pub fn convolution(c: &PiCoalgebra, f: &GradedMap, g: &GradedMap, target: &Algebra) -> Result<GradedMap> {
    for (name, m) in [("f", f), ("g", g)] {
        if m.matrix.shape() != (target.dim(), c.dim(m.grading)) {
            return Err(Error::DimensionMismatch(format!(
                "{name} must map a {}-dimensional component into a {}-dimensional algebra",
                c.dim(m.grading),
                target.dim()
            )));
        }
    }
    let matrix = Matrix::compose(&[target.mult(), &f.matrix.kron(&g.matrix), c.comult(f.grading, g.grading)])?;
    Ok(GradedMap { grading: c.group().mul(f.grading, g.grading), matrix })
}

/// The convolution unit `ε(·) 1_A`, living in degree 1.
pub fn convolution_unit(c: &PiCoalgebra, target: &Algebra) -> GradedMap {
    let matrix = target.unit_matrix().mul(c.counit()).expect("counit is a row");
    GradedMap { grading: c.group().identity(), matrix }
}

/// A way of bracketing an iterated comultiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracketing {
    Leaf,
    Node(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    pub fn leaves(&self) -> usize {
        match self {
            Bracketing::Leaf => 1,
            Bracketing::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// `(id ⊗ (id ⊗ ... Δ) ...) Δ`
    pub fn right_comb(n: usize) -> Bracketing {
        assert!(n > 0);
        if n == 1 {
            Bracketing::Leaf
        } else {
            Bracketing::Node(Box::new(Bracketing::Leaf), Box::new(Bracketing::right_comb(n - 1)))
        }
    }

    /// `(... (Δ ⊗ id) ... ⊗ id) Δ`
    pub fn left_comb(n: usize) -> Bracketing {
        assert!(n > 0);
        if n == 1 {
            Bracketing::Leaf
        } else {
            Bracketing::Node(Box::new(Bracketing::left_comb(n - 1)), Box::new(Bracketing::Leaf))
        }
    }

    /// Every bracketing with `n` leaves.
    pub fn all(n: usize) -> Vec<Bracketing> {
        if n == 1 {
            return vec![Bracketing::Leaf];
        }
        let mut out = Vec::new();
        for k in 1..n {
            for l in Bracketing::all(k) {
                for r in Bracketing::all(n - k) {
                    out.push(Bracketing::Node(Box::new(l.clone()), Box::new(r)));
                }
            }
        }
        out
    }
}

/// The map `C_{γ1...γk} -> C_γ1 ⊗ ... ⊗ C_γk` built with the given bracketing.
pub fn iterated_comult_matrix(c: &PiCoalgebra, path: &[GroupElement], shape: &Bracketing) -> Result<Matrix> {
    if path.is_empty() {
        return Err(Error::GradingMismatch("empty path".into()));
    }
    if shape.leaves() != path.len() {
        return Err(Error::GradingMismatch(format!(
            "bracketing has {} leaves for a path of length {}",
            shape.leaves(),
            path.len()
        )));
    }
    match shape {
        Bracketing::Leaf => Ok(c.identity_map(path[0])),
        Bracketing::Node(l, r) => {
            let (left, right) = path.split_at(l.leaves());
            let g = c.group();
            let split = c.comult(g.product(left), g.product(right));
            let lm = iterated_comult_matrix(c, left, l)?;
            let rm = iterated_comult_matrix(c, right, r)?;
            lm.kron(&rm).mul(split)
        }
    }
}

/// Applies the iterated comultiplication along `path` to `source ∈ C_grading`.
pub fn iterated_comult(c: &PiCoalgebra, path: &[GroupElement], grading: GroupElement, source: &Vector) -> Result<Vector> {
    let product = c.group().product(path);
    if path.is_empty() || product != grading {
        return Err(Error::GradingMismatch(format!(
            "path multiplies to {}, source lives in grading {}",
            product.0, grading.0
        )));
    }
    if source.len() != c.dim(grading) {
        return Err(Error::DimensionMismatch(format!(
            "source has length {}, component has dimension {}",
            source.len(),
            c.dim(grading)
        )));
    }
    iterated_comult_matrix(c, path, &Bracketing::right_comb(path.len()))?.apply(source)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| Bracketing::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
    }
}
