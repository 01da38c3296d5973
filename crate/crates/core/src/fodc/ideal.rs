use crate::error::{Error, Result};
use crate::hopf::HopfPiCoalgebra;
use crate::linalg::{kernel, Subspace, Vector};

use super::calculus::{Construction, Fodc};
use super::coaction::{r_map, t_map};

/// A right ideal of `A_1` contained in `ker ε`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RightIdeal {
    space: Subspace,
}

impl RightIdeal {
    /// Checks containment in `ker ε` and closure under right multiplication.
    pub fn new(h: &HopfPiCoalgebra, space: Subspace) -> Result<RightIdeal> {
        let r = RightIdeal { space };
        r.validate(h)?;
        Ok(r)
    }

    pub fn zero(h: &HopfPiCoalgebra) -> RightIdeal {
        RightIdeal { space: Subspace::zero(h.field(), h.dim(h.one())) }
    }

    /// `ker ε` itself.
    pub fn augmentation(h: &HopfPiCoalgebra) -> RightIdeal {
        RightIdeal { space: counit_kernel(h) }
    }

    /// The smallest right ideal containing `generators`.
    pub fn generated_by(h: &HopfPiCoalgebra, generators: &[Vector]) -> Result<RightIdeal> {
        let one = h.one();
        let d = h.dim(one);
        if let Some(g) = generators.iter().find(|g| g.len() != d) {
            return Err(Error::DimensionMismatch(format!("generator of length {} in a {d}-dimensional algebra", g.len())));
        }
        let alg = h.algebra(one);
        let mut span = Subspace::span(h.field(), d, generators);
        loop {
            let mut products: Vec<Vector> = span.basis().to_vec();
            for v in span.basis() {
                for k in 0..d {
                    products.push(alg.mul(v, &Vector::basis(h.field(), d, k)));
                }
            }
            let next = Subspace::span(h.field(), d, &products);
            if next.dim() == span.dim() {
                break;
            }
            span = next;
        }
        RightIdeal::new(h, span)
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub(crate) fn validate(&self, h: &HopfPiCoalgebra) -> Result<()> {
        let one = h.one();
        let d = h.dim(one);
        if self.space.ambient_dim() != d || self.space.field() != h.field() {
            return Err(Error::DimensionMismatch(format!("ideal must live in the {d}-dimensional algebra A_1")));
        }
        let alg = h.algebra(one);
        for (j, v) in self.space.basis().iter().enumerate() {
            let value = h.counit().apply(v)?;
            if !value.is_zero() {
                return Err(Error::NotInKernelOfCounit(format!("basis vector {j} = {v} has counit {}", value.get(0))));
            }
            for k in 0..d {
                let p = alg.mul(v, &Vector::basis(h.field(), d, k));
                if !self.space.contains(&p) {
                    return Err(Error::NotARightIdeal(format!("basis vector {j} times e_{k} = {p} is outside")));
                }
            }
        }
        Ok(())
    }
}

pub fn counit_kernel(h: &HopfPiCoalgebra) -> Subspace {
    kernel(h.counit())
}

/// Recovers `R` from a left or right covariant calculus via
/// `r_1(N_1) = A_1 ⊗ R`, respectively `t_1(N_1) = R ⊗ A_1`.
pub fn ideal_from_calculus(f: &Fodc) -> Result<RightIdeal> {
    let h = f.host();
    let one = h.one();
    let d = h.dim(one);
    let full = Subspace::full(h.field(), d);
    let n1 = f.kernel(one);
    let right_side = matches!(f.construction(), Construction::RightFromIdeal(_));
    // R is read off the second (left version) or first (right version) leg by
    // applying ε to the other one
    let (image, leg) = if right_side {
        (n1.image_under(&t_map(h, one))?, h.id(one).kron(h.counit()))
    } else {
        (n1.image_under(&r_map(h, one))?, h.counit().kron(&h.id(one)))
    };
    let r = image.image_under(&leg)?;
    let expected = if right_side { r.tensor(&full) } else { full.tensor(&r) };
    if expected != image {
        return Err(Error::NotCovariant(format!(
            "N_1 is not of the form {}",
            if right_side { "t⁻¹(R ⊗ A)" } else { "r⁻¹(A ⊗ R)" }
        )));
    }
    RightIdeal::new(h, r)
}
