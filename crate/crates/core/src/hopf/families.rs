use crate::error::{Error, Result};
use crate::group::{ByPair, FiniteGroup, GroupElement};
use crate::linalg::{Field, Matrix, Vector};

use super::algebra::Algebra;
use super::coalgebra::{HopfPiCoalgebra, PiCoalgebra};
use super::verify::verify_hopf;

/// The group algebra `k[G]` over the trivial group, with group-like basis,
/// `S(x) = x⁻¹` and `Ψ_1 = id`.
pub fn group_algebra(g: &FiniteGroup, field: Field) -> HopfPiCoalgebra {
    let n = g.order();
    let one = field.one();
    let constants = g
        .pairs()
        .into_iter()
        .map(|(a, b)| (a.0, b.0, g.mul(a, b).0, one.clone()))
        .collect::<Vec<_>>();
    let algebra = Algebra::from_structure_constants(field, n, constants, Vector::basis(field, n, g.identity().0))
        .expect("group multiplication is well formed");
    let delta = Matrix::from_triplets(field, n * n, n, (0..n).map(|x| (x * n + x, x, field.one())));
    let counit = Matrix::from_fn(field, 1, n, |_, _| field.one());
    let antipode = Matrix::from_triplets(field, n, n, g.elements().map(|x| (g.inv(x).0, x.0, field.one())));
    over_trivial_group(field, algebra, delta, counit, antipode)
}

fn over_trivial_group(field: Field, algebra: Algebra, delta: Matrix, counit: Matrix, antipode: Matrix) -> HopfPiCoalgebra {
    let trivial = FiniteGroup::trivial();
    let n = algebra.dim();
    let comult = ByPair::build(&trivial, |_, _| delta.clone());
    let coalgebra = PiCoalgebra::new(trivial, field, vec![n], comult, counit).expect("shapes agree");
    HopfPiCoalgebra::new(coalgebra, vec![algebra], vec![antipode], Some(vec![Matrix::identity(field, n)]))
        .expect("shapes agree")
}

/// Sweedler's four-dimensional Hopf algebra in the basis `1, g, x, gx`:
/// `g² = 1, x² = 0, xg = -gx, Δx = x ⊗ 1 + g ⊗ x, S(x) = -gx`.
pub fn sweedler(field: Field) -> HopfPiCoalgebra {
    let c = |v: i64| field.from_i64(v);
    let mut constants = (0..4).map(|b| (0, b, b, c(1))).collect::<Vec<_>>();
    constants.extend([
        (1, 0, 1, c(1)),
        (1, 1, 0, c(1)),
        (1, 2, 3, c(1)),
        (1, 3, 2, c(1)),
        (2, 0, 2, c(1)),
        (2, 1, 3, c(-1)),
        (3, 0, 3, c(1)),
        (3, 1, 2, c(-1)),
    ]);
    let algebra =
        Algebra::from_structure_constants(field, 4, constants, Vector::basis(field, 4, 0)).expect("well formed");
    let delta = Matrix::from_triplets(
        field,
        16,
        4,
        [(0, 0, c(1)), (5, 1, c(1)), (8, 2, c(1)), (6, 2, c(1)), (13, 3, c(1)), (3, 3, c(1))],
    );
    let counit = Matrix::from_i64_rows(field, &[&[1, 1, 0, 0]]);
    let antipode = Matrix::from_triplets(field, 4, 4, [(0, 0, c(1)), (1, 1, c(1)), (3, 2, c(-1)), (2, 3, c(1))]);
    over_trivial_group(field, algebra, delta, counit, antipode)
}

/// The Hopf automorphism `g -> g, x -> λx` of Sweedler's algebra.
pub fn sweedler_scaling(field: Field, lambda: i64) -> Matrix {
    let l = field.from_i64(lambda);
    Matrix::from_triplets(
        field,
        4,
        4,
        [(0, 0, field.one()), (1, 1, field.one()), (2, 2, l.clone()), (3, 3, l)],
    )
}

/// The group automorphism `x -> x⁻¹` of `k[G]` for abelian `G`, in the group-like basis.
pub fn inversion(g: &FiniteGroup, field: Field) -> Matrix {
    Matrix::from_triplets(field, g.order(), g.order(), g.elements().map(|x| (g.inv(x).0, x.0, field.one())))
}

fn require_trivial(h1: &HopfPiCoalgebra) -> Result<()> {
    if h1.group().order() != 1 {
        return Err(Error::GradingMismatch("expected a Hopf algebra over the trivial group".into()));
    }
    let report = verify_hopf(h1);
    if !report.is_ok() {
        return Err(Error::VerificationFailed(format!("{} violations", report.violations().len())));
    }
    Ok(())
}

/// `H_α = H` for every `α ∈ π`, with all structure maps those of `H` and
/// `Ψ_α = id`.
pub fn constant_family(h1: &HopfPiCoalgebra, group: FiniteGroup) -> Result<HopfPiCoalgebra> {
    twisted_family(h1, group, |_| h1.id(h1.one()))
}

/// `H_α = H` with `Δ_{α,β} = (φ_β ⊗ id) Δ` and `S_α = S ∘ φ_α`, for a group
/// homomorphism `φ: π -> Aut(H)` into Hopf automorphisms. `Ψ_α = id`.
pub fn twisted_family(
    h1: &HopfPiCoalgebra,
    group: FiniteGroup,
    phi: impl Fn(GroupElement) -> Matrix,
) -> Result<HopfPiCoalgebra> {
    require_trivial(h1)?;
    let one = h1.one();
    let field = h1.field();
    let n = h1.dim(one);
    let maps: Vec<Matrix> = group.elements().map(&phi).collect();
    if maps.iter().any(|m| m.shape() != (n, n)) {
        return Err(Error::DimensionMismatch(format!("automorphisms must be {n}x{n}")));
    }
    let delta = h1.comult(one, one);
    let comult = ByPair::try_build(&group, |_, b| maps[b.0].kron(&h1.id(one)).mul(delta))?;
    let order = group.order();
    let coalgebra = PiCoalgebra::new(group, field, vec![n; order], comult, h1.counit().clone())?;
    let antipode = maps.iter().map(|m| h1.antipode(one).mul(m)).collect::<Result<Vec<_>>>()?;
    let h = HopfPiCoalgebra::new(
        coalgebra,
        vec![h1.algebra(one).clone(); order],
        antipode,
        Some(vec![Matrix::identity(field, n); order]),
    )?;
    let report = verify_hopf(&h);
    if !report.is_ok() {
        return Err(Error::VerificationFailed(format!(
            "twisted family fails {}",
            report.violations()[0].check
        )));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_satisfy_all_axioms() {
        let q = Field::Rationals;
        let f7 = Field::prime(7).unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        for h in [group_algebra(&z2, q), group_algebra(&z3, f7), sweedler(q), sweedler(Field::prime(5).unwrap())] {
            let report = verify_hopf(&h);
            assert!(report.is_ok(), "{report}");
        }
        let kz3 = group_algebra(&z3, q);
        let twisted =
            twisted_family(&kz3, z2.clone(), |a| if a.0 == 0 { kz3.id(kz3.one()) } else { inversion(&z3, q) })
                .unwrap();
        assert_ne!(twisted.comult(GroupElement(0), GroupElement(1)), twisted.comult(GroupElement(0), GroupElement(0)));
        let h4 = sweedler(q);
        let signed = twisted_family(&h4, z2, |a| sweedler_scaling(q, if a.0 == 0 { 1 } else { -1 })).unwrap();
        assert!(verify_hopf(&signed).is_ok());
    }

    #[test]
    fn non_automorphisms_are_rejected() {
        let q = Field::Rationals;
        let z3 = FiniteGroup::cyclic(3);
        let kz3 = group_algebra(&z3, q);
        let doubling = Matrix::identity(q, 3).scale(&q.from_i64(2));
        let r = twisted_family(&kz3, FiniteGroup::cyclic(2), |a| if a.0 == 0 { kz3.id(kz3.one()) } else { doubling.clone() });
        assert!(matches!(r, Err(Error::VerificationFailed(_))));
    }
}
