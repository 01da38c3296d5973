use hopfcalc::fodc::*;
use hopfcalc::group::FiniteGroup;
use hopfcalc::hopf::{constant_family, group_algebra, inversion, sweedler, sweedler_scaling, twisted_family};
use hopfcalc::linalg::{Field, Subspace, Vector};
use hopfcalc::Error;

fn f7z3() -> hopfcalc::hopf::HopfPiCoalgebra {
    group_algebra(&FiniteGroup::cyclic(3), Field::prime(7).unwrap())
}

fn twisted_z3() -> hopfcalc::hopf::HopfPiCoalgebra {
    let field = Field::Rationals;
    let z3 = FiniteGroup::cyclic(3);
    let h1 = group_algebra(&z3, field);
    let inv = inversion(&z3, field);
    twisted_family(&h1, FiniteGroup::cyclic(2), |a| if a.0 == 0 { h1.id(h1.one()) } else { inv.clone() }).unwrap()
}

fn twisted_sweedler() -> hopfcalc::hopf::HopfPiCoalgebra {
    let field = Field::Rationals;
    let h1 = sweedler(field);
    let flip = sweedler_scaling(field, -1);
    twisted_family(&h1, FiniteGroup::cyclic(2), |a| if a.0 == 0 { h1.id(h1.one()) } else { flip.clone() }).unwrap()
}

fn sweedler_non_ad_ideal(h: &hopfcalc::hopf::HopfPiCoalgebra) -> RightIdeal {
    let q = h.field();
    let x = Vector::from_i64s(q, &[0, 0, 1, 0]);
    RightIdeal::generated_by(h, &[x]).unwrap()
}

#[test]
fn universal_calculus_is_bicovariant() {
    for h in [f7z3(), twisted_z3(), twisted_sweedler()] {
        let u = Fodc::universal(&h);
        assert!(u.verify().is_ok());
        let report = check_bicovariant(&u);
        assert!(report.is_ok(), "{report}");
    }
}

#[test]
fn enumeration_over_f7_z3() {
    let h = f7z3();
    let ideals = enumerate_right_ideals(&h, DEFAULT_MAX_DIM).unwrap();
    let dims: Vec<usize> = ideals.iter().map(|r| calculus_from_ideal(&h, r).unwrap().dim(h.one())).collect();
    assert_eq!(dims, vec![6, 3, 3, 0]);
    for r in &ideals {
        let f = calculus_from_ideal(&h, r).unwrap();
        assert!(f.verify().is_ok());
        assert!(check_bicovariant(&f).is_ok());
        assert_eq!(&ideal_from_calculus(&f).unwrap(), r);
        assert!(is_ad_invariant(&h, r).unwrap());
    }
}

#[test]
fn enumeration_refuses_rationals_and_large_kernels() {
    let h = group_algebra(&FiniteGroup::cyclic(3), Field::Rationals);
    assert!(matches!(enumerate_right_ideals(&h, 3), Err(Error::Unsupported(_))));
    assert!(matches!(enumerate_right_ideals(&f7z3(), 1), Err(Error::TooLarge(_))));
}

#[test]
fn sweedler_ideal_gives_left_but_not_right_covariance() {
    let h = sweedler(Field::Rationals);
    let r = sweedler_non_ad_ideal(&h);
    assert_eq!(r.dim(), 2);
    assert!(!is_ad_invariant(&h, &r).unwrap());
    let f = calculus_from_ideal(&h, &r).unwrap();
    assert!(f.verify().is_ok());
    let left = check_left_covariant(&f);
    assert!(left.is_ok(), "{left}");
    assert!(!is_right_covariant(&f).unwrap());
    assert!(!check_bicovariant(&f).is_ok());
    assert_eq!(ideal_from_calculus(&f).unwrap(), r);
}

#[test]
fn right_calculus_from_ideal_is_right_covariant() {
    let h = twisted_sweedler();
    let r = sweedler_non_ad_ideal(&h);
    let f = calculus_from_ideal_right(&h, &r).unwrap();
    assert!(f.verify().is_ok());
    let report = check_right_covariant(&f);
    assert!(report.is_ok(), "{report}");
    assert_eq!(ideal_from_calculus(&f).unwrap(), r);
}

#[test]
fn ad_identities_hold() {
    for h in [f7z3(), twisted_z3(), twisted_sweedler()] {
        assert!(check_ad_coassociative(&h).unwrap().is_ok());
        assert!(check_ad_multiplicative(&h).unwrap().is_ok());
        assert!(is_ad_invariant(&h, &RightIdeal::augmentation(&h)).unwrap());
    }
}

#[test]
fn r_and_t_are_inverted() {
    for h in [twisted_z3(), twisted_sweedler()] {
        for a in h.group().elements() {
            let d = h.dim(a);
            let id = hopfcalc::linalg::Matrix::identity(h.field(), d * d);
            assert_eq!(r_map(&h, a).mul(&r_inv(&h, a)).unwrap(), id);
            assert_eq!(t_map(&h, a).mul(&t_inv(&h, a).unwrap()).unwrap(), id);
            assert_eq!(t_inv(&h, a).unwrap().mul(&t_map(&h, a)).unwrap(), id);
            let ker = counit_kernel(&h);
            let a2 = universal_kernel(&h, a);
            let full = Subspace::full(h.field(), d);
            assert_eq!(a2.image_under(&r_map(&h, a)).unwrap(), full.tensor(&ker));
            assert_eq!(a2.image_under(&t_map(&h, a)).unwrap(), ker.tensor(&full));
        }
    }
}

#[test]
fn constant_family_calculi_are_bicovariant() {
    let field = Field::prime(3).unwrap();
    let h = constant_family(&group_algebra(&FiniteGroup::cyclic(2), field), FiniteGroup::cyclic(2)).unwrap();
    for r in enumerate_right_ideals(&h, 3).unwrap() {
        let f = calculus_from_ideal(&h, &r).unwrap();
        assert!(check_bicovariant(&f).is_ok());
    }
}

#[test]
fn r_and_t_intertwine_the_universal_coactions() {
    let sweedler_q = sweedler(Field::Rationals);
    let constant = constant_family(&f7z3(), FiniteGroup::cyclic(2)).unwrap();
    for h in [f7z3(), twisted_z3(), twisted_sweedler(), sweedler_q, constant] {
        let report = check_phi_identities(&h).unwrap();
        assert!(report.is_ok(), "{report}");
        assert_eq!(report.checks().len(), 4);
    }
}
