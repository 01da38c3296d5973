use hopfcalc::fodc::{calculus_from_ideal, covariant_bimodule, Fodc, RightIdeal};
use hopfcalc::group::FiniteGroup;
use hopfcalc::hopf::{constant_family, group_algebra, inversion, sweedler, sweedler_scaling, twisted_family, HopfPiCoalgebra};
use hopfcalc::linalg::{Field, Vector};
use hopfcalc::structure::*;

fn kz2() -> HopfPiCoalgebra {
    group_algebra(&FiniteGroup::cyclic(2), Field::Rationals)
}

fn f7z3() -> HopfPiCoalgebra {
    group_algebra(&FiniteGroup::cyclic(3), Field::prime(7).unwrap())
}

fn twisted_z3() -> HopfPiCoalgebra {
    let field = Field::Rationals;
    let z3 = FiniteGroup::cyclic(3);
    let h1 = group_algebra(&z3, field);
    let inv = inversion(&z3, field);
    twisted_family(&h1, FiniteGroup::cyclic(2), |a| if a.0 == 0 { h1.id(h1.one()) } else { inv.clone() }).unwrap()
}

fn twisted_sweedler() -> HopfPiCoalgebra {
    let field = Field::Rationals;
    let h1 = sweedler(field);
    let flip = sweedler_scaling(field, -1);
    twisted_family(&h1, FiniteGroup::cyclic(2), |a| if a.0 == 0 { h1.id(h1.one()) } else { flip.clone() }).unwrap()
}

fn constant_kz2() -> HopfPiCoalgebra {
    constant_family(&kz2(), FiniteGroup::cyclic(2)).unwrap()
}

fn all_hosts() -> Vec<(&'static str, HopfPiCoalgebra)> {
    vec![
        ("kz2", kz2()),
        ("f7z3", f7z3()),
        ("sweedler", sweedler(Field::Rationals)),
        ("constant kz2", constant_kz2()),
        ("twisted z3", twisted_z3()),
        ("twisted sweedler", twisted_sweedler()),
    ]
}

#[test]
fn universal_calculi_satisfy_every_structure_identity() {
    for (name, h) in all_hosts() {
        let u = Fodc::universal(&h);
        let cb = covariant_bimodule(&u).unwrap();
        let (data, report) = verify_structure(&cb).unwrap();
        assert!(report.is_ok(), "{name}: {report}");
        assert_eq!(data.size(), h.dim(h.one()) - 1, "{name}");
        assert!(data.f.is_some() && data.g.is_some() && data.r.is_some(), "{name}");
    }
}

#[test]
fn reconstruction_reproduces_universal_calculi() {
    for (name, h) in all_hosts() {
        let u = Fodc::universal(&h);
        let cb = covariant_bimodule(&u).unwrap();
        let data = StructureData::extract(&cb).unwrap();
        let f = data.f.as_ref().unwrap();
        let rebuilt = reconstruct(&h, f.matrix(h.one()), data.r.as_ref().unwrap()).unwrap();
        let report = rebuilt.verify();
        assert!(report.is_ok(), "{name}: {report}");
        let iso = check_isomorphic(&cb, &data.omega, &rebuilt).unwrap();
        assert!(iso.is_ok(), "{name}: {iso}");
    }
}

#[test]
fn left_covariant_sweedler_calculus_has_f_but_no_r() {
    let h = sweedler(Field::Rationals);
    let x = Vector::from_i64s(h.field(), &[0, 0, 1, 0]);
    let r = RightIdeal::generated_by(&h, &[x]).unwrap();
    let f = calculus_from_ideal(&h, &r).unwrap();
    let cb = covariant_bimodule(&f).unwrap();
    let (data, report) = verify_structure(&cb).unwrap();
    assert!(report.is_ok(), "{report}");
    assert_eq!(data.size(), 1);
    assert!(data.r.is_none());
    assert!(matches!(matrix_r(&cb), Err(hopfcalc::Error::NotBicovariant(_))));
}

#[test]
fn f_equals_g_only_for_cocommutative_hosts() {
    for (name, h) in all_hosts() {
        let u = Fodc::universal(&h);
        let cb = covariant_bimodule(&u).unwrap();
        let data = StructureData::extract(&cb).unwrap();
        let report = compare_f_and_g(&h, &data).unwrap();
        let cocommutative = !name.contains("sweedler");
        assert_eq!(report.is_ok(), cocommutative, "{name}: {report}");
        if !cocommutative {
            assert!(!report.passed(verify::F_EQUALS_G));
            assert!(!report.passed(verify::R_INTERTWINES_G));
        }
    }
}
