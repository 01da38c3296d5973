//! The standard definitions shipped as `fixtures/*.json`.

use crate::fodc::{counit_kernel, enumerate_right_ideals};
use crate::group::FiniteGroup;
use crate::hopf::{constant_family, group_algebra, inversion, sweedler, sweedler_scaling, twisted_family, HopfPiCoalgebra};
use crate::linalg::{Field, Matrix, Vector};

use super::document::{Document, Names};

fn names(elements: &[&str], basis: &[&str]) -> Names {
    Names {
        elements: elements.iter().map(|s| s.to_string()).collect(),
        bases: vec![basis.iter().map(|s| s.to_string()).collect(); elements.len()],
    }
}

fn augmentation(h: &HopfPiCoalgebra) -> (String, Vec<Vector>) {
    ("kerEps".into(), counit_kernel(h).basis().to_vec())
}

/// The one-dimensional right ideals of a prime-field group algebra, named `R1`, `R2`, ….
fn small_ideals(h: &HopfPiCoalgebra) -> Vec<(String, Vec<Vector>)> {
    let all = enumerate_right_ideals(h, 3).expect("small prime field");
    let kernel = counit_kernel(h).dim();
    let mut out: Vec<(String, Vec<Vector>)> = all
        .iter()
        .filter(|r| r.dim() > 0 && r.dim() < kernel)
        .enumerate()
        .map(|(k, r)| (format!("R{}", k + 1), r.space().basis().to_vec()))
        .collect();
    out.push(augmentation(h));
    out
}

fn twisted_by(h1: &HopfPiCoalgebra, phi: Matrix) -> HopfPiCoalgebra {
    let id = h1.id(h1.one());
    twisted_family(h1, FiniteGroup::cyclic(2), |a| if a.0 == 0 { id.clone() } else { phi.clone() })
        .expect("a Hopf automorphism of order two")
}

/// `(file stem, document)` for every shipped fixture.
pub fn catalog() -> Vec<(&'static str, Document)> {
    let q = Field::Rationals;
    let f3 = Field::prime(3).expect("prime");
    let f7 = Field::prime(7).expect("prime");
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let trivial = ["1"];
    let pair = ["1", "s"];
    let mut out = Vec::new();

    let kz2 = group_algebra(&z2, q);
    out.push(("kz2", Document::from_hopf(&kz2, &names(&trivial, &["e", "u"]), &[augmentation(&kz2)])));

    let mut bad = Document::from_hopf(&kz2, &names(&trivial, &["e", "u"]), &[]);
    bad.antipode[0] = vec![vec![1.into(), 1.into()], vec![0.into(), 0.into()]];
    out.push(("kz2_bad_antipode", bad));

    let f3z2 = group_algebra(&z2, f3);
    out.push(("f3z2", Document::from_hopf(&f3z2, &names(&trivial, &["e", "u"]), &[augmentation(&f3z2)])));

    let f7z3 = group_algebra(&z3, f7);
    out.push(("f7z3", Document::from_hopf(&f7z3, &names(&trivial, &["e", "g", "g2"]), &small_ideals(&f7z3))));

    let const_kz2 = constant_family(&kz2, z2.clone()).expect("verified");
    out.push(("kz2_constant", Document::from_hopf(&const_kz2, &names(&pair, &["e", "u"]), &[augmentation(&const_kz2)])));

    let const_f7z3 = constant_family(&f7z3, z2.clone()).expect("verified");
    out.push((
        "f7z3_constant",
        Document::from_hopf(&const_f7z3, &names(&pair, &["e", "g", "g2"]), &small_ideals(&const_f7z3)),
    ));

    let h4 = sweedler(q);
    let x = Vector::from_i64s(q, &[0, 0, 1, 0]);
    let gx = Vector::from_i64s(q, &[0, 0, 0, 1]);
    let h4_ideals = vec![("Rx".to_string(), vec![x.clone(), gx.clone()]), augmentation(&h4)];
    out.push(("sweedler", Document::from_hopf(&h4, &names(&trivial, &["1", "g", "x", "gx"]), &h4_ideals)));

    let twisted_h4 = twisted_by(&h4, sweedler_scaling(q, -1));
    let twisted_ideals = vec![("Rx".to_string(), vec![x, gx]), augmentation(&twisted_h4)];
    out.push((
        "sweedler_twisted",
        Document::from_hopf(&twisted_h4, &names(&pair, &["1", "g", "x", "gx"]), &twisted_ideals),
    ));

    let qz3 = group_algebra(&z3, q);
    let twisted_z3 = twisted_by(&qz3, inversion(&z3, q));
    out.push((
        "qz3_twisted",
        Document::from_hopf(&twisted_z3, &names(&pair, &["e", "g", "g2"]), &[augmentation(&twisted_z3)]),
    ));
    out
}
