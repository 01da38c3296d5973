//! Checks the Hopf π-coalgebra axioms on a few hosts and shows a witness
//! for a deliberately broken antipode.

use hopfcalc::group::FiniteGroup;
use hopfcalc::hopf::{constant_family, group_algebra, sweedler, verify_hopf, verify_pi_coalgebra, HopfPiCoalgebra};
use hopfcalc::linalg::{Field, Matrix};

fn main() {
    let z2 = FiniteGroup::cyclic(2);
    let kz2 = group_algebra(&z2, Field::Rationals);
    let f7z3 = group_algebra(&FiniteGroup::cyclic(3), Field::prime(7).unwrap());
    let hosts = [
        ("k[Z/2] over Q", kz2.clone()),
        ("F_7[Z/3]", f7z3.clone()),
        ("k[Z/2] constant over Z/2", constant_family(&kz2, z2.clone()).unwrap()),
        ("F_7[Z/3] constant over Z/2", constant_family(&f7z3, z2).unwrap()),
        ("Sweedler's H4", sweedler(Field::Rationals)),
    ];
    for (name, h) in &hosts {
        let coalgebra = verify_pi_coalgebra(h.coalgebra());
        let hopf = verify_hopf(h);
        println!("{name}: π-coalgebra {}, Hopf {}", ok(coalgebra.is_ok()), ok(hopf.is_ok()));
    }

    // S(e) = e, S(u) = e: not an antipode
    let q = Field::Rationals;
    let bad = Matrix::from_i64_rows(q, &[&[1, 1], &[0, 0]]);
    let broken = HopfPiCoalgebra::new(kz2.coalgebra().clone(), kz2.algebras().to_vec(), vec![bad], None).unwrap();
    println!("\nbroken antipode:\n{}", verify_hopf(&broken));
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}
