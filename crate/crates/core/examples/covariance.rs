//! Left, right and bicovariance of calculi, decided from the ideal through
//! the adjoint coaction and compared with the direct check on `N`.

use hopfcalc::fodc::{
    ad_map, calculus_from_ideal, check_ad_coassociative, check_ad_invariant, check_ad_multiplicative,
    check_left_covariant, check_right_covariant, RightIdeal,
};
use hopfcalc::group::FiniteGroup;
use hopfcalc::hopf::{sweedler, sweedler_scaling, twisted_family};
use hopfcalc::linalg::{Field, Vector};

fn main() {
    let q = Field::Rationals;
    let h1 = sweedler(q);
    let flip = sweedler_scaling(q, -1);
    let h = twisted_family(&h1, FiniteGroup::cyclic(2), |a| if a.0 == 0 { h1.id(h1.one()) } else { flip.clone() })
        .unwrap();

    for a in h.group().elements() {
        println!("ad_{}:\n{}", a.0, ad_map(&h, a).unwrap());
    }
    println!("{}", check_ad_coassociative(&h).unwrap());
    println!("{}", check_ad_multiplicative(&h).unwrap());

    let x = Vector::from_i64s(q, &[0, 0, 1, 0]);
    let candidates = [
        ("0", RightIdeal::zero(&h)),
        ("<x>", RightIdeal::generated_by(&h, &[x]).unwrap()),
        ("ker ε", RightIdeal::augmentation(&h)),
    ];
    for (name, r) in &candidates {
        let f = calculus_from_ideal(&h, r).unwrap();
        let ad = check_ad_invariant(&h, r).unwrap();
        println!(
            "R = {name}: ad-invariant {}, left covariant {}, right covariant {}",
            ad.is_ok(),
            check_left_covariant(&f).is_ok(),
            check_right_covariant(&f).is_ok()
        );
    }
}
