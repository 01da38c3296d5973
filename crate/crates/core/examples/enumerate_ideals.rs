//! Every right ideal of `ker ε` in `F_7[Z/3]`, with the calculus each one
//! defines and whether it is bicovariant.

use hopfcalc::fodc::{calculus_from_ideal, check_bicovariant, enumerate_right_ideals, is_ad_invariant, DEFAULT_MAX_DIM};
use hopfcalc::group::FiniteGroup;
use hopfcalc::hopf::group_algebra;
use hopfcalc::linalg::Field;

fn main() {
    let h = group_algebra(&FiniteGroup::cyclic(3), Field::prime(7).unwrap());
    let ideals = enumerate_right_ideals(&h, DEFAULT_MAX_DIM).unwrap();
    println!("{} right ideals", ideals.len());
    for r in &ideals {
        let f = calculus_from_ideal(&h, r).unwrap();
        let basis: Vec<String> = r.space().basis().iter().map(|v| v.to_string()).collect();
        println!(
            "dim R = {}  basis {:?}  dim Γ = {}  ad-invariant {}  bicovariant {}",
            r.dim(),
            basis,
            f.dim(h.one()),
            is_ad_invariant(&h, r).unwrap(),
            check_bicovariant(&f).is_ok()
        );
    }
}
