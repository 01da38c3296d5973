//! Invariant frames, the functionals `f_ij`, the matrix `R_ij` and the
//! rebuilt bimodule for the universal calculus of `F_7[Z/3]`.

use hopfcalc::fodc::{covariant_bimodule, Fodc};
use hopfcalc::group::FiniteGroup;
use hopfcalc::hopf::group_algebra;
use hopfcalc::linalg::Field;
use hopfcalc::structure::{check_isomorphic, compare_f_and_g, reconstruct, verify_structure};

fn main() {
    let h = group_algebra(&FiniteGroup::cyclic(3), Field::prime(7).unwrap());
    let one = h.one();
    let u = Fodc::universal(&h);
    let cb = covariant_bimodule(&u).unwrap();
    let (data, report) = verify_structure(&cb).unwrap();
    println!("|I| = {}", data.size());
    for frame in &data.omega {
        println!("frame in grading {}: {} elements", frame.grading().0, frame.size());
    }
    let f = data.f.as_ref().unwrap();
    let r = data.r.as_ref().unwrap();
    println!("f on A_1 (row i·k+j):\n{}", f.matrix(one));
    println!("R on A_1 (column j·k+i):\n{}", r.matrix(one));
    println!("{report}");
    if let Some(diagnostic) = compare_f_and_g(&h, &data) {
        println!("f against g:\n{diagnostic}");
    }

    let rebuilt = reconstruct(&h, f.matrix(one), r).unwrap();
    println!("rebuilt bimodule:\n{}", rebuilt.verify());
    println!("{}", check_isomorphic(&cb, &data.omega, &rebuilt).unwrap());
}
