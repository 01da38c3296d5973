//! The universal calculus `Γ = ker m`, `d b = 1 ⊗ b - b ⊗ 1`, and the maps
//! `r` and `t` that identify `A²` with `A ⊗ ker ε` and `ker ε ⊗ A`.

use hopfcalc::fodc::{check_bicovariant, check_phi_identities, counit_kernel, r_map, t_map, universal_kernel, Fodc};
use hopfcalc::group::FiniteGroup;
use hopfcalc::hopf::group_algebra;
use hopfcalc::linalg::{Field, Subspace};

fn main() {
    let h = group_algebra(&FiniteGroup::cyclic(3), Field::prime(7).unwrap());
    let a = h.one();
    let n = h.dim(a);
    let u = Fodc::universal(&h);
    println!("F_7[Z/3]: dim A = {n}, dim A² = {} (n² - n = {})", u.dim(a), n * n - n);
    println!("calculus axioms:\n{}", u.verify());
    println!("covariance:\n{}", check_bicovariant(&u));

    let a2 = universal_kernel(&h, a);
    let full = Subspace::full(h.field(), n);
    let ker = counit_kernel(&h);
    let r_image = a2.image_under(&r_map(&h, a)).unwrap();
    let t_image = a2.image_under(&t_map(&h, a)).unwrap();
    println!("r(A²) = A ⊗ ker ε: {}", r_image == full.tensor(&ker));
    println!("t(A²) = ker ε ⊗ A: {}", t_image == ker.tensor(&full));
    println!("\nr, t against the coactions:\n{}", check_phi_identities(&h).unwrap());
}
