//! Calculi classified by right ideals of `ker ε`: build `Γ = A²/N` from an
//! ideal and recover the ideal from the calculus.

use hopfcalc::fodc::{calculus_from_ideal, calculus_from_ideal_right, ideal_from_calculus, RightIdeal};
use hopfcalc::hopf::sweedler;
use hopfcalc::linalg::{Field, Vector};

fn main() {
    let h = sweedler(Field::Rationals);
    let a = h.one();
    // basis 1, g, x, gx; the right ideal generated by x is span{x, gx}
    let x = Vector::from_i64s(h.field(), &[0, 0, 1, 0]);
    let r = RightIdeal::generated_by(&h, &[x]).unwrap();
    println!("R = span of {} vectors in ker ε", r.dim());

    let left = calculus_from_ideal(&h, &r).unwrap();
    println!("left construction: dim A² = {}, dim N = {}, dim Γ = {}", left.space(a).a2().dim(), left.kernel(a).dim(), left.dim(a));
    println!("{}", left.verify());
    println!("recovered ideal equals R: {}", ideal_from_calculus(&left).unwrap() == r);

    let right = calculus_from_ideal_right(&h, &r).unwrap();
    println!("right construction: dim Γ = {}", right.dim(a));
    println!("recovered ideal equals R: {}", ideal_from_calculus(&right).unwrap() == r);

    for r in [RightIdeal::zero(&h), RightIdeal::augmentation(&h)] {
        let f = calculus_from_ideal(&h, &r).unwrap();
        println!("dim R = {} gives dim Γ = {}", r.dim(), f.dim(a));
    }
}
