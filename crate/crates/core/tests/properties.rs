use proptest::prelude::*;

use hopfcalc::fodc::{covariant_bimodule, Fodc};
use hopfcalc::group::FiniteGroup;
use hopfcalc::hopf::{constant_family, group_algebra, sweedler};
use hopfcalc::linalg::{kernel, rank, rref, Field, Matrix, Quotient, Subspace, Vector};
use hopfcalc::structure::left_frames;

/// Every vector of `F_p^n`, in lexicographic order.
fn all_vectors(p: u64, n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p as i64).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn modp_matrix() -> impl Strategy<Value = (u64, usize, usize, Vec<i64>)> {
    (prop::sample::select(vec![2u64, 3, 5]), 1usize..=4, 1usize..=4)
        .prop_flat_map(|(p, r, c)| (Just(p), Just(r), Just(c), prop::collection::vec(0..p as i64, r * c)))
}

fn build(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    let rows: Vec<&[i64]> = entries.chunks(cols).take(rows).collect();
    Matrix::from_i64_rows(field, &rows)
}

fn rational_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_matches_brute_force((p, r, c, entries) in modp_matrix()) {
        let field = Field::prime(p).unwrap();
        let m = build(field, r, c, &entries);
        let ker = kernel(&m);
        let solutions: Vec<Vector> = all_vectors(p, c)
            .iter()
            .map(|v| Vector::from_i64s(field, v))
            .filter(|v| m.apply(v).unwrap().is_zero())
            .collect();
        prop_assert_eq!((p as usize).pow(ker.dim() as u32), solutions.len());
        prop_assert_eq!(rank(&m) + ker.dim(), c);
        for v in &solutions {
            prop_assert!(ker.contains(v));
        }
        for b in ker.basis() {
            prop_assert!(m.apply(b).unwrap().is_zero());
        }
    }

    #[test]
    fn rref_is_canonical_under_row_operations(
        (p, r, c, entries) in modp_matrix(),
        ops in prop::collection::vec((0usize..4, 0usize..4, 1i64..5), 0..8),
    ) {
        let field = Field::prime(p).unwrap();
        let m = build(field, r, c, &entries);
        let mut mixed = m.clone();
        for (i, j, s) in ops {
            let (i, j) = (i % r, j % r);
            let op = if i == j {
                // scale row i by a unit
                let unit = field.from_i64(1 + s % (p as i64 - 1).max(1));
                Matrix::from_fn(field, r, r, |a, b| match (a == b, a == i) {
                    (false, _) => field.zero(),
                    (true, true) => unit.clone(),
                    (true, false) => field.one(),
                })
            } else {
                // add s times row j to row i
                Matrix::identity(field, r).add(&Matrix::from_triplets(field, r, r, vec![(i, j, field.from_i64(s))])).unwrap()
            };
            mixed = op.mul(&mixed).unwrap();
        }
        prop_assert_eq!(rref(&m), rref(&mixed));
        let e = rref(&m);
        prop_assert_eq!(rref(&e), e);
    }

    #[test]
    fn rational_kernel_and_rank((r, c, entries) in rational_matrix()) {
        let m = build(Field::Rationals, r, c, &entries);
        let ker = kernel(&m);
        prop_assert_eq!(rank(&m) + ker.dim(), c);
        for b in ker.basis() {
            prop_assert!(m.apply(b).unwrap().is_zero());
        }
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn span_ignores_the_choice_of_spanning_set((p, r, c, entries) in modp_matrix(), shift in 1i64..4) {
        let field = Field::prime(p).unwrap();
        let m = build(field, r, c, &entries);
        let rows: Vec<Vector> = (0..r).map(|i| m.row(i)).collect();
        let mut other: Vec<Vector> = rows.iter().rev().cloned().collect();
        if rows.len() > 1 {
            other.push(rows[0].add(&rows[1].scale(&field.from_i64(shift))));
        }
        prop_assert_eq!(Subspace::span(field, c, &rows), Subspace::span(field, c, &other));
    }

    #[test]
    fn quotient_lift_then_project_is_identity((p, r, c, entries) in modp_matrix(), seed in prop::collection::vec(0i64..5, 4)) {
        let field = Field::prime(p).unwrap();
        let m = build(field, r, c, &entries);
        let q = Quotient::new(kernel(&m));
        let v = Vector::from_i64s(field, &seed[..q.dim()]);
        prop_assert_eq!(q.project(&q.lift(&v)), v);
    }

    #[test]
    fn scalars_print_and_parse_back(n in -50i64..50, d in 1i64..20) {
        let q = Field::Rationals;
        let x = q.parse(&format!("{n}/{d}")).unwrap();
        prop_assert_eq!(q.parse(&x.to_string()).unwrap(), x);
        let f7 = Field::prime(7).unwrap();
        let y = f7.from_i64(n);
        prop_assert_eq!(f7.parse(&y.to_string()).unwrap(), y);
    }

    #[test]
    fn frame_decomposition_round_trips(which in 0usize..3, seed in prop::collection::vec(-4i64..=4, 64)) {
        let q = Field::Rationals;
        let z2 = FiniteGroup::cyclic(2);
        let h = match which {
            0 => group_algebra(&FiniteGroup::cyclic(3), q),
            1 => constant_family(&group_algebra(&z2, q), z2).unwrap(),
            _ => sweedler(q),
        };
        let u = Fodc::universal(&h);
        let cb = covariant_bimodule(&u).unwrap();
        let frames = left_frames(&cb).unwrap();
        let module = cb.bimodule();
        for frame in &frames {
            let a = frame.grading();
            let rho = Vector::from_i64s(q, &seed[..cb.dim(a)]);
            let left = frame.decompose_left(&rho).unwrap();
            let mut sum = Vector::zeros(q, cb.dim(a));
            for (i, x) in left.iter().enumerate() {
                sum = sum.add(&module.act_left(a, x, &frame.element(i)));
            }
            prop_assert_eq!(&sum, &rho);
            let right = frame.decompose_right(&rho).unwrap();
            let mut sum = Vector::zeros(q, cb.dim(a));
            for (i, x) in right.iter().enumerate() {
                sum = sum.add(&module.act_right(a, &frame.element(i), x));
            }
            prop_assert_eq!(&sum, &rho);
        }
    }
}
