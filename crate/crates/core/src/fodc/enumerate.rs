use crate::error::{Error, Result};
use crate::hopf::HopfPiCoalgebra;
use crate::linalg::{Field, Scalar, Subspace, Vector};

use super::ideal::{counit_kernel, RightIdeal};

pub const DEFAULT_MAX_DIM: usize = 3;
const MAX_PRIME: u64 = 11;
const MAX_CANDIDATES: u128 = 2_000_000;

/// Number of subspaces of `F_q^n`, summed over all dimensions.
fn subspace_count(q: u128, n: usize) -> u128 {
    let mut total = 0u128;
    for k in 0..=n {
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num = num.saturating_mul(q.pow((n - i) as u32) - 1);
            den = den.saturating_mul(q.pow((i + 1) as u32) - 1);
        }
        total = total.saturating_add(num / den);
    }
    total
}

/// Every reduced echelon form of a `k`-dimensional subspace of `F^n`, as row lists.
fn echelon_forms(field: Field, n: usize, k: usize, out: &mut Vec<Vec<Vector>>) {
    let elements = field.elements().expect("finite field");
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free slots: row i, column c > pivots[i], c not a pivot
        let slots: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| ((pivots[i] + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
            .collect();
        let mut counter = vec![0usize; slots.len()];
        loop {
            let mut rows: Vec<Vec<Scalar>> = (0..k)
                .map(|i| {
                    let mut row = vec![field.zero(); n];
                    row[pivots[i]] = field.one();
                    row
                })
                .collect();
            for (s, &(i, c)) in slots.iter().enumerate() {
                rows[i][c] = elements[counter[s]].clone();
            }
            out.push(rows.into_iter().map(|r| Vector::from_entries(field, r)).collect());
            let mut s = 0;
            while s < counter.len() {
                counter[s] += 1;
                if counter[s] < elements.len() {
                    break;
                }
                counter[s] = 0;
                s += 1;
            }
            if s == counter.len() {
                break;
            }
        }
        // next pivot combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in (i + 1)..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All right ideals of `A_1` inside `ker ε`, sorted by dimension and then by
/// echelon basis. Requires `F_p` with `p ≤ 11` and `dim ker ε ≤ max_dim`.
pub fn enumerate_right_ideals(h: &HopfPiCoalgebra, max_dim: usize) -> Result<Vec<RightIdeal>> {
    let field = h.field();
    let p = match field {
        Field::Prime(p) if p <= MAX_PRIME => p,
        Field::Prime(p) => return Err(Error::Unsupported(format!("enumeration over F_{p}; only p ≤ {MAX_PRIME}"))),
        Field::Rationals => return Err(Error::Unsupported("enumeration over Q has infinitely many candidates".into())),
    };
    let ker = counit_kernel(h);
    let n = ker.dim();
    if n > max_dim {
        return Err(Error::TooLarge(format!("dim ker ε = {n} exceeds the limit {max_dim}")));
    }
    let count = subspace_count(p as u128, n);
    if count > MAX_CANDIDATES {
        return Err(Error::TooLarge(format!("{count} candidate subspaces")));
    }
    let ambient = h.dim(h.one());
    let mut ideals = Vec::new();
    for k in 0..=n {
        let mut forms = Vec::new();
        echelon_forms(field, n, k, &mut forms);
        for rows in forms {
            let vectors: Vec<Vector> = rows
                .iter()
                .map(|c| {
                    let mut v = Vector::zeros(field, ambient);
                    for (i, x) in c.nonzero() {
                        v.axpy(x, &ker.basis()[i]);
                    }
                    v
                })
                .collect();
            if let Ok(r) = RightIdeal::new(h, Subspace::span(field, ambient, &vectors)) {
                ideals.push(r);
            }
        }
    }
    ideals.sort_by(|a, b| {
        a.dim()
            .cmp(&b.dim())
            .then_with(|| a.space().basis().iter().map(|v| v.entries().to_vec()).cmp(b.space().basis().iter().map(|v| v.entries().to_vec())))
    });
    Ok(ideals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_subspaces() {
        assert_eq!(subspace_count(2, 2), 5);
        assert_eq!(subspace_count(7, 2), 10);
        assert_eq!(subspace_count(3, 3), 28);
    }

    #[test]
    fn echelon_forms_match_counts() {
        for (p, n) in [(2u64, 3usize), (3, 3), (5, 2)] {
            let field = Field::prime(p).unwrap();
            let mut all = Vec::new();
            for k in 0..=n {
                echelon_forms(field, n, k, &mut all);
            }
            assert_eq!(all.len() as u128, subspace_count(p as u128, n));
        }
    }
}
