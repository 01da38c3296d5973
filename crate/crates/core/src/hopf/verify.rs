use rayon::prelude::*;

use crate::group::GroupElement;
use crate::linalg::{flip, Matrix};
use crate::report::{VerificationReport, Violation};

use super::coalgebra::{HopfPiCoalgebra, PiCoalgebra};

pub const COASSOCIATIVITY: &str = "coassociativity";
pub const COUNIT: &str = "counit";
pub const ALGEBRA_ASSOCIATIVITY: &str = "algebra associativity";
pub const ALGEBRA_UNIT: &str = "algebra unit";
pub const COMULT_MULTIPLICATIVE: &str = "comultiplication multiplicative";
pub const COMULT_UNITAL: &str = "comultiplication unital";
pub const COUNIT_MULTIPLICATIVE: &str = "counit multiplicative";
pub const COUNIT_UNITAL: &str = "counit unital";
pub const ANTIPODE_AXIOM: &str = "antipode axiom";
pub const ANTIPODE_INVERTIBLE: &str = "antipode invertible";
pub const ANTIPODE_ANTI_COMULTIPLICATIVE: &str = "antipode anti-comultiplicative";
pub const ANTIPODE_COUNIT: &str = "antipode preserves counit";
pub const ANTIPODE_ANTI_MULTIPLICATIVE: &str = "antipode anti-multiplicative";
pub const ANTIPODE_UNITAL: &str = "antipode unital";
pub const PSI_ALGEBRA_MAP: &str = "psi algebra map";

fn merge(parts: Vec<VerificationReport>, into: &mut VerificationReport) {
    for p in parts {
        into.extend(p);
    }
}

/// Coassociativity on every triple and both counit laws.
pub fn verify_pi_coalgebra(c: &PiCoalgebra) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.run(COASSOCIATIVITY);
    report.run(COUNIT);
    let g = c.group();
    let one = g.identity();
    let parts: Vec<VerificationReport> = g
        .triples()
        .par_iter()
        .map(|&(a, b, cc)| {
            let mut r = VerificationReport::new();
            let ab = g.mul(a, b);
            let bc = g.mul(b, cc);
            let abc = g.mul(ab, cc);
            let lhs = c.comult(a, b).kron(&c.identity_map(cc)).mul(c.comult(ab, cc)).expect("shapes");
            let rhs = c.identity_map(a).kron(c.comult(b, cc)).mul(c.comult(a, bc)).expect("shapes");
            r.compare(COASSOCIATIVITY, &[a, b, cc], Some(abc), &[c.dim(abc)], &lhs, &rhs);
            r
        })
        .collect();
    merge(parts, &mut report);
    for a in g.elements() {
        let id = c.identity_map(a);
        let right = id.kron(c.counit()).mul(c.comult(a, one)).expect("shapes");
        let left = c.counit().kron(&id).mul(c.comult(one, a)).expect("shapes");
        report.compare(COUNIT, &[a], Some(a), &[c.dim(a)], &right, &id);
        report.compare(COUNIT, &[a], Some(a), &[c.dim(a)], &left, &id);
    }
    report
}

/// Every axiom of a Hopf π-coalgebra plus the derived antipode identities
/// (anti-comultiplicative, counit preserving, anti-multiplicative, unital).
pub fn verify_hopf(h: &HopfPiCoalgebra) -> VerificationReport {
    let mut report = verify_pi_coalgebra(h.coalgebra());
    for name in [
        ALGEBRA_ASSOCIATIVITY,
        ALGEBRA_UNIT,
        COMULT_MULTIPLICATIVE,
        COMULT_UNITAL,
        COUNIT_MULTIPLICATIVE,
        COUNIT_UNITAL,
        ANTIPODE_AXIOM,
        ANTIPODE_INVERTIBLE,
        ANTIPODE_ANTI_COMULTIPLICATIVE,
        ANTIPODE_COUNIT,
        ANTIPODE_ANTI_MULTIPLICATIVE,
        ANTIPODE_UNITAL,
    ] {
        report.run(name);
    }
    let g = h.group();
    let one = h.one();
    let field = h.field();

    for a in g.elements() {
        let d = h.dim(a);
        let m = h.mult(a);
        let id = h.id(a);
        let lhs = m.mul(&m.kron(&id)).expect("shapes");
        let rhs = m.mul(&id.kron(m)).expect("shapes");
        report.compare(ALGEBRA_ASSOCIATIVITY, &[a], Some(a), &[d, d, d], &lhs, &rhs);
        let unit = h.algebra(a).unit_matrix();
        report.compare(ALGEBRA_UNIT, &[a], Some(a), &[d], &m.mul(&unit.kron(&id)).expect("shapes"), &id);
        report.compare(ALGEBRA_UNIT, &[a], Some(a), &[d], &m.mul(&id.kron(&unit)).expect("shapes"), &id);
    }

    let parts: Vec<VerificationReport> = g
        .pairs()
        .par_iter()
        .map(|&(a, b)| {
            let mut r = VerificationReport::new();
            let ab = g.mul(a, b);
            let dab = h.dim(ab);
            let delta = h.comult(a, b);
            let target = h.algebra(a).tensor(h.algebra(b));
            let lhs = delta.mul(h.mult(ab)).expect("shapes");
            let rhs = target.mult().mul(&delta.kron(delta)).expect("shapes");
            r.compare(COMULT_MULTIPLICATIVE, &[a, b], Some(ab), &[dab, dab], &lhs, &rhs);
            let lhs = delta.mul(&h.algebra(ab).unit_matrix()).expect("shapes");
            r.compare(COMULT_UNITAL, &[a, b], Some(ab), &[], &lhs, &target.unit_matrix());

            let (ai, bi) = (g.inv(a), g.inv(b));
            let lhs = h.comult(bi, ai).mul(h.antipode(ab)).expect("shapes");
            let rhs = Matrix::compose(&[
                &flip(field, h.dim(ai), h.dim(bi)),
                &h.antipode(a).kron(h.antipode(b)),
                delta,
            ])
            .expect("shapes");
            r.compare(ANTIPODE_ANTI_COMULTIPLICATIVE, &[a, b], Some(ab), &[dab], &lhs, &rhs);
            r
        })
        .collect();
    merge(parts, &mut report);

    let eps = h.counit();
    let d1 = h.dim(one);
    let lhs = eps.mul(h.mult(one)).expect("shapes");
    report.compare(COUNIT_MULTIPLICATIVE, &[one], Some(one), &[d1, d1], &lhs, &eps.kron(eps));
    let lhs = eps.mul(&h.algebra(one).unit_matrix()).expect("shapes");
    report.compare(COUNIT_UNITAL, &[one], Some(one), &[], &lhs, &Matrix::identity(field, 1));

    let eps_unit = |a: GroupElement| h.algebra(a).unit_matrix().mul(eps).expect("shapes");
    for a in g.elements() {
        let ai = g.inv(a);
        let target = eps_unit(a);
        let left = Matrix::compose(&[h.mult(a), &h.antipode(ai).kron(&h.id(a)), h.comult(ai, a)]).expect("shapes");
        let right = Matrix::compose(&[h.mult(a), &h.id(a).kron(h.antipode(ai)), h.comult(a, ai)]).expect("shapes");
        report.compare(ANTIPODE_AXIOM, &[a], Some(one), &[d1], &left, &target);
        report.compare(ANTIPODE_AXIOM, &[a], Some(one), &[d1], &right, &target);

        if h.antipode_inverse(a).is_err() {
            report.record(Violation {
                check: ANTIPODE_INVERTIBLE.to_string(),
                grading: vec![a],
                domain: Some(a),
                basis: Vec::new(),
                lhs: crate::linalg::Vector::zeros(field, 0),
                rhs: crate::linalg::Vector::zeros(field, 0),
            });
        }

        let d = h.dim(a);
        let s = h.antipode(a);
        let lhs = s.mul(h.mult(a)).expect("shapes");
        let rhs = Matrix::compose(&[h.mult(ai), &s.kron(s), &flip(field, d, d)]).expect("shapes");
        report.compare(ANTIPODE_ANTI_MULTIPLICATIVE, &[a], Some(a), &[d, d], &lhs, &rhs);
        let lhs = s.mul(&h.algebra(a).unit_matrix()).expect("shapes");
        report.compare(ANTIPODE_UNITAL, &[a], Some(a), &[], &lhs, &h.algebra(ai).unit_matrix());
    }
    let lhs = eps.mul(h.antipode(one)).expect("shapes");
    report.compare(ANTIPODE_COUNIT, &[one], Some(one), &[d1], &lhs, eps);

    if let Some(psi) = h.psi_maps() {
        report.run(PSI_ALGEBRA_MAP);
        for a in g.elements() {
            let p = &psi[a.0];
            let d = h.dim(a);
            let lhs = p.mul(h.mult(a)).expect("shapes");
            let rhs = h.mult(one).mul(&p.kron(p)).expect("shapes");
            report.compare(PSI_ALGEBRA_MAP, &[a], Some(a), &[d, d], &lhs, &rhs);
            let lhs = p.mul(&h.algebra(a).unit_matrix()).expect("shapes");
            report.compare(PSI_ALGEBRA_MAP, &[a], Some(a), &[], &lhs, &h.algebra(one).unit_matrix());
        }
    }
    report
}
