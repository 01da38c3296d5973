//! Pass/fail records for identity checks, with concrete witnesses.

use std::fmt;

use crate::group::GroupElement;
use crate::linalg::{Matrix, Vector};

/// One failed instance of an identity: the gradings involved, the basis
/// element it was evaluated on, and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub grading: Vec<GroupElement>,
    /// Component whose basis `basis` indexes; `None` for other spaces.
    pub domain: Option<GroupElement>,
    /// Multi-index of the basis element, one entry per tensor factor.
    pub basis: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grading: Vec<String> = self.grading.iter().map(|g| g.0.to_string()).collect();
        let basis: Vec<String> = self.basis.iter().map(|b| b.to_string()).collect();
        write!(f, "{} at grading ({})", self.check, grading.join(", "))?;
        if !basis.is_empty() {
            write!(f, " basis ({})", basis.join(", "))?;
        }
        if self.lhs.is_empty() && self.rhs.is_empty() {
            return Ok(());
        }
        write!(f, ": {} != {}", self.lhs, self.rhs)
    }
}

/// Names of the checks that ran, in order, and every violation found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    checks: Vec<String>,
    violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn new() -> VerificationReport {
        VerificationReport::default()
    }

    /// Registers a check so it is listed even when it passes.
    pub fn run(&mut self, check: &str) {
        if !self.checks.iter().any(|c| c == check) {
            self.checks.push(check.to_string());
        }
    }

    pub fn record(&mut self, violation: Violation) {
        self.run(&violation.check.clone());
        self.violations.push(violation);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.run(&c);
        }
        self.violations.extend(other.violations);
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn checks(&self) -> &[String] {
        &self.checks
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn passed(&self, check: &str) -> bool {
        self.checks.iter().any(|c| c == check) && self.violations.iter().all(|v| v.check != check)
    }

    pub fn violations_of<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.check == check)
    }

    /// Records one violation per column where two maps disagree. Column
    /// indices are decoded into multi-indices over `factor_dims`.
    pub fn compare(
        &mut self,
        check: &str,
        grading: &[GroupElement],
        domain: Option<GroupElement>,
        factor_dims: &[usize],
        lhs: &Matrix,
        rhs: &Matrix,
    ) {
        self.run(check);
        if lhs.shape() != rhs.shape() {
            self.record(Violation {
                check: check.to_string(),
                grading: grading.to_vec(),
                domain,
                basis: Vec::new(),
                lhs: Vector::zeros(lhs.field(), 0),
                rhs: Vector::zeros(rhs.field(), 0),
            });
            return;
        }
        let (lc, rc) = (lhs.columns(), rhs.columns());
        for j in 0..lc.len() {
            if lc[j] != rc[j] {
                self.record(Violation {
                    check: check.to_string(),
                    grading: grading.to_vec(),
                    domain,
                    basis: decode(j, factor_dims),
                    lhs: lc[j].clone(),
                    rhs: rc[j].clone(),
                });
            }
        }
    }
}

/// Splits a flat tensor index into per-factor indices.
pub fn decode(mut index: usize, factor_dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; factor_dims.len()];
    for k in (0..factor_dims.len()).rev() {
        out[k] = index % factor_dims[k].max(1);
        index /= factor_dims[k].max(1);
    }
    out
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if self.passed(c) { "pass" } else { "FAIL" };
            writeln!(f, "[{tag}] {c}")?;
            for v in self.violations_of(c) {
                writeln!(f, "    {v}")?;
            }
        }
        Ok(())
    }
}
