//! Runs the acceptance criteria and prints one PASS/FAIL line for each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use hopfcalc::cli::catalog::catalog;
use hopfcalc::cli::document::Loaded;
use hopfcalc::cli::run;
use hopfcalc::fodc::{
    calculus_from_ideal, check_ad_coassociative, check_ad_invariant, check_ad_multiplicative, check_bicovariant,
    check_phi_identities, counit_kernel, covariant_bimodule, enumerate_right_ideals, ideal_from_calculus, r_map,
    t_map, universal_kernel, Fodc, RightIdeal,
};
use hopfcalc::group::FiniteGroup;
use hopfcalc::hopf::{constant_family, group_algebra, verify_hopf, verify_pi_coalgebra, HopfPiCoalgebra};
use hopfcalc::linalg::{Field, Subspace, Vector};
use hopfcalc::structure::{check_isomorphic, reconstruct, verify_structure};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every valid shipped definition, loaded through the file format.
fn fixtures() -> Vec<(&'static str, Loaded)> {
    catalog()
        .into_iter()
        .filter(|(name, _)| *name != "kz2_bad_antipode")
        .map(|(name, doc)| (name, doc.load().expect("fixture loads")))
        .collect()
}

fn kz2() -> HopfPiCoalgebra {
    group_algebra(&FiniteGroup::cyclic(2), Field::Rationals)
}

fn f7z3() -> HopfPiCoalgebra {
    group_algebra(&FiniteGroup::cyclic(3), Field::prime(7).unwrap())
}

/// Right ideals of a fixture: all of them over a prime field, otherwise the
/// named ones together with `0` and `ker ε`.
fn ideals_of(loaded: &Loaded) -> Vec<RightIdeal> {
    let h = &loaded.hopf;
    if let Ok(all) = enumerate_right_ideals(h, 3) {
        return all;
    }
    let mut out = vec![RightIdeal::zero(h), RightIdeal::augmentation(h)];
    out.extend(loaded.ideals.iter().map(|(_, r)| r.clone()));
    out
}

/// Brute force: every subspace of `ker ε` spanned by at most two vectors,
/// kept when closed under right multiplication by the basis.
fn right_ideals_by_brute_force(h: &HopfPiCoalgebra) -> Vec<Subspace> {
    let field = h.field();
    let one = h.one();
    let n = h.dim(one);
    let ker = counit_kernel(h);
    let values = field.elements().expect("finite field");
    let mut vectors = vec![Vec::new()];
    for _ in 0..ker.dim() {
        vectors = vectors
            .into_iter()
            .flat_map(|v: Vec<_>| {
                values.iter().map(move |c| {
                    let mut w = v.clone();
                    w.push(c.clone());
                    w
                })
            })
            .collect();
    }
    let elements: Vec<Vector> = vectors
        .iter()
        .map(|coeffs| {
            let mut v = Vector::zeros(field, n);
            for (c, b) in coeffs.iter().zip(ker.basis()) {
                v.axpy(c, b);
            }
            v
        })
        .collect();
    let mut found: Vec<Subspace> = Vec::new();
    for x in &elements {
        for y in &elements {
            let s = Subspace::span(field, n, &[x.clone(), y.clone()]);
            let closed = s.basis().iter().all(|v| {
                (0..n).all(|j| s.contains(&h.algebra(one).mul(v, &Vector::basis(field, n, j))))
            });
            if closed && !found.contains(&s) {
                found.push(s);
            }
        }
    }
    found
}

fn axiom_suite() -> Outcome {
    let z2 = FiniteGroup::cyclic(2);
    let hosts = [
        ("k[Z/2]", kz2()),
        ("F_7[Z/3]", f7z3()),
        ("k[Z/2] constant", constant_family(&kz2(), z2.clone()).unwrap()),
        ("F_7[Z/3] constant", constant_family(&f7z3(), z2).unwrap()),
    ];
    let mut slowest = Duration::ZERO;
    for (name, h) in &hosts {
        let start = Instant::now();
        let coalgebra = verify_pi_coalgebra(h.coalgebra());
        let hopf = verify_hopf(h);
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(coalgebra.is_ok() && hopf.is_ok(), || format!("{name}:\n{coalgebra}{hopf}"))?;
        ensure(took < Duration::from_secs(1), || format!("{name} took {took:?}"))?;
    }
    Ok(format!("4 hosts, slowest {:.1} ms", slowest.as_secs_f64() * 1e3))
}

fn universal_dimensions() -> Outcome {
    let mut count = 0;
    for (name, loaded) in fixtures() {
        let h = &loaded.hopf;
        let ker = counit_kernel(h);
        for a in h.group().elements() {
            let n = h.dim(a);
            let a2 = universal_kernel(h, a);
            ensure(a2.dim() == n * n - n, || format!("{name}: dim A² = {} for n = {n}", a2.dim()))?;
            let full = Subspace::full(h.field(), n);
            let r_image = a2.image_under(&r_map(h, a)).unwrap();
            let t_image = a2.image_under(&t_map(h, a)).unwrap();
            ensure(r_image == full.tensor(&ker), || format!("{name}: r(A²) ≠ A ⊗ ker ε"))?;
            ensure(t_image == ker.tensor(&full), || format!("{name}: t(A²) ≠ ker ε ⊗ A"))?;
            count += 1;
        }
    }
    Ok(format!("{count} components"))
}

fn phi_identities() -> Outcome {
    let z2 = FiniteGroup::cyclic(2);
    let mut pairs = 0;
    for h in [constant_family(&kz2(), z2.clone()).unwrap(), constant_family(&f7z3(), z2.clone()).unwrap()] {
        let report = check_phi_identities(&h).map_err(|e| e.to_string())?;
        ensure(report.is_ok(), || report.to_string())?;
        pairs += h.group().pairs().len();
    }
    Ok(format!("{pairs} grading pairs"))
}

fn round_trip() -> Outcome {
    let h = f7z3();
    let n = h.dim(h.one());
    let ideals = enumerate_right_ideals(&h, 3).map_err(|e| e.to_string())?;
    let oracle = right_ideals_by_brute_force(&h);
    ensure(ideals.len() == 4 && oracle.len() == 4, || format!("{} enumerated, {} by brute force", ideals.len(), oracle.len()))?;
    let mut dims = Vec::new();
    for r in &ideals {
        ensure(oracle.contains(r.space()), || "enumerated ideal missing from the brute-force list".into())?;
        let f = calculus_from_ideal(&h, r).map_err(|e| e.to_string())?;
        let back = ideal_from_calculus(&f).map_err(|e| e.to_string())?;
        ensure(&back == r, || "recovered ideal differs".into())?;
        let expected = n * (n - 1) - n * r.dim();
        ensure(f.dim(h.one()) == expected, || format!("dim Γ = {}, expected {expected}", f.dim(h.one())))?;
        dims.push(f.dim(h.one()));
    }
    ensure(dims == [6, 3, 3, 0], || format!("dims {dims:?}"))?;
    Ok(format!("dim Γ = {dims:?}"))
}

fn ad_equivalence() -> Outcome {
    let mut compared = 0;
    for (name, loaded) in fixtures() {
        let h = &loaded.hopf;
        for r in ideals_of(&loaded) {
            let ad = check_ad_invariant(h, &r).map_err(|e| e.to_string())?.is_ok();
            let f = calculus_from_ideal(h, &r).map_err(|e| e.to_string())?;
            let bi = check_bicovariant(&f).is_ok();
            ensure(ad == bi, || format!("{name}: ad-invariant {ad}, bicovariant {bi} for dim R = {}", r.dim()))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} ideals, 0 disagreements"))
}

fn calculus_axioms() -> Outcome {
    let mut calculi = 0;
    for (name, loaded) in fixtures() {
        let h = &loaded.hopf;
        let mut all = vec![Fodc::universal(h)];
        for r in ideals_of(&loaded) {
            all.push(calculus_from_ideal(h, &r).map_err(|e| e.to_string())?);
        }
        for f in &all {
            let report = f.verify();
            ensure(report.is_ok(), || format!("{name}:\n{report}"))?;
            calculi += 1;
        }
    }
    Ok(format!("{calculi} calculi"))
}

fn structure_suite() -> Outcome {
    let mut sizes = Vec::new();
    for (name, h, expected) in [("k[Z/2]", kz2(), 1), ("F_7[Z/3]", f7z3(), 2)] {
        let u = Fodc::universal(&h);
        let cb = covariant_bimodule(&u).map_err(|e| e.to_string())?;
        let (data, report) = verify_structure(&cb).map_err(|e| e.to_string())?;
        ensure(report.is_ok(), || format!("{name}:\n{report}"))?;
        ensure(data.size() == expected, || format!("{name}: |I| = {}", data.size()))?;
        let (f, r) = (data.f.as_ref().unwrap(), data.r.as_ref().unwrap());
        let rebuilt = reconstruct(&h, f.matrix(h.one()), r).map_err(|e| e.to_string())?;
        let rebuilt_report = rebuilt.verify();
        ensure(rebuilt_report.is_ok(), || format!("{name} rebuilt:\n{rebuilt_report}"))?;
        let iso = check_isomorphic(&cb, &data.omega, &rebuilt).map_err(|e| e.to_string())?;
        ensure(iso.is_ok(), || format!("{name}:\n{iso}"))?;
        sizes.push(data.size());
    }
    Ok(format!("|I| = {sizes:?}, reconstruction matches"))
}

fn ad_identities() -> Outcome {
    let mut hosts = 0;
    for (name, loaded) in fixtures() {
        let h = &loaded.hopf;
        let co = check_ad_coassociative(h).map_err(|e| e.to_string())?;
        let mult = check_ad_multiplicative(h).map_err(|e| e.to_string())?;
        ensure(co.is_ok() && mult.is_ok(), || format!("{name}:\n{co}{mult}"))?;
        hosts += 1;
    }
    Ok(format!("{hosts} fixtures"))
}

fn determinism() -> Outcome {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/f7z3.json");
    let path = path.to_str().unwrap();
    let first = run(["hpc", "enumerate", path]);
    let second = run(["hpc", "enumerate", path]);
    ensure(first.code == 0, || first.stderr.clone())?;
    ensure(first.stdout == second.stdout, || "reports differ".into())?;
    Ok(format!("{} identical bytes", first.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("axiom suite", axiom_suite),
        ("universal calculus dimensions and r, t images", universal_dimensions),
        ("r, t against the coactions on constant families", phi_identities),
        ("ideal to calculus round trip on F_7[Z/3]", round_trip),
        ("ad-invariance equals bicovariance", ad_equivalence),
        ("Leibniz, surjectivity and d(1) = 0", calculus_axioms),
        ("structure identities and reconstruction", structure_suite),
        ("ad coassociativity and multiplicativity", ad_identities),
        ("deterministic enumeration", determinism),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}\n{why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of 9 passed in {:.2}s", 9 - failures, start.elapsed().as_secs_f64());
    if failures > 0 {
        std::process::exit(1);
    }
}
