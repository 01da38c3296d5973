use std::path::PathBuf;

use hopfcalc::cli::catalog::catalog;
use hopfcalc::cli::document::Document;
use hopfcalc::cli::{run, Execution, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn hpc(args: &[&str]) -> Execution {
    run(std::iter::once("hpc").chain(args.iter().copied()))
}

fn scratch(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("hpc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

fn line<'a>(e: &'a Execution, key: &str) -> &'a str {
    e.stdout
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key:?} line in\n{}", e.stdout))
}

#[test]
fn shipped_fixtures_match_the_catalog() {
    for (name, doc) in catalog() {
        let on_disk = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(on_disk, doc.to_json(), "{name}.json is stale; rerun the export_fixtures example");
        let parsed = Document::from_json(&on_disk).unwrap();
        assert_eq!(parsed, doc);
        parsed.load().unwrap();
    }
}

#[test]
fn verify_passes_on_every_valid_fixture() {
    for (name, _) in catalog() {
        let e = hpc(&["verify", &fixture(name)]);
        let expected = if name == "kz2_bad_antipode" { EXIT_VIOLATION } else { EXIT_OK };
        assert_eq!(e.code, expected, "{name}: {}{}", e.stdout, e.stderr);
    }
}

#[test]
fn broken_antipode_is_reported_with_a_named_witness() {
    let e = hpc(&["verify", &fixture("kz2_bad_antipode")]);
    assert_eq!(e.code, EXIT_VIOLATION);
    assert!(e.stdout.contains("antipode axiom, α=1, basis u"), "{}", e.stdout);
    assert!(e.stdout.ends_with("result: violations found\n"));
}

#[test]
fn universal_calculus_on_kz2() {
    let e = hpc(&["calculus", &fixture("kz2"), "--universal"]);
    assert_eq!(e.code, EXIT_OK, "{}", e.stderr);
    assert_eq!(line(&e, "dim Γ"), "[2]");
    assert_eq!(line(&e, "bicovariant"), "yes");
}

#[test]
fn calculi_from_named_ideals() {
    let e = hpc(&["calculus", &fixture("kz2"), "--ideal", "kerEps"]);
    assert_eq!(line(&e, "dim Γ"), "[0]");
    let e = hpc(&["calculus", &fixture("f7z3"), "--ideal", "R1"]);
    assert_eq!(line(&e, "dim Γ"), "[3]");
    assert_eq!(line(&e, "bicovariant"), "yes");
    let e = hpc(&["calculus", &fixture("sweedler"), "--ideal", "Rx", "--right"]);
    assert_eq!(e.code, EXIT_OK, "{}", e.stderr);
    assert_eq!(line(&e, "right covariant"), "yes");
    assert_eq!(line(&e, "left covariant"), "no");
}

#[test]
fn enumerate_over_f3_z2() {
    let e = hpc(&["enumerate", &fixture("f3z2")]);
    assert_eq!(e.code, EXIT_OK, "{}", e.stderr);
    assert_eq!(line(&e, "ideals"), "2");
    let dims: Vec<&str> = e.stdout.lines().filter_map(|l| l.split("dim Γ ").nth(1)).collect();
    assert_eq!(dims.len(), 2);
    assert!(dims[0].starts_with("[2]") && dims[1].starts_with("[0]"), "{dims:?}");
}

#[test]
fn enumerate_is_deterministic() {
    let path = fixture("f7z3");
    let first = hpc(&["enumerate", &path]);
    let second = hpc(&["enumerate", &path]);
    assert_eq!(first, second);
    let json = hpc(&["--format", "json", "enumerate", &path]);
    assert_eq!(json, hpc(&["--format", "json", "enumerate", &path]));
    let value: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(value["ok"], true);
}

#[test]
fn structure_reports_identities_and_reconstruction() {
    let e = hpc(&["structure", &fixture("kz2"), "--universal"]);
    assert_eq!(e.code, EXIT_OK, "{}", e.stderr);
    assert_eq!(line(&e, "|I|"), "1");
    let e = hpc(&["structure", &fixture("f7z3"), "--universal"]);
    assert_eq!(e.code, EXIT_OK, "{}", e.stderr);
    assert_eq!(line(&e, "|I|"), "2");
    assert!(!e.stdout.contains("FAIL"));
}

#[test]
fn structure_of_a_left_only_calculus_is_a_violation() {
    let e = hpc(&["structure", &fixture("sweedler"), "--ideal", "Rx"]);
    assert_eq!(e.code, EXIT_VIOLATION);
    assert!(e.stderr.contains("not bicovariant"), "{}", e.stderr);
}

#[test]
fn structure_needs_psi() {
    let mut doc = Document::from_json(&std::fs::read_to_string(fixture("kz2")).unwrap()).unwrap();
    doc.psi = None;
    let path = scratch("no_psi.json", &doc.to_json());
    let e = hpc(&["structure", &path, "--universal"]);
    assert_eq!(e.code, EXIT_INPUT, "{}{}", e.stdout, e.stderr);
}

#[test]
fn malformed_input_exits_with_input_error() {
    let text = std::fs::read_to_string(fixture("kz2")).unwrap();
    let truncated = scratch("truncated.json", &text[..text.len() / 2]);
    assert_eq!(hpc(&["verify", &truncated]).code, EXIT_INPUT);

    let floats = scratch("floats.json", &text.replacen("\"counit\": [\n    1,", "\"counit\": [\n    1.0,", 1));
    let e = hpc(&["verify", &floats]);
    assert_eq!(e.code, EXIT_INPUT);
    assert!(e.stderr.contains("not an exact scalar"), "{}", e.stderr);

    assert_eq!(hpc(&["verify", "/nonexistent/definition.json"]).code, EXIT_INPUT);
    assert_eq!(hpc(&["calculus", &fixture("kz2"), "--ideal", "nope"]).code, EXIT_INPUT);
    assert_eq!(hpc(&["enumerate", &fixture("kz2")]).code, EXIT_INPUT);
    assert_eq!(hpc(&["calculus", &fixture("kz2")]).code, EXIT_INPUT);
    assert_eq!(hpc(&["--help"]).code, EXIT_OK);
}
