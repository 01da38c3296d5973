//! The `hpc` command line: `verify`, `calculus`, `structure` and `enumerate`
//! over `hpc-1` definition files.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical violation,
//! 2 on malformed or unsupported input.

pub mod catalog;
pub mod document;
pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fodc::{
    calculus_from_ideal, calculus_from_ideal_right, check_ad_invariant, check_bicovariant, check_left_covariant,
    check_right_covariant, covariant_bimodule, enumerate_right_ideals, is_left_covariant, is_right_covariant,
    universal_kernel, Fodc, DEFAULT_MAX_DIM,
};
use crate::hopf::verify_hopf;
use crate::structure::{check_isomorphic, compare_f_and_g, reconstruct, verify_structure};

use document::{Document, Loaded};
pub use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hpc", version, about = "Hopf π-coalgebras and their first order differential calculi")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// The universal calculus.
    #[arg(long)]
    pub universal: bool,
    /// The calculus of a named right ideal from the document.
    #[arg(long)]
    pub ideal: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every Hopf π-coalgebra axiom.
    Verify { path: PathBuf },
    /// Build a calculus and decide its covariance.
    Calculus {
        path: PathBuf,
        #[command(flatten)]
        source: Source,
        /// Left covariant construction (default).
        #[arg(long, conflicts_with = "right")]
        left: bool,
        /// Right covariant construction.
        #[arg(long)]
        right: bool,
    },
    /// Invariant frames, f, R and the reconstruction round trip.
    Structure {
        path: PathBuf,
        #[command(flatten)]
        source: Source,
    },
    /// All right ideals in ker ε over a small prime field.
    Enumerate {
        path: PathBuf,
        /// Largest admissible dimension of ker ε.
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::VerificationFailed(_)
        | Error::NotBicovariant(_)
        | Error::NotCovariant(_)
        | Error::StructureInconsistent(_)
        | Error::CodomainViolation(_)
        | Error::AntipodeNotInvertible(_)
        | Error::InternalMismatch(_)
        | Error::DimensionVariesAcrossGrading(_) => EXIT_VIOLATION,
        _ => EXIT_INPUT,
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("HPC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Execution { stdout: String::new(), stderr: text, code }
            } else {
                Execution { stdout: text, stderr: String::new(), code }
            };
        }
    };
    configure_threads();
    let start = Instant::now();
    let outcome = execute(&cli.command);
    let mut stderr = String::new();
    let (stdout, code) = match outcome {
        Ok(report) => {
            let out = match cli.format {
                Format::Text => report.text(),
                Format::Json => report.json(),
            };
            (out, if report.is_ok() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            (String::new(), exit_code(&e))
        }
    };
    if cli.timing {
        stderr.push_str(&format!("elapsed: {:.3}s\n", start.elapsed().as_secs_f64()));
    }
    Execution { stdout, stderr, code }
}

/// Entry point for the binary: runs on the process arguments and returns the exit code.
pub fn main_entry() -> i32 {
    let e = run(std::env::args_os());
    print!("{}", e.stdout);
    eprint!("{}", e.stderr);
    e.code
}

pub fn load(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Document::from_json(&text)
        .and_then(|d| d.load())
        .map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
}

pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Verify { path } => cmd_verify(path),
        Command::Calculus { path, source, right, .. } => cmd_calculus(path, source, *right),
        Command::Structure { path, source } => cmd_structure(path, source),
        Command::Enumerate { path, max_dim } => cmd_enumerate(path, *max_dim),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(v: &[usize]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn describe_host(report: &mut Report, loaded: &Loaded) {
    let h = &loaded.hopf;
    report.line("field", h.field(), json!(h.field().to_string()));
    report.line("group", format!("[{}]", loaded.names.elements.join(", ")), json!(loaded.names.elements));
    let dims: Vec<usize> = h.group().elements().map(|a| h.dim(a)).collect();
    report.line("dim A", list(&dims), json!(dims));
}

/// Runs the axiom suite; `false` means the report already explains why nothing else ran.
fn require_hopf(report: &mut Report, loaded: &Loaded) -> bool {
    let axioms = verify_hopf(&loaded.hopf);
    if axioms.is_ok() {
        report.line("hopf axioms", "pass", json!("pass"));
        true
    } else {
        report.checks("hopf axioms", &axioms, &loaded.names);
        false
    }
}

fn source_label(source: &Source) -> String {
    match &source.ideal {
        Some(name) => format!("--ideal {name}"),
        None => "--universal".into(),
    }
}

fn build<'h>(loaded: &'h Loaded, source: &Source, right: bool) -> Result<Fodc<'h>> {
    match &source.ideal {
        None => Ok(Fodc::universal(&loaded.hopf)),
        Some(name) => {
            let r = loaded.ideal(name)?;
            if right {
                calculus_from_ideal_right(&loaded.hopf, r)
            } else {
                calculus_from_ideal(&loaded.hopf, r)
            }
        }
    }
}

pub fn cmd_verify(path: &Path) -> Result<Report> {
    let loaded = load(path)?;
    let mut report = Report::new(format!("verify {}", path.display()));
    describe_host(&mut report, &loaded);
    report.checks("axioms", &verify_hopf(&loaded.hopf), &loaded.names);
    Ok(report)
}

pub fn cmd_calculus(path: &Path, source: &Source, right: bool) -> Result<Report> {
    let loaded = load(path)?;
    let side = if right { "--right" } else { "--left" };
    let mut report = Report::new(format!("calculus {} {} {side}", path.display(), source_label(source)));
    describe_host(&mut report, &loaded);
    if !require_hopf(&mut report, &loaded) {
        return Ok(report);
    }
    let h = &loaded.hopf;
    let f = build(&loaded, source, right)?;
    let a2: Vec<usize> = h.group().elements().map(|a| universal_kernel(h, a).dim()).collect();
    let n: Vec<usize> = h.group().elements().map(|a| f.kernel(a).dim()).collect();
    report.line("dim A²", list(&a2), json!(a2));
    report.line("dim N", list(&n), json!(n));
    report.line("dim Γ", list(&f.dims()), json!(f.dims()));
    let left_cov = is_left_covariant(&f)?;
    let right_cov = is_right_covariant(&f)?;
    report.line("left covariant", yes(left_cov), json!(left_cov));
    report.line("right covariant", yes(right_cov), json!(right_cov));
    report.line("bicovariant", yes(left_cov && right_cov), json!(left_cov && right_cov));
    report.checks("calculus axioms", &f.verify(), &loaded.names);
    let coactions = match (left_cov, right_cov) {
        (true, true) => Some(check_bicovariant(&f)),
        (true, false) => Some(check_left_covariant(&f)),
        (false, true) => Some(check_right_covariant(&f)),
        (false, false) => None,
    };
    if let Some(c) = coactions {
        report.checks("coaction laws", &c, &loaded.names);
    }
    Ok(report)
}

pub fn cmd_structure(path: &Path, source: &Source) -> Result<Report> {
    let loaded = load(path)?;
    let mut report = Report::new(format!("structure {} {}", path.display(), source_label(source)));
    describe_host(&mut report, &loaded);
    if !require_hopf(&mut report, &loaded) {
        return Ok(report);
    }
    let h = &loaded.hopf;
    let names = &loaded.names;
    if h.psi_maps().is_none() {
        return Err(Error::MissingPsi);
    }
    let f = build(&loaded, source, false)?;
    let cb = covariant_bimodule(&f)?;
    if !cb.is_bicovariant() {
        return Err(Error::NotBicovariant(format!("the calculus of {} has no right coaction", source_label(source))));
    }
    let (data, checks) = verify_structure(&cb)?;
    let size = data.size();
    let one = h.one();
    report.line("|I|", size, json!(size));

    let fm = data.f.as_ref().expect("psi present");
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for i in 0..size {
        for j in 0..size {
            let values: Vec<String> = fm.get(one, i, j).entries().iter().map(|c| c.to_string()).collect();
            let shown: Vec<String> = (0..h.dim(one)).map(|k| format!("{} ↦ {}", names.basis(one, k), values[k])).collect();
            lines.push(format!("f[{i}][{j}]: {}", shown.join(", ")));
            entries.push(json!({"i": i, "j": j, "values": values}));
        }
    }
    report.block("f on A_1", lines, Value::Array(entries));

    let r = data.r.as_ref().expect("bicovariant");
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for b in h.group().elements() {
        for j in 0..size {
            for i in 0..size {
                let v = r.get(b, j, i);
                let shown = names.combination(b, &v);
                lines.push(format!("R^{}[{j}][{i}] = {shown}", names.element(b)));
                entries.push(json!({"grading": names.element(b), "j": j, "i": i, "value": shown}));
            }
        }
    }
    report.block("R", lines, Value::Array(entries));
    report.checks("structure identities", &checks, names);

    let rebuilt = reconstruct(h, fm.matrix(one), r)?;
    let mut round_trip = rebuilt.verify();
    round_trip.extend(check_isomorphic(&cb, &data.omega, &rebuilt)?);
    report.checks("reconstruction", &round_trip, names);

    if let Some(fg) = compare_f_and_g(h, &data) {
        let same = fg.is_ok();
        report.line("note: f = g on A_1", yes(same), json!(same));
    }
    Ok(report)
}

pub fn cmd_enumerate(path: &Path, max_dim: usize) -> Result<Report> {
    let loaded = load(path)?;
    let mut report = Report::new(format!("enumerate {} --max-dim {max_dim}", path.display()));
    describe_host(&mut report, &loaded);
    if !require_hopf(&mut report, &loaded) {
        return Ok(report);
    }
    let h = &loaded.hopf;
    let one = h.one();
    let ideals = enumerate_right_ideals(h, max_dim)?;
    report.line("ideals", ideals.len(), json!(ideals.len()));
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut disagreements = 0;
    for (k, r) in ideals.iter().enumerate() {
        let basis: Vec<String> = r.space().basis().iter().map(|v| loaded.names.combination(one, v)).collect();
        let f = calculus_from_ideal(h, r)?;
        let ad = check_ad_invariant(h, r)?.is_ok();
        let bicov = check_bicovariant(&f).is_ok();
        if ad != bicov {
            disagreements += 1;
        }
        let shown = if basis.is_empty() { "0".to_string() } else { basis.join("; ") };
        lines.push(format!(
            "R{k}: dim {} span {{{shown}}} dim Γ {} ad-invariant {} bicovariant {}",
            r.dim(),
            list(&f.dims()),
            yes(ad),
            yes(bicov)
        ));
        rows.push(json!({
            "index": k,
            "dim": r.dim(),
            "basis": basis,
            "dim_gamma": f.dims(),
            "ad_invariant": ad,
            "bicovariant": bicov,
        }));
    }
    report.block("right ideals", lines, Value::Array(rows));
    report.line("ad-invariance agrees with bicovariance", yes(disagreements == 0), json!(disagreements == 0));
    if disagreements > 0 {
        report.fail();
    }
    Ok(report)
}
