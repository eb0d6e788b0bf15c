//! The `hypergraphic` command line.
//!
//! Every verb writes one JSON document to standard output. Exit codes: 0 on
//! success, 2 for unusable input, 3 when an enumeration bound is exceeded, 4
//! for an internal inconsistency or a failed `check`.

use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::face::{omega, psi};
use crate::families::{
    hyperperm_hypergraph, is_building_set, opp_f_vector, ps_f_vector, ps_hypergraph, ps_volume, PsSpec,
};
use crate::flat::contract;
use crate::geometry::{
    antipode_from_faces, enumerate_faces, f_vector_of, is_simple, is_simple_of, normalized_volume, one_skeleton,
    one_skeleton_of, polytope_dim, FVector,
};
use crate::hopf::{
    hyperforest_coefficient, is_hyperforest, orientation_antipode, orientation_antipode_with, takeuchi_antipode,
    AntipodeMethod, AntipodeResult,
};
use crate::hypergraph::{Hypergraph, HypergraphParseError};
use crate::limits::Limits;
use crate::orient::{orientation_count, orientation_quotient, orientations};
use crate::vset::VertexSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "hypergraphic", version, about = "Faces, antipodes and f-vectors of hypergraphic polytopes")]
struct Cli {
    /// Hypergraph JSON file, or `-` for standard input.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<String>,
    /// Largest vertex count the enumerations accept.
    #[arg(long, global = true, value_name = "INT")]
    max_n: Option<usize>,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Antipode coefficients over the flats.
    Antipode {
        #[arg(long, value_enum, default_value_t = Engine::Takeuchi)]
        method: Engine,
    },
    /// Every face key, sorted by dimension.
    Faces,
    /// Face counts by dimension.
    Fvector,
    /// Whether the polytope is simple.
    Simple,
    /// Vertices and edges of the polytope.
    Skeleton,
    /// Normalized volume.
    Volume,
    /// All orientations and the acyclic ones.
    Orientations,
    /// Generalized Pitman-Stanley polytope.
    Ps {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Hyper-permutahedron on all k-subsets of {1..n}.
    Hyperperm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Cross-validate every engine on the input.
    Check,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Engine {
    Takeuchi,
    Orientation,
    Faces,
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } | Error::TooManyVertices { .. } | Error::TooManyCandidates { .. } => EXIT_BOUND,
        Error::Invariant { .. } => EXIT_INVARIANT,
        _ => EXIT_INPUT,
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let mut msg = format!("error: {e}\n");
    if let Error::Invariant { face: Some(face), .. } = e {
        msg.push_str(&format!("face: {face}\n"));
    }
    Outcome::fail(exit_code(e), msg)
}

/// Runs the command line on `args` (program name first), reading `-` input from `stdin`.
pub fn run_from<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_INPUT, text),
            };
        }
    };
    match run(&cli, stdin) {
        Ok(Report { value, faces, failed }) => {
            let mut text = match faces {
                Some(faces) if !cli.pretty => face_lines(&faces),
                _ => render(&value, cli.pretty),
            };
            text.push('\n');
            match failed {
                None => Outcome::ok(text),
                Some(summary) => Outcome {
                    code: EXIT_INVARIANT,
                    stdout: text,
                    stderr: summary,
                },
            }
        }
        Err(Failure::Input(msg)) => Outcome::fail(EXIT_INPUT, format!("error: {msg}\n")),
        Err(Failure::Lib(e)) => error_outcome(&e),
    }
}

fn render(value: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("values serialize")
}

/// A JSON array holding one face per line.
fn face_lines(faces: &[Value]) -> String {
    if faces.is_empty() {
        return "[]".into();
    }
    let body: Vec<String> = faces.iter().map(|f| f.to_string()).collect();
    format!("[\n{}\n]", body.join(",\n"))
}

struct Report {
    value: Value,
    faces: Option<Vec<Value>>,
    failed: Option<String>,
}

impl Report {
    fn of(value: impl Serialize) -> Self {
        Report {
            value: serde_json::to_value(value).expect("reports serialize"),
            faces: None,
            failed: None,
        }
    }
}

enum Failure {
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<Hypergraph, Failure> {
    let path = cli
        .input
        .as_deref()
        .ok_or_else(|| Failure::Input("this command needs --input <path> (or - for standard input)".into()))?;
    let text = if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {path}: {e}")))?
    };
    Hypergraph::from_json(&text).map_err(|e| match e {
        HypergraphParseError::Json(e) => Failure::Input(format!("{path}: malformed hypergraph JSON: {e}")),
        HypergraphParseError::Invalid(e @ Error::TooManyVertices { .. }) => Failure::Lib(e),
        HypergraphParseError::Invalid(e) => Failure::Input(format!("{path}: {e}")),
    })
}

fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<Report, Failure> {
    let limits = match cli.max_n {
        Some(max_n) => Limits::with_max_n(max_n),
        None => Limits::default(),
    };
    match &cli.command {
        Command::Ps { n, set } => return ps_report(*n, set, &limits),
        Command::Hyperperm { n, k } => {
            let g = hyperperm_hypergraph(*n, *k)?;
            return Ok(Report::of(json!({
                "f_vector": opp_f_vector(*n, *k, &limits)?,
                "simple": is_simple(&g, &limits)?,
            })));
        }
        _ => {}
    }
    let g = read_input(cli, stdin)?;
    let report = match &cli.command {
        Command::Antipode { method } => Report::of(match method {
            Engine::Takeuchi => takeuchi_antipode(&g, &limits)?,
            Engine::Orientation => orientation_antipode(&g, &limits)?,
            Engine::Faces => antipode_from_faces(&g, &limits)?,
        }),
        Command::Faces => {
            let faces: Vec<Value> = enumerate_faces(&g, &limits)?.iter().map(|k| k.to_json()).collect();
            Report {
                value: Value::Array(faces.clone()),
                faces: Some(faces),
                failed: None,
            }
        }
        Command::Fvector => Report::of(f_vector_of(&g, &enumerate_faces(&g, &limits)?)),
        Command::Simple => Report::of(json!({
            "simple": is_simple(&g, &limits)?,
            "dim": polytope_dim(&g),
        })),
        Command::Skeleton => Report::of(one_skeleton(&g, &limits)?),
        Command::Volume => Report::of(json!({ "volume": normalized_volume(&g)? })),
        Command::Orientations => orientations_report(&g, &limits)?,
        Command::Check => check_report(&g, &limits)?,
        Command::Ps { .. } | Command::Hyperperm { .. } => unreachable!("handled above"),
    };
    Ok(report)
}

fn ps_report(n: usize, set: &[usize], limits: &Limits) -> Result<Report, Failure> {
    let spec = PsSpec::new(n, set.iter().copied())?;
    // a = 1 is a point summand, so the closed form applies to the rest of A
    let f = if spec.set() == [1] {
        FVector::new(vec![1])
    } else {
        ps_f_vector(&PsSpec::new(n, set.iter().copied().filter(|&a| a != 1))?)?
    };
    let g = ps_hypergraph(&spec);
    Ok(Report::of(json!({
        "f_vector": f,
        "volume": ps_volume(&spec)?,
        "simple": is_simple(&g, limits)?,
    })))
}

fn orientations_report(g: &Hypergraph, limits: &Limits) -> Result<Report, Failure> {
    let total = orientation_count(g);
    if total > limits.max_orientations as u128 {
        return Err(Error::TooManyCandidates {
            what: "orientations",
            count: total,
            cap: limits.max_orientations,
        }
        .into());
    }
    let acyclic: Vec<Vec<Vec<u32>>> = orientations(g)
        .filter(|o| orientation_quotient(g, o).is_acyclic())
        .map(|o| o.heads().iter().map(|h| h.to_vec()).collect())
        .collect();
    Ok(Report::of(json!({
        "total": total as u64,
        "acyclic": acyclic.len(),
        "acyclic_orientations": acyclic,
    })))
}

#[derive(Serialize)]
struct CheckEntry {
    name: &'static str,
    pass: bool,
    detail: String,
}

struct Checks(Vec<CheckEntry>);

impl Checks {
    fn push(&mut self, name: &'static str, pass: bool, detail: impl Into<String>) {
        self.0.push(CheckEntry {
            name,
            pass,
            detail: detail.into(),
        });
    }

    fn compare<T: PartialEq + Serialize>(&mut self, name: &'static str, expected: &T, got: &T, what: &str) {
        if expected == got {
            self.push(name, true, format!("{what} agree"));
        } else {
            self.push(
                name,
                false,
                format!(
                    "{what} differ: expected {}, got {}",
                    serde_json::to_string(expected).unwrap(),
                    serde_json::to_string(got).unwrap()
                ),
            );
        }
    }
}

fn check_report(g: &Hypergraph, limits: &Limits) -> Result<Report, Failure> {
    let mut checks = Checks(Vec::new());
    let takeuchi = takeuchi_antipode(g, limits)?;
    let oriented = orientation_antipode(g, limits)?;
    let faces = enumerate_faces(g, limits)?;
    let from_faces = antipode_from_faces(g, limits)?;
    checks.compare("antipode_orientation", &takeuchi, &oriented, "takeuchi and orientation antipodes");
    checks.compare("antipode_faces", &takeuchi, &from_faces, "takeuchi and face antipodes");
    match orientation_antipode_with(g, AntipodeMethod::PerFlat, limits) {
        Ok(per_flat) => checks.compare("antipode_per_flat", &takeuchi, &per_flat, "takeuchi and per-flat antipodes"),
        Err(Error::TooManyCandidates { count, .. }) => checks.push(
            "antipode_per_flat",
            true,
            format!("skipped: {count} orientations on one contraction exceed the cap"),
        ),
        Err(e) => return Err(e.into()),
    }
    let sign = |k: usize| if k.is_multiple_of(2) { 1i64 } else { -1 };
    checks.compare("antipode_total", &sign(g.n()), &takeuchi.total(), "(-1)^n and the coefficient sum");
    let top = takeuchi.terms().first().map(|t| t.1);
    checks.compare(
        "antipode_top_flat",
        &Some(sign(g.component_count())),
        &top,
        "(-1)^components and the top coefficient",
    );

    let f = f_vector_of(g, &faces);
    checks.compare("euler", &1i64, &f.euler(), "1 and the alternating face sum");
    checks.compare("top_face", &Some(1u64), &f.counts().last().copied(), "1 and the top face count");

    let mut bad_sections = Vec::new();
    for key in &faces {
        let round = psi(g, key).map(|a| omega(g, &a));
        if !matches!(round, Ok(ref k) if k == key) {
            bad_sections.push(key.to_json());
        }
    }
    if bad_sections.is_empty() {
        checks.push("omega_psi", true, format!("identity on all {} faces", faces.len()));
    } else {
        checks.push(
            "omega_psi",
            false,
            format!("fails on {} faces, first {}", bad_sections.len(), bad_sections[0]),
        );
    }

    let simple = is_simple_of(g, &faces)?;
    let skeleton = one_skeleton_of(g, &faces)?;
    checks.compare(
        "simple_vs_skeleton",
        &simple,
        &skeleton.is_regular(polytope_dim(g)),
        "simplicity and skeleton regularity",
    );

    if is_hyperforest(g) {
        hyperforest_checks(g, &takeuchi, &f, &mut checks)?;
    }
    if is_building_set(g) {
        checks.compare("building_set_simple", &true, &simple, "building set and simplicity");
    }
    if let Some(spec) = ps_chain(g) {
        let closed = ps_f_vector(&spec)?;
        checks.compare("ps_f_vector", &closed, &f, "closed-form and enumerated PS f-vectors");
        match ps_volume(&spec) {
            Ok(v) => checks.compare("ps_volume", &v, &normalized_volume(g)?, "parking and draconian volumes"),
            Err(Error::TooManyCandidates { .. }) => {
                checks.push("ps_volume", true, "skipped: too many parking candidates")
            }
            Err(e) => return Err(e.into()),
        }
    }
    if let Some(k) = hyperperm_size(g) {
        let closed = opp_f_vector(g.n(), k, limits)?;
        checks.compare("opp_f_vector", &closed, &f, "OPP and enumerated f-vectors");
    }

    let pass = checks.0.iter().all(|c| c.pass);
    let failed = (!pass).then(|| {
        checks
            .0
            .iter()
            .filter(|c| !c.pass)
            .map(|c| format!("check {} failed: {}\n", c.name, c.detail))
            .collect()
    });
    Ok(Report {
        value: json!({ "pass": pass, "checks": checks.0, "antipode": takeuchi }),
        faces: None,
        failed,
    })
}

fn hyperforest_checks(g: &Hypergraph, s: &AntipodeResult, f: &FVector, checks: &mut Checks) -> Result<(), Failure> {
    let mut mismatches = Vec::new();
    for (flat, c) in s.terms() {
        let expected = hyperforest_coefficient(&contract(g, flat)?)?;
        if expected != *c {
            mismatches.push(format!("flat {:?}: expected {expected}, got {c}", flat.edges().to_vec()));
        }
    }
    if mismatches.is_empty() {
        checks.push("hyperforest_antipode", true, "closed form matches every flat");
    } else {
        checks.push("hyperforest_antipode", false, mismatches.join("; "));
    }
    let product = g
        .edges()
        .iter()
        .fold(FVector::new(vec![1]), |acc, e| acc.product(&FVector::simplex(e.len())));
    checks.compare("hyperforest_f_vector", &product, f, "simplex-product and enumerated f-vectors");
    Ok(())
}

/// `PsSpec` when the edges are initial segments `{1..a}` ending with `{1..n}`.
fn ps_chain(g: &Hypergraph) -> Option<PsSpec> {
    let sizes: Vec<usize> = g.edges().iter().map(|e| e.len()).collect();
    let chain = g.edges().iter().all(|&e| e == VertexSet::full(e.len()));
    if !chain || sizes.iter().max() != Some(&g.n()) {
        return None;
    }
    PsSpec::new(g.n(), sizes).ok()
}

/// `k` when the edges are exactly the `k`-subsets of `{1..n}`.
fn hyperperm_size(g: &Hypergraph) -> Option<usize> {
    let k = g.edges().first()?.len();
    let h = hyperperm_hypergraph(g.n(), k).ok()?;
    (h == *g).then_some(k)
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let out = run_from(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
