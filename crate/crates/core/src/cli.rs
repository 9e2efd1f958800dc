//! Command-line front end. [`run`] parses arguments, runs one pipeline stage
//! and renders a deterministic report; the binary only prints it.
//!
//! Exit codes: 0 success, 1 a structural check or expectation failed,
//! 2 invalid input (unreadable or malformed document, unknown name, bad flags).

use std::path::Path;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::condensation::MonoidTable;
use crate::condensation::{
    associativity_failures, beta_classes, check_strong_regularity, check_weak_reproducible, condense, zeta_classes,
    CondensationReport, Flags, Partition, ProductFamily,
};
use crate::document::{BuildError, Problem, ProblemDocument};
use crate::reptools::a4::{a4_checks, a4_structure_checks, Verdict};
use crate::reptools::corpus::{self, CorpusInput, CorpusItem};
use crate::semiring::{AtomSet, AtomSystem, HyperTable, SemiringError};
use crate::tower::{focal_tower_with_threads, witness_product, FocalTower};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Validate an atom system (independence, identity, product closure).
    Verify,
    /// Print the hyperproduct table.
    Table,
    /// Condensation monoid, ζ* classes and focus.
    Condense,
    /// Iterated focal tower.
    Tower,
    /// Hypergroupoid analysis of a table: flags, β and ζ* classes, monoid.
    Hyper,
    /// Run named corpus items against their recorded expectations.
    Corpus,
    /// Scripted subspace checks for the A4 example.
    A4Checks,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Table => "table",
            Command::Condense => "condense",
            Command::Tower => "tower",
            Command::Hyper => "hyper",
            Command::Corpus => "corpus",
            Command::A4Checks => "a4-checks",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "focal",
    version,
    about = "Condensation monoids, foci and focal towers of atomistic subsemirings"
)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// A JSON problem file, or a corpus name such as `s3_standard` or
    /// `trace_zero(3)`. Existing files take precedence.
    pub input: Option<String>,
    /// Emit JSON.
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Emit line-oriented `key: value` text (the default).
    #[arg(long)]
    pub text: bool,
    /// Maximum number of tower levels.
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub max_depth: u64,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    /// Worker threads for hyperproduct table computation.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub threads: u64,
    /// Include wall-clock timing (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

/// What the binary should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Args::try_parse_from(argv) {
        Ok(args) => run_args(&args),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

pub fn run_args(args: &Args) -> CliOutput {
    let start = Instant::now();
    let (code, mut report) = execute(args);
    report.insert("command".into(), json!(args.command.name()));
    report.insert(
        "status".into(),
        json!(match code {
            EXIT_OK => "ok",
            EXIT_FAILED => "failed",
            _ => "invalid",
        }),
    );
    if args.timing {
        report.insert("timing_ms".into(), json!(start.elapsed().as_secs_f64() * 1000.0));
    }
    let value = Value::Object(report);
    let rendered = if args.json {
        let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
        s.push('\n');
        s
    } else {
        render_text(&value)
    };
    match &args.out {
        Some(path) => match std::fs::write(path, &rendered) {
            Ok(()) => CliOutput {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => CliOutput {
                code: EXIT_INVALID,
                stdout: String::new(),
                stderr: format!("cannot write {}: {e}\n", path.display()),
            },
        },
        None => CliOutput {
            code,
            stdout: rendered,
            stderr: String::new(),
        },
    }
}

type Report = Map<String, Value>;

fn invalid(kind: &str, message: impl Into<String>, pointer: Option<&str>) -> (i32, Report) {
    let mut err = Map::new();
    err.insert("kind".into(), json!(kind));
    err.insert("message".into(), json!(message.into()));
    if let Some(p) = pointer {
        err.insert("pointer".into(), json!(p));
    }
    let mut r = Map::new();
    r.insert("error".into(), Value::Object(err));
    (EXIT_INVALID, r)
}

fn execute(args: &Args) -> (i32, Report) {
    match args.command {
        Command::A4Checks => return a4_report(),
        Command::Corpus => return corpus_report(args),
        _ => {}
    }
    let Some(input) = args.input.as_deref() else {
        return invalid("MissingInput", "a problem file or corpus name is required", None);
    };
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return e,
    };
    let threads = args.threads as usize;
    let mut report = Map::new();
    report.insert("problem".into(), loaded.echo.to_value());
    report.insert("source".into(), json!(loaded.source));
    let problem = match loaded.problem {
        Ok(p) => p,
        Err(BuildError::Invalid(e)) => return invalid("InvalidDocument", e.message, Some(&e.pointer)),
        Err(BuildError::Algebra(m)) => return invalid("InvalidAlgebra", m, Some("/algebra")),
        Err(BuildError::Semiring(e)) => {
            report.insert("valid".into(), json!(false));
            report.insert("error".into(), semiring_error(&e));
            return (EXIT_FAILED, report);
        }
    };
    let table = match &problem {
        Problem::Abstract(t) => t.clone(),
        Problem::System(sys) => match sys.verify_with_threads(threads) {
            Ok(t) => t,
            Err(e) => {
                report.insert("valid".into(), json!(false));
                report.insert("error".into(), semiring_error(&e));
                return (EXIT_FAILED, report);
            }
        },
    };
    report.insert("valid".into(), json!(true));
    let code = match args.command {
        Command::Verify => {
            report.insert("atoms".into(), atoms_json(&problem, &table));
            EXIT_OK
        }
        Command::Table => {
            report.insert("table".into(), table_json(&table));
            EXIT_OK
        }
        Command::Condense => condense_into(&mut report, &problem, &table),
        Command::Tower => match &problem {
            Problem::System(sys) => tower_into(&mut report, sys, args.max_depth as usize, threads),
            Problem::Abstract(_) => {
                return invalid(
                    "NeedsAtomSystem",
                    "the focal tower needs atoms in an algebra, not an abstract table",
                    None,
                )
            }
        },
        Command::Hyper => hyper_into(&mut report, &table),
        Command::Corpus | Command::A4Checks => unreachable!("handled above"),
    };
    (code, report)
}

struct Loaded {
    source: String,
    echo: ProblemDocument,
    problem: Result<Problem, BuildError>,
}

fn load(input: &str) -> Result<Loaded, (i32, Report)> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| invalid("Unreadable", format!("cannot read {input}: {e}"), None))?;
        let doc =
            ProblemDocument::parse_str(&text).map_err(|e| invalid("InvalidDocument", e.message, Some(&e.pointer)))?;
        let problem = doc.build();
        return Ok(Loaded {
            source: format!("file:{input}"),
            echo: doc,
            problem,
        });
    }
    let items = corpus::resolve(input).map_err(|_| {
        invalid(
            "UnknownInput",
            format!("{input:?} is neither a readable file nor a corpus name"),
            None,
        )
    })?;
    let [item] = items.as_slice() else {
        return Err(invalid(
            "UnknownInput",
            format!("{input:?} names several corpus items; use the corpus command or pick one"),
            None,
        ));
    };
    let (echo, problem) = match &item.input {
        CorpusInput::System { system, .. } => (ProblemDocument::from_system(system), Problem::System(system.clone())),
        CorpusInput::Abstract(t) => (ProblemDocument::from_table(t), Problem::Abstract(t.clone())),
        CorpusInput::Scripted => {
            return Err(invalid(
                "UnknownInput",
                format!("{input:?} is a scripted check; run the a4-checks command"),
                None,
            ))
        }
    };
    Ok(Loaded {
        source: format!("corpus:{}", item.name),
        echo,
        problem: Ok(problem),
    })
}

fn semiring_error(e: &SemiringError) -> Value {
    let kind = match e {
        SemiringError::ZeroAtom(_) => "ZeroAtom",
        SemiringError::DuplicateName(_) => "DuplicateName",
        SemiringError::NotIndependent(_) => "NotIndependent",
        SemiringError::IdentityMissing => "IdentityMissing",
        SemiringError::IdentityMismatch(_) => "IdentityMismatch",
        SemiringError::NotClosed { .. } => "NotClosed",
        SemiringError::IndexOutOfRange { .. } => "IndexOutOfRange",
        SemiringError::TableShape { .. } => "TableShape",
        SemiringError::IdentityLaw(_) => "IdentityLaw",
        SemiringError::Algebra(_) => "Algebra",
        SemiringError::Linalg(_) => "Linalg",
    };
    let mut out = Map::new();
    out.insert("kind".into(), json!(kind));
    out.insert("message".into(), json!(e.to_string()));
    match e {
        SemiringError::NotIndependent(w) => {
            out.insert("witness".into(), json!(w));
        }
        SemiringError::NotClosed { left, right, defect } => {
            out.insert("witness".into(), json!([left, right]));
            out.insert("defect_dim".into(), json!(defect.dim()));
        }
        _ => {}
    }
    Value::Object(out)
}

fn names(table: &HyperTable, set: &AtomSet) -> Value {
    json!(table.names_of(set))
}

fn atoms_json(problem: &Problem, table: &HyperTable) -> Value {
    match problem {
        Problem::System(sys) => Value::Array(
            sys.atoms()
                .iter()
                .map(|a| json!({"name": a.name, "dim": a.subspace.dim()}))
                .collect(),
        ),
        Problem::Abstract(_) => json!(table.names()),
    }
}

pub fn table_json(table: &HyperTable) -> Value {
    let n = table.len();
    let mut entries = Map::new();
    for i in 0..n {
        for j in 0..n {
            entries.insert(
                format!("{},{}", table.name(i), table.name(j)),
                names(table, table.entry(i, j)),
            );
        }
    }
    json!({
        "atoms": table.names(),
        "identity": table.identity().map(|k| table.name(k)),
        "entries": entries,
    })
}

pub fn flags_json(flags: &Flags) -> Value {
    json!({
        "entire": flags.entire,
        "associative": flags.associative,
        "weakly_reproducible": flags.weakly_reproducible,
        "reproducible": flags.reproducible,
    })
}

pub fn partition_json(table: &HyperTable, p: &Partition) -> Value {
    Value::Array(p.classes().iter().map(|c| names(table, c)).collect())
}

/// Element `i` of the monoid is class `i` of the partition.
pub fn monoid_json(table: &HyperTable, p: &Partition, m: &MonoidTable) -> Value {
    json!({
        "size": m.size(),
        "elements": partition_json(table, p),
        "identity": m.identity(),
        "table": m.table(),
        "is_group": m.is_group(),
        "commutative": m.is_commutative(),
        "exponent": m.exponent(),
    })
}

fn not_entire(report: &mut Report, table: &HyperTable, e: impl ToString) -> i32 {
    report.insert("flags".into(), flags_json(&Flags::compute(table)));
    report.insert(
        "error".into(),
        json!({"kind": "Condensation", "message": e.to_string()}),
    );
    EXIT_FAILED
}

fn condense_into(report: &mut Report, problem: &Problem, table: &HyperTable) -> i32 {
    let c: CondensationReport = match condense(table) {
        Ok(c) => c,
        Err(e) => return not_entire(report, table, e),
    };
    report.insert("flags".into(), flags_json(&c.flags));
    report.insert("partition".into(), partition_json(table, &c.partition));
    report.insert("monoid".into(), monoid_json(table, &c.partition, &c.monoid));
    report.insert("family_size".into(), json!(c.family.len()));
    report.insert(
        "focus".into(),
        c.focus.as_ref().map_or(Value::Null, |f| names(table, f)),
    );
    let witness = witness_product(&c, &c.family).map(|w| json!(w.iter().map(|&i| table.name(i)).collect::<Vec<_>>()));
    report.insert("witness_product".into(), witness.unwrap_or(Value::Null));
    if let (Problem::System(sys), Some(f)) = (problem, &c.focus) {
        if let Ok(s) = sys.subspace_of(f) {
            report.insert("focal_dim".into(), json!(s.dim()));
        }
    }
    EXIT_OK
}

pub fn tower_json(t: &FocalTower) -> Value {
    let levels: Vec<Value> = t
        .levels
        .iter()
        .map(|l| {
            json!({
                "level": l.level,
                "atoms": l.atom_names,
                "focus": l.focus_names(),
                "focal_dim": l.focal_dim(),
                "group_order": l.monoid.size(),
                "is_group": l.monoid.is_group(),
            })
        })
        .collect();
    json!({
        "depth": t.levels.len(),
        "stabilized": t.stabilized,
        "sizes": t.levels.iter().map(|l| l.monoid.size()).collect::<Vec<_>>(),
        "focal_dims": t.levels.iter().map(|l| l.focal_dim()).collect::<Vec<_>>(),
        "levels": levels,
    })
}

/// A tower that runs out of depth before stabilizing is still a successful
/// computation; `stabilized: false` records it.
fn tower_into(report: &mut Report, sys: &AtomSystem, max_depth: usize, threads: usize) -> i32 {
    match focal_tower_with_threads(sys, max_depth, threads) {
        Ok(t) => {
            report.insert("tower".into(), tower_json(&t));
            EXIT_OK
        }
        Err(e) => {
            report.insert("error".into(), json!({"kind": "Tower", "message": e.to_string()}));
            EXIT_FAILED
        }
    }
}

fn triple(table: &HyperTable, (a, b, c): (usize, usize, usize)) -> Value {
    json!([table.name(a), table.name(b), table.name(c)])
}

/// Analysis runs even on non-entire or non-associative tables; the flags
/// carry the verdict, so the exit code is 0 whenever the table was readable.
fn hyper_into(report: &mut Report, table: &HyperTable) -> i32 {
    let flags = Flags::compute(table);
    report.insert("flags".into(), flags_json(&flags));
    report.insert("table".into(), table_json(table));
    let weak = check_weak_reproducible(table);
    let lacking: Vec<&str> = weak
        .witnesses
        .iter()
        .enumerate()
        .filter(|(_, w)| w.is_none())
        .map(|(i, _)| table.name(i))
        .collect();
    report.insert("weak_reproducibility_failures".into(), json!(lacking));
    match associativity_failures(table) {
        Ok(fails) => {
            report.insert("associativity_failure_count".into(), json!(fails.len()));
            report.insert(
                "associativity_witness".into(),
                fails.first().map_or(Value::Null, |&t| triple(table, t)),
            );
        }
        Err(_) => {
            report.insert("associativity_failure_count".into(), Value::Null);
            report.insert("associativity_witness".into(), Value::Null);
        }
    }
    let family = ProductFamily::new(table);
    let zeta = zeta_classes(&family, table.len());
    report.insert("family_size".into(), json!(family.len()));
    report.insert("zeta_classes".into(), partition_json(table, &zeta));
    match beta_classes(table) {
        Ok(beta) => {
            report.insert("beta_equals_zeta".into(), json!(beta == zeta));
            report.insert("beta_classes".into(), partition_json(table, &beta));
        }
        Err(e) => {
            report.insert("beta_classes".into(), json!({"error": e.to_string()}));
        }
    }
    if flags.entire {
        report.insert(
            "strong_regularity_witness".into(),
            check_strong_regularity(table, &zeta).map_or(Value::Null, |t| triple(table, t)),
        );
    }
    match condense(table) {
        Ok(c) => {
            report.insert("monoid".into(), monoid_json(table, &c.partition, &c.monoid));
            report.insert(
                "focus".into(),
                c.focus.as_ref().map_or(Value::Null, |f| names(table, f)),
            );
        }
        Err(e) => {
            report.insert("monoid".into(), json!({"error": e.to_string()}));
        }
    }
    EXIT_OK
}

fn verdicts_json(vs: &[Verdict]) -> Value {
    Value::Array(
        vs.iter()
            .map(|v| json!({"label": v.label, "claim": v.claim, "pass": v.pass, "detail": v.detail}))
            .collect(),
    )
}

fn a4_report() -> (i32, Report) {
    let mut report = Map::new();
    let (checks, structure) = match (a4_checks(), a4_structure_checks()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            report.insert("error".into(), json!({"kind": "Reptools", "message": e.to_string()}));
            return (EXIT_FAILED, report);
        }
    };
    let pass = checks.iter().chain(&structure).all(|v| v.pass);
    report.insert("checks".into(), verdicts_json(&checks));
    report.insert("structure_checks".into(), verdicts_json(&structure));
    report.insert("all_pass".into(), json!(pass));
    (if pass { EXIT_OK } else { EXIT_FAILED }, report)
}

fn corpus_item_json(item: &CorpusItem, max_depth: usize, threads: usize) -> (bool, Value) {
    let mut out = Map::new();
    out.insert("name".into(), json!(item.name));
    out.insert("description".into(), json!(item.description));
    let outcomes = match corpus::evaluate(item) {
        Ok(o) => o,
        Err(e) => {
            out.insert("error".into(), json!(e.to_string()));
            out.insert("pass".into(), json!(false));
            return (false, Value::Object(out));
        }
    };
    let pass = outcomes.iter().all(|o| o.pass);
    out.insert(
        "outcomes".into(),
        Value::Array(
            outcomes
                .iter()
                .map(|o| json!({"check": o.check, "expected": o.expected, "actual": o.actual, "pass": o.pass}))
                .collect(),
        ),
    );
    out.insert("pass".into(), json!(pass));
    match &item.input {
        CorpusInput::System { system, .. } => {
            out.insert("problem".into(), ProblemDocument::from_system(system).to_value());
            if let Ok(t) = focal_tower_with_threads(system, max_depth, threads) {
                out.insert("tower".into(), tower_json(&t));
            }
        }
        CorpusInput::Abstract(t) => {
            out.insert("problem".into(), ProblemDocument::from_table(t).to_value());
            out.insert("flags".into(), flags_json(&Flags::compute(t)));
        }
        CorpusInput::Scripted => {}
    }
    (pass, Value::Object(out))
}

fn corpus_report(args: &Args) -> (i32, Report) {
    let name = args.input.as_deref().unwrap_or("all");
    let items = match corpus::resolve(name) {
        Ok(items) => items,
        Err(e) => {
            let mut r = invalid("UnknownName", e.to_string(), None).1;
            r.insert("available".into(), json!(corpus::names_all()));
            return (EXIT_INVALID, r);
        }
    };
    let mut all = true;
    let mut rendered = Vec::with_capacity(items.len());
    for item in &items {
        let (pass, v) = corpus_item_json(item, args.max_depth as usize, args.threads as usize);
        all &= pass;
        rendered.push(v);
    }
    let mut report = Map::new();
    report.insert("items".into(), Value::Array(rendered));
    report.insert("all_pass".into(), json!(all));
    (if all { EXIT_OK } else { EXIT_FAILED }, report)
}

/// Flattens a JSON report into `path: value` lines. Arrays of scalars stay on
/// one line; nested containers extend the dotted path. The problem echo is
/// left out, since it is only useful in machine-readable form.
pub fn render_text(value: &Value) -> String {
    fn scalar_list(xs: &[Value]) -> bool {
        xs.iter()
            .all(|x| !x.is_object() && !matches!(x, Value::Array(a) if !scalar_list(a)))
    }
    fn compact(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Array(xs) => format!("[{}]", xs.iter().map(compact).collect::<Vec<_>>().join(", ")),
            other => other.to_string(),
        }
    }
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    if k == "problem" {
                        continue;
                    }
                    let p = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&p, x, out);
                }
            }
            Value::Array(xs) if !scalar_list(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    walk(&format!("{prefix}.{i}"), x, out);
                }
            }
            other => {
                out.push_str(prefix);
                out.push_str(": ");
                out.push_str(&compact(other));
                out.push('\n');
            }
        }
    }
    let mut out = String::new();
    walk("", value, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json_of(argv: &[&str]) -> (i32, Value) {
        let mut full = vec!["focal"];
        full.extend_from_slice(argv);
        full.push("--json");
        let out = run(full);
        (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
    }

    #[test]
    fn corpus_s3_reports_tower() {
        let (code, v) = json_of(&["corpus", "s3_standard"]);
        assert_eq!(code, 0);
        let item = &v["items"][0];
        assert_eq!(item["tower"]["depth"], 3);
        assert_eq!(item["tower"]["sizes"], json!([2, 2, 1]));
        assert_eq!(item["tower"]["levels"][0]["group_order"], 2);
    }

    #[test]
    fn hyper_on_fragment() {
        let (code, v) = json_of(&["hyper", "a4_fragment"]);
        assert_eq!(code, 0);
        assert_eq!(v["flags"]["associative"], false);
        assert_eq!(v["flags"]["reproducible"], false);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["focal", "condense", "no_such_thing"]).code, 2);
        assert_eq!(run(["focal", "corpus", "no_such_thing"]).code, 2);
        assert_eq!(run(["focal", "frobnicate"]).code, 2);
        assert_eq!(run(["focal", "--help"]).code, 0);
        assert_eq!(run(["focal", "tower", "a4_fragment"]).code, 2);
        assert_eq!(run(["focal", "condense", "quotient_t2"]).code, 1);
        assert_eq!(run(["focal", "a4-checks"]).code, 0);
    }

    #[test]
    fn text_is_key_value() {
        let out = run(["focal", "condense", "s3_standard"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.lines().all(|l| l.contains(": ")));
        assert!(out.stdout.contains("monoid.size: 2\n"));
        assert!(out.stdout.contains("status: ok\n"));
    }

    #[test]
    fn deterministic_and_echo_reparses() {
        let a = run(["focal", "condense", "galois_biquadratic", "--json"]);
        let b = run(["focal", "condense", "galois_biquadratic", "--json", "--threads", "3"]);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a.stdout).unwrap();
        let echo = ProblemDocument::from_value(&v["problem"]).unwrap();
        assert!(echo.build().is_ok());
    }
}
