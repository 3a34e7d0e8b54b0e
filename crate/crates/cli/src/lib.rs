//! Command-line front end for the finite soft-topology engine.
//!
//! [`run`] parses arguments, executes one subcommand and writes either a
//! plain-text or a JSON report. Exit codes: 0 when the verdict is true or
//! the command succeeded, 1 when the verdict is false, 2 for usage, parse
//! and validation errors.

pub mod document;
pub mod fixture_files;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use softtop_core::lab::{
    enumerate_soft_topologies, fixture, fixtures, search_converse_counterexample, verify_theorem, Instance, Status,
    SweepBounds, TheoremId,
};
use softtop_core::separation::check_with_evidence;
use softtop_core::{
    associated, compare, extract_crisp, extract_system, formula1_with, formula2, generate, is_crisp_topology,
    is_soft_topology, union_single_set, Axiom, Context, CrispSystem, CrispTopology, Flavor, Lattice, SizeGuard,
    SoftTopology, Topology,
};

use document::{Document, DocumentError, Payload};
use render::{failure_json, failure_text, separation_json, separation_text, violation_json, violation_text, Render};

#[derive(Parser, Debug)]
#[command(
    name = "softtop",
    version,
    about = "Finite soft topologies: generation, separation axioms and theorem sweeps"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report `duration_ms` as 0.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a document and check that its topologies are topologies.
    Validate { file: String },
    /// Build a soft topology from a document.
    Generate(GenerateArgs),
    /// Slice a soft topology into crisp topologies.
    Extract {
        #[arg(long)]
        parameter: Option<String>,
        file: String,
    },
    /// Check a separation axiom.
    Check(CheckArgs),
    /// Compare two topologies by inclusion.
    Compare { first: String, second: String },
    /// Sweep a claim over small instances.
    VerifyTheorem {
        id: String,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Search for a counterexample to a converse claim.
    Search {
        id: String,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// List every topology on a small universe.
    Enumerate {
        #[arg(long)]
        points: usize,
        /// Enumerate soft topologies with this many parameters.
        #[arg(long)]
        parameters: Option<usize>,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Verify or export the worked examples.
    Fixtures {
        #[arg(long)]
        name: Option<String>,
        /// Write `<name>.json` files into this directory.
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("method").required(true).args(["formula", "closure", "union_single_set", "associated"])))]
struct GenerateArgs {
    /// 1: product of a crisp system; 2: single-set topology of a crisp topology.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    formula: Option<u8>,
    /// Smallest topology containing the given sets.
    #[arg(long)]
    closure: bool,
    /// Topology generated by the single-set topologies of a system.
    #[arg(long)]
    union_single_set: bool,
    /// Product of the extractions of a soft topology.
    #[arg(long, alias = "extended")]
    associated: bool,
    /// Parameter whose crisp topology feeds Formula 2.
    #[arg(long)]
    parameter: Option<String>,
    /// Lift the size guard on generated families.
    #[arg(long)]
    allow_large: bool,
    file: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Crisp,
    Soft,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// t0, t1, t2, regular, normal, t3 or t4, optionally prefixed by `soft-` or `crisp-`.
    #[arg(long)]
    axiom: String,
    #[arg(long, value_enum)]
    flavor: Option<FlavorArg>,
    /// Restrict a crisp check to one parameter.
    #[arg(long)]
    parameter: Option<String>,
    file: String,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    max_points: Option<usize>,
    #[arg(long)]
    params: Option<usize>,
    /// Sample randomly with this seed instead of enumerating.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("{0}")]
    Core(#[from] softtop_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// What a command produced.
struct Outcome {
    verdict: Value,
    exit: i32,
    witness: Value,
    cases_checked: Option<usize>,
    result: Option<Value>,
    lines: Vec<String>,
}

impl Outcome {
    fn new(verdict: Value, exit: i32) -> Self {
        Outcome {
            verdict,
            exit,
            witness: Value::Null,
            cases_checked: None,
            result: None,
            lines: Vec::new(),
        }
    }

    fn verdict(holds: bool) -> Self {
        Outcome::new(Value::Bool(holds), if holds { 0 } else { 1 })
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a str,
    inputs: &'a [String],
    verdict: &'a Value,
    witness: &'a Value,
    cases_checked: Option<usize>,
    duration_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<&'a Value>,
}

/// Runs one command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let inputs: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .filter(|a| a != "--json" && a != "--no-timing")
        .skip(1)
        .collect();
    let name = command_name(&cli.command);
    let started = Instant::now();
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let duration_ms = if cli.no_timing {
        0
    } else {
        started.elapsed().as_millis()
    };
    let written = if cli.json {
        let report = JsonReport {
            command: name,
            inputs: &inputs,
            verdict: &outcome.verdict,
            witness: &outcome.witness,
            cases_checked: outcome.cases_checked,
            duration_ms,
            result: outcome.result.as_ref(),
        };
        let text = serde_json::to_string_pretty(&report).expect("reports serialize");
        writeln!(out, "{text}")
    } else {
        outcome.lines.iter().try_for_each(|l| writeln!(out, "{l}"))
    };
    match written {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        _ => outcome.exit,
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Validate { .. } => "validate",
        Command::Generate(_) => "generate",
        Command::Extract { .. } => "extract",
        Command::Check(_) => "check",
        Command::Compare { .. } => "compare",
        Command::VerifyTheorem { .. } => "verify-theorem",
        Command::Search { .. } => "search",
        Command::Enumerate { .. } => "enumerate",
        Command::Fixtures { .. } => "fixtures",
    }
}

fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Validate { file } => validate(&Document::load(file)?),
        Command::Generate(args) => generate_cmd(args),
        Command::Extract { parameter, file } => extract(&Document::load(file)?, parameter.as_deref()),
        Command::Check(args) => check_cmd(args),
        Command::Compare { first, second } => compare_cmd(&Document::load(first)?, &Document::load(second)?),
        Command::VerifyTheorem { id, sweep } => verify_cmd(id, sweep),
        Command::Search { id, sweep } => search_cmd(id, sweep),
        Command::Enumerate {
            points,
            parameters,
            count,
        } => enumerate_cmd(*points, *parameters, *count),
        Command::Fixtures { name, write } => fixtures_cmd(name.as_deref(), write.as_ref()),
    }
}

fn not_a_topology<S: Render>(ctx: &Context, what: &str, v: &softtop_core::Violation<S>) -> CliError {
    CliError::Usage(format!("{what} is not a topology: {}", violation_text(ctx, v)))
}

fn soft_topology(doc: &Document) -> Result<SoftTopology, CliError> {
    let ctx = &doc.context;
    match &doc.payload {
        Payload::Opens(family) => {
            SoftTopology::new(ctx.clone(), family.iter().copied()).map_err(|v| not_a_topology(ctx, "opens", &v))
        }
        Payload::Topologies(_) => Ok(softtop_core::formula1(&system(doc)?)?),
        Payload::Topology(_) => Ok(formula2(&crisp_topology(doc, None)?)),
        Payload::SoftSets(_) => Err(CliError::Usage(
            "a soft_sets payload is not a topology; use `generate --closure` first".into(),
        )),
    }
}

fn crisp_family(ctx: &Context, family: &[softtop_core::PointSet], what: &str) -> Result<CrispTopology, CliError> {
    CrispTopology::new(ctx.clone(), family.iter().copied()).map_err(|v| not_a_topology(ctx, what, &v))
}

fn need_parameter(parameter: Option<&str>) -> Result<&str, CliError> {
    parameter.ok_or_else(|| CliError::Usage("this document needs --parameter to select a crisp topology".into()))
}

fn crisp_topology(doc: &Document, parameter: Option<&str>) -> Result<CrispTopology, CliError> {
    let ctx = &doc.context;
    match &doc.payload {
        Payload::Topology(family) => crisp_family(ctx, family, "topology"),
        Payload::Topologies(families) => {
            let e = need_parameter(parameter)?;
            let j = ctx.parameter_index(e)?;
            crisp_family(ctx, &families[j], &format!("topologies.{e}"))
        }
        Payload::Opens(_) => Ok(extract_crisp(&soft_topology(doc)?, need_parameter(parameter)?)?),
        Payload::SoftSets(_) => Err(CliError::Usage("a soft_sets payload has no crisp topology".into())),
    }
}

fn system(doc: &Document) -> Result<CrispSystem, CliError> {
    let ctx = &doc.context;
    match &doc.payload {
        Payload::Topologies(families) => {
            let tops = ctx
                .parameters()
                .iter()
                .zip(families)
                .map(|(e, f)| crisp_family(ctx, f, &format!("topologies.{e}")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CrispSystem::new(ctx.clone(), tops)?)
        }
        Payload::Opens(_) => Ok(extract_system(&soft_topology(doc)?)),
        Payload::Topology(_) => Ok(CrispSystem::constant(ctx.clone(), &crisp_topology(doc, None)?)?),
        Payload::SoftSets(_) => Err(CliError::Usage("a soft_sets payload is not a crisp system".into())),
    }
}

fn document_value(doc: &Document) -> Value {
    serde_json::from_str(&doc.to_json()).expect("documents are valid JSON")
}

fn family_text<S: Render>(ctx: &Context, family: &[S]) -> String {
    let parts: Vec<String> = family.iter().map(|s| s.text(ctx)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Topology check of one payload: `Ok(None)` when fine, otherwise the
/// violation in text and JSON.
fn payload_violation(ctx: &Context, payload: &Payload) -> Option<(String, Value)> {
    fn describe<S: Render>(ctx: &Context, at: &str, v: softtop_core::Violation<S>) -> Option<(String, Value)> {
        Some((
            format!("{at}: {}", violation_text(ctx, &v)),
            json!({ "at": at, "violation": violation_json(ctx, &v) }),
        ))
    }
    match payload {
        Payload::Opens(f) => is_soft_topology(ctx, f).err().and_then(|v| describe(ctx, "opens", v)),
        Payload::Topology(f) => is_crisp_topology(ctx, f)
            .err()
            .and_then(|v| describe(ctx, "topology", v)),
        Payload::Topologies(fs) => ctx.parameters().iter().zip(fs).find_map(|(e, f)| {
            is_crisp_topology(ctx, f)
                .err()
                .and_then(|v| describe(ctx, &format!("topologies.{e}"), v))
        }),
        Payload::SoftSets(_) => None,
    }
}

fn payload_len(p: &Payload) -> usize {
    match p {
        Payload::Opens(f) | Payload::SoftSets(f) => f.len(),
        Payload::Topology(f) => f.len(),
        Payload::Topologies(fs) => fs.len(),
    }
}

fn validate(doc: &Document) -> Result<Outcome, CliError> {
    let ctx = &doc.context;
    let mut entries: Vec<(String, &Payload)> = vec![("document".to_string(), &doc.payload)];
    entries.extend(doc.items.iter().map(|(n, p)| (format!("item {n}"), p)));
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for (label, payload) in &entries {
        match payload_violation(ctx, payload) {
            None => lines.push(format!(
                "{label}: valid {} ({} members)",
                payload.kind(),
                payload_len(payload)
            )),
            Some((text, value)) => {
                lines.push(format!("{label}: invalid {}: {text}", payload.kind()));
                failures.push(json!({ "entry": label, "detail": value }));
            }
        }
    }
    let mut outcome = Outcome::verdict(failures.is_empty());
    lines.push(format!("verdict: {}", failures.is_empty()));
    outcome.lines = lines;
    if !failures.is_empty() {
        outcome.witness = Value::Array(failures);
    }
    Ok(outcome)
}

fn emit(doc: Document) -> Outcome {
    let mut outcome = Outcome::new(Value::Bool(true), 0);
    outcome.lines = vec![doc.to_json().trim_end().to_string()];
    outcome.result = Some(document_value(&doc));
    outcome
}

fn generate_cmd(args: &GenerateArgs) -> Result<Outcome, CliError> {
    let doc = Document::load(&args.file)?;
    let ctx = &doc.context;
    let guard = if args.allow_large {
        SizeGuard::unbounded()
    } else {
        SizeGuard::default()
    };
    let soft = |t: SoftTopology| Document::new(ctx.clone(), Payload::Opens(t.opens().to_vec()));
    let out = match args.formula {
        Some(1) => soft(formula1_with(&system(&doc)?, guard)?),
        Some(_) => soft(formula2(&crisp_topology(&doc, args.parameter.as_deref())?)),
        None if args.closure => match &doc.payload {
            Payload::Opens(f) | Payload::SoftSets(f) => soft(generate(ctx, f, guard)?),
            Payload::Topology(f) => {
                let t: Topology<softtop_core::PointSet> = generate(ctx, f, guard)?;
                Document::new(ctx.clone(), Payload::Topology(t.opens().to_vec()))
            }
            Payload::Topologies(_) => {
                return Err(CliError::Usage(
                    "--closure needs a soft_sets, opens or topology payload".into(),
                ))
            }
        },
        None if args.union_single_set => soft(union_single_set(&system(&doc)?)?),
        None => soft(associated(&soft_topology(&doc)?)?),
    };
    Ok(emit(out))
}

fn extract(doc: &Document, parameter: Option<&str>) -> Result<Outcome, CliError> {
    let ctx = &doc.context;
    let out = match parameter {
        Some(_) => Document::new(
            ctx.clone(),
            Payload::Topology(crisp_topology(doc, parameter)?.opens().to_vec()),
        ),
        None => {
            let sys = system(doc)?;
            Document::new(
                ctx.clone(),
                Payload::Topologies(sys.topologies().iter().map(|t| t.opens().to_vec()).collect()),
            )
        }
    };
    Ok(emit(out))
}

/// Report lines and witness for one axiom check.
fn axiom_outcome<S: Lattice + Render>(t: &Topology<S>, axiom: Axiom, label: &str) -> (bool, Vec<String>, Value) {
    let ctx = t.context();
    let report = check_with_evidence(t, axiom.kind);
    let mut lines = vec![format!("{label}: {}", report.holds)];
    let witness = match &report.failure {
        Some(failure) => {
            lines.push(format!("  witness: {}", failure_text(ctx, failure)));
            failure_json(ctx, failure)
        }
        None => {
            lines.extend(
                report
                    .evidence
                    .iter()
                    .map(|s| format!("  witness: {}", separation_text(ctx, s))),
            );
            json!({ "separations": report.evidence.iter().map(|s| separation_json(ctx, s)).collect::<Vec<_>>() })
        }
    };
    (report.holds, lines, witness)
}

fn check_cmd(args: &CheckArgs) -> Result<Outcome, CliError> {
    let doc = Document::load(&args.file)?;
    let inferred = match (&args.flavor, &doc.payload) {
        (Some(FlavorArg::Crisp), _) => Flavor::Crisp,
        (Some(FlavorArg::Soft), _) => Flavor::Soft,
        (None, Payload::Topology(_)) => Flavor::Crisp,
        (None, _) => Flavor::Soft,
    };
    let axiom = Axiom::parse(&args.axiom, inferred)
        .ok_or_else(|| CliError::Usage(format!("unknown axiom `{}`", args.axiom)))?;
    if args.flavor.is_some() && axiom.flavor != inferred {
        return Err(CliError::Usage(format!(
            "--axiom {} conflicts with --flavor",
            args.axiom
        )));
    }
    let name = axiom.kind.name();
    let (holds, lines, witness) = match axiom.flavor {
        Flavor::Soft => axiom_outcome(&soft_topology(&doc)?, axiom, &format!("soft {name}")),
        Flavor::Crisp => {
            let targets: Vec<(String, CrispTopology)> = match (&doc.payload, args.parameter.as_deref()) {
                (Payload::Topology(_), _) => {
                    vec![(format!("crisp {name}"), crisp_topology(&doc, None)?)]
                }
                (_, Some(e)) => vec![(format!("crisp {name} at {e}"), crisp_topology(&doc, Some(e))?)],
                (_, None) => {
                    let sys = system(&doc)?;
                    doc.context
                        .parameters()
                        .iter()
                        .zip(sys.topologies())
                        .map(|(e, t)| (format!("crisp {name} at {e}"), t.clone()))
                        .collect()
                }
            };
            if targets.len() == 1 {
                axiom_outcome(&targets[0].1, axiom, &targets[0].0)
            } else {
                let mut all = true;
                let mut lines = Vec::new();
                let mut slices = Vec::new();
                for ((label, t), e) in targets.iter().zip(doc.context.parameters()) {
                    let (h, l, w) = axiom_outcome(t, axiom, label);
                    all &= h;
                    lines.extend(l);
                    slices.push(json!({ "parameter": e, "verdict": h, "witness": w }));
                }
                (all, lines, json!({ "slices": slices }))
            }
        }
    };
    let mut outcome = Outcome::verdict(holds);
    outcome.lines = lines;
    outcome.lines.push(format!("verdict: {holds}"));
    outcome.witness = witness;
    Ok(outcome)
}

fn compare_cmd(a: &Document, b: &Document) -> Result<Outcome, CliError> {
    let verdict = match (&a.payload, &b.payload) {
        (Payload::Topology(_), Payload::Topology(_)) => compare(&crisp_topology(a, None)?, &crisp_topology(b, None)?)?,
        _ => compare(&soft_topology(a)?, &soft_topology(b)?)?,
    };
    let mut outcome = Outcome::new(Value::String(verdict.as_str().into()), 0);
    outcome.lines = vec![format!("verdict: {}", verdict.as_str())];
    Ok(outcome)
}

fn bounds(id: TheoremId, sweep: &SweepArgs) -> SweepBounds {
    let base = id.default_bounds();
    let n = sweep.max_points.unwrap_or(base.max_points);
    let m = sweep.params.unwrap_or(base.max_parameters);
    match (sweep.seed, sweep.samples) {
        (None, None) => SweepBounds::exhaustive(n, m),
        (seed, samples) => SweepBounds::random(n, m, seed.unwrap_or(0), samples.unwrap_or(1000)),
    }
}

fn bounds_text(b: &SweepBounds) -> String {
    match b.mode {
        softtop_core::lab::SweepMode::Exhaustive => {
            format!("exhaustive, {} points, {} parameters", b.max_points, b.max_parameters)
        }
        softtop_core::lab::SweepMode::Random { seed, samples } => format!(
            "random, seed {seed}, {samples} samples, {} points, {} parameters",
            b.max_points, b.max_parameters
        ),
    }
}

fn instance_document(instance: &Instance) -> Document {
    match instance {
        Instance::System(s) => Document::new(
            s.context().clone(),
            Payload::Topologies(s.topologies().iter().map(|t| t.opens().to_vec()).collect()),
        ),
        Instance::Soft(t) => Document::new(t.context().clone(), Payload::Opens(t.opens().to_vec())),
        Instance::Crisp(t) => Document::new(t.context().clone(), Payload::Topology(t.opens().to_vec())),
    }
}

fn sweep_outcome(outcome: &softtop_core::lab::VerificationOutcome, b: &SweepBounds, exit: i32) -> Outcome {
    let id = outcome.id;
    let mut out = Outcome::new(Value::String(outcome.status.as_str().into()), exit);
    out.cases_checked = Some(outcome.cases_checked);
    out.lines = vec![
        format!("theorem {id}: {}", id.statement()),
        format!("bounds: {}", bounds_text(b)),
        format!("status: {}", outcome.status.as_str()),
        format!("cases checked: {}", outcome.cases_checked),
    ];
    if let Some(c) = &outcome.counterexample {
        let doc = instance_document(&c.instance);
        out.lines.push(format!("detail: {}", c.detail));
        out.lines.push("instance:".into());
        out.lines.push(doc.to_json().trim_end().to_string());
        out.witness = json!({ "detail": c.detail, "instance": document_value(&doc) });
    }
    out
}

fn verify_cmd(id: &str, sweep: &SweepArgs) -> Result<Outcome, CliError> {
    let id = TheoremId::parse(id)?;
    let b = bounds(id, sweep);
    let outcome = verify_theorem(id, b)?;
    let exit = if outcome.status == Status::ProvenAtScale { 0 } else { 1 };
    Ok(sweep_outcome(&outcome, &b, exit))
}

fn search_cmd(id: &str, sweep: &SweepArgs) -> Result<Outcome, CliError> {
    let id = TheoremId::parse(id)?;
    let b = bounds(id, sweep);
    match search_converse_counterexample(id, b) {
        Ok(outcome) => Ok(sweep_outcome(&outcome, &b, 0)),
        Err(softtop_core::Error::NotFound(_)) => {
            let mut out = Outcome::new(Value::String("not-found".into()), 1);
            out.lines = vec![
                format!("theorem {id}: {}", id.statement()),
                format!("bounds: {}", bounds_text(&b)),
                "status: not-found".into(),
            ];
            Ok(out)
        }
        Err(e) => Err(e.into()),
    }
}

fn enumerate_cmd(points: usize, parameters: Option<usize>, count_only: bool) -> Result<Outcome, CliError> {
    let (count, lines, values): (usize, Vec<String>, Vec<Value>) = match parameters {
        None => {
            let all = softtop_core::lab::enumerate_crisp_topologies(points)?;
            let lines = all.iter().map(|t| family_text(t.context(), t.opens())).collect();
            let values = all
                .iter()
                .map(|t| Value::Array(t.opens().iter().map(|s| s.json(t.context())).collect()))
                .collect();
            (all.len(), lines, values)
        }
        Some(m) => {
            let all = enumerate_soft_topologies(points, m)?;
            let lines = all.iter().map(|t| family_text(t.context(), t.opens())).collect();
            let values = all
                .iter()
                .map(|t| Value::Array(t.opens().iter().map(|s| s.json(t.context())).collect()))
                .collect();
            (all.len(), lines, values)
        }
    };
    let mut out = Outcome::new(Value::Bool(true), 0);
    out.cases_checked = Some(count);
    out.lines = vec![format!("count: {count}")];
    if !count_only {
        out.lines.extend(lines);
        out.result = Some(Value::Array(values));
    }
    Ok(out)
}

fn fixtures_cmd(name: Option<&str>, write: Option<&PathBuf>) -> Result<Outcome, CliError> {
    let selected = match name {
        Some(n) => {
            vec![fixture(n).ok_or_else(|| CliError::Usage(format!("unknown fixture `{n}`")))?]
        }
        None => fixtures(),
    };
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut all = true;
    for f in &selected {
        let checks = f.verify();
        let passed = checks.iter().filter(|(_, ok)| *ok).count();
        all &= passed == checks.len();
        lines.push(format!("{}: {passed}/{} checks pass", f.name, checks.len()));
        if name.is_some() {
            for (label, ok) in &checks {
                lines.push(format!("  {} {label}", if *ok { "PASS" } else { "FAIL" }));
            }
            lines.extend(f.notes.iter().map(|n| format!("  note: {n}")));
        }
        if let Some(dir) = write {
            let path = dir.join(format!("{}.json", f.name));
            std::fs::create_dir_all(dir)
                .and_then(|_| std::fs::write(&path, fixture_files::fixture_document(f).to_json()))
                .map_err(|source| CliError::Write {
                    path: path.display().to_string(),
                    source,
                })?;
            lines.push(format!("  wrote {}", path.display()));
        }
        results.push(json!({
            "name": f.name,
            "checks": checks.iter().map(|(l, ok)| json!({ "label": l, "pass": ok })).collect::<Vec<_>>(),
            "notes": f.notes,
        }));
    }
    let mut out = Outcome::verdict(all);
    out.cases_checked = Some(results.len());
    out.lines = lines;
    out.result = Some(Value::Array(results));
    Ok(out)
}
