//! The `steiner` command line.
//!
//! Exit codes: 0 success or HOLDS, 1 checked and failed, 2 usage, IO or
//! validation error, 3 internal consistency violation.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use steiner_core::explorer::DEFAULT_MAX_LEAVES;
use steiner_core::identity::builtin_names;
use steiner_core::{
    affine_ag23, bose, elementary_abelian_loop, enumerate_sts_with_progress, fano, find_identities,
    find_pasch_configs, loop_to_quasigroup, parse_identity, projective, satisfies_mt_definition,
    satisfies_mt_fano, satisfies_mt_prop1, steiner_loop_10, sts_to_quasigroup, Builtin, CheckReport,
    ExploreOptions, Identity, MTReport, MtMethod,
};

use crate::corpus::default_witnesses;
use crate::format::{read_document, write_document, Document, FormatError, Kind};
use crate::par;
use crate::report::{Report, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "steiner", version, about = "Steiner triple systems, quasigroups and loops")]
struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress progress messages on standard error.
    #[arg(long, global = true)]
    quiet: bool,
    /// Report `elapsed_ms` as null so output is byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Override the inferred kind of input files.
    #[arg(long, global = true, value_enum)]
    kind: Option<Kind>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a named construction in the text format.
    Construct {
        #[arg(value_enum)]
        name: Construction,
        /// Dimension for `pg` and `ea`, parameter k for `bose`.
        param: Option<usize>,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check an identity on a loop or quasigroup table.
    Check {
        file: PathBuf,
        /// Identity such as "x(yz)=(xy)z".
        #[arg(long, required_unless_present = "builtin", conflicts_with = "builtin")]
        identity: Option<String>,
        /// Named identity (ID4, MOUFANG, EXTRA10, ASSOC, ...).
        #[arg(long)]
        builtin: Option<String>,
    },
    /// Decide whether a loop satisfies Moufang's theorem.
    Mt {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
    },
    /// Count the Pasch configurations of a triple system.
    Pasch {
        file: PathBuf,
        /// Also print every configuration as four blocks.
        #[arg(long)]
        list: bool,
    },
    /// Write one canonical file per isomorphism class of STS(v).
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Permit orders above 9.
        #[arg(long)]
        allow_slow: bool,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Search for identities holding in a target and failing in a witness.
    Explore {
        #[arg(long)]
        target: PathBuf,
        /// Witness files; the shipped corpus when absent.
        #[arg(long, num_args = 1..)]
        witness: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_LEAVES)]
        max_leaves: usize,
        /// Variable letters, in order.
        #[arg(long, default_value = "xyz")]
        vars: String,
    },
    /// Convert between triple systems, quasigroup tables and loop tables.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Kind,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Construct { .. } => "construct",
            Command::Check { .. } => "check",
            Command::Mt { .. } => "mt",
            Command::Pasch { .. } => "pasch",
            Command::Enumerate { .. } => "enumerate",
            Command::Explore { .. } => "explore",
            Command::Convert { .. } => "convert",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    Fano,
    Ag9,
    Loop10,
    Pg,
    Bose,
    Ea,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    #[value(name = "def", alias = "definition")]
    Def,
    Prop1,
    Fano,
    All,
}

#[derive(Debug, Default)]
struct Outcome {
    verdict: Option<&'static str>,
    counterexample: Option<Value>,
    count: Option<u64>,
    items: Vec<String>,
    text: String,
    exit: i32,
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Output goes to standard output and standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let start = Instant::now();
    let result = execute(&cli);
    let elapsed_ms = (!cli.no_timing).then(|| start.elapsed().as_millis() as u64);
    let (outcome, exit) = match result {
        Ok(o) => {
            let exit = o.exit;
            (o, exit)
        }
        Err(e) => {
            let message = format!("{e:#}");
            eprintln!("error: {message}");
            (Outcome { verdict: Some("ERROR"), items: vec![message], ..Outcome::default() }, 2)
        }
    };
    if cli.json {
        let report = Report {
            schema: SCHEMA_VERSION,
            command: cli.command.name().to_string(),
            verdict: outcome.verdict.map(str::to_string),
            counterexample: outcome.counterexample,
            count: outcome.count,
            items: outcome.items,
            elapsed_ms,
        };
        let line = serde_json::to_string(&report).expect("report serializes");
        write_stdout(&format!("{line}\n"));
    } else {
        write_stdout(&outcome.text);
    }
    exit
}

/// Writes to standard output, ignoring a closed pipe.
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Construct { name, param, output } => construct(*name, *param, output.as_deref()),
        Command::Check { file, identity, builtin } => {
            let identity = match (identity, builtin) {
                (Some(text), _) => parse_identity(text).map_err(|e| anyhow!("cannot parse {text:?}: {e}"))?,
                (None, Some(name)) => Builtin::from_name(name)
                    .ok_or_else(|| anyhow!("unknown builtin {name:?}; expected one of {}", builtin_names()))?
                    .identity(),
                (None, None) => bail!("either --identity or --builtin is required"),
            };
            check(&load(file, cli.kind)?, &identity)
        }
        Command::Mt { file, method } => mt(load(file, cli.kind)?, *method),
        Command::Pasch { file, list } => pasch(load(file, cli.kind)?, *list),
        Command::Enumerate { order, allow_slow, out_dir } => {
            enumerate(*order, *allow_slow, out_dir, cli.quiet)
        }
        Command::Explore { target, witness, max_leaves, vars } => {
            explore(target, witness, *max_leaves, vars, cli.kind, cli.quiet)
        }
        Command::Convert { file, to, output } => convert(load(file, cli.kind)?, *to, output.as_deref()),
    }
}

fn load(path: &Path, kind: Option<Kind>) -> anyhow::Result<Document> {
    read_document(path, kind).with_context(|| format!("reading {}", path.display()))
}

fn emit(doc: &Document, output: Option<&Path>) -> anyhow::Result<Outcome> {
    match output {
        Some(path) => {
            write_document(path, doc)?;
            Ok(Outcome {
                count: Some(1),
                items: vec![path.display().to_string()],
                text: format!("wrote {} to {}\n", doc.kind().name(), path.display()),
                ..Outcome::default()
            })
        }
        None => {
            let text = doc.to_text();
            Ok(Outcome { items: text.lines().map(str::to_string).collect(), text, ..Outcome::default() })
        }
    }
}

fn construct(name: Construction, param: Option<usize>, output: Option<&Path>) -> anyhow::Result<Outcome> {
    let needs = |what: &str| param.ok_or_else(|| anyhow!("construction needs an integer {what}"));
    let doc = match name {
        Construction::Fano => Document::Sts(fano()),
        Construction::Ag9 => Document::Sts(affine_ag23()),
        Construction::Loop10 => Document::Loop(steiner_loop_10()),
        Construction::Pg => Document::Sts(projective(needs("dimension")?)?),
        Construction::Bose => Document::Sts(bose(needs("parameter k")?)?),
        Construction::Ea => Document::Loop(elementary_abelian_loop(needs("dimension")?)?),
    };
    if param.is_some() && matches!(name, Construction::Fano | Construction::Ag9 | Construction::Loop10) {
        bail!("construction takes no parameter");
    }
    emit(&doc, output)
}

fn check_report(doc: &Document, identity: &Identity) -> anyhow::Result<CheckReport> {
    Ok(match doc {
        Document::Loop(t) => par::check_identity(identity, t)?,
        Document::Quasigroup(q) => par::check_identity(identity, q)?,
        Document::Sts(_) => {
            return Err(FormatError::WrongKind {
                expected: "a loop or quasigroup table",
                found: "a triple system",
            }
            .into())
        }
    })
}

fn check(doc: &Document, identity: &Identity) -> anyhow::Result<Outcome> {
    let r = check_report(doc, identity)?;
    let n = r.assignments_checked;
    Ok(match r.counterexample {
        None => Outcome {
            verdict: Some("HOLDS"),
            count: Some(n),
            text: format!("HOLDS {identity} ({n} assignments)\n"),
            ..Outcome::default()
        },
        Some(a) => {
            let map: serde_json::Map<String, Value> =
                a.0.iter().map(|(c, v)| (c.to_string(), json!(v))).collect();
            Outcome {
                verdict: Some("FAILS"),
                counterexample: Some(Value::Object(map)),
                count: Some(n),
                items: vec![a.to_string()],
                text: format!("FAILS {identity} at {a} ({n} assignments)\n"),
                exit: 1,
            }
        }
    })
}

fn mt(doc: Document, method: MethodArg) -> anyhow::Result<Outcome> {
    let t = doc.into_loop()?;
    let methods: &[MtMethod] = match method {
        MethodArg::Def => &[MtMethod::Definition],
        MethodArg::Prop1 => &[MtMethod::Prop1],
        MethodArg::Fano => &[MtMethod::Fano],
        MethodArg::All => &[MtMethod::Definition, MtMethod::Prop1, MtMethod::Fano],
    };
    let steiner = t.is_steiner();
    let mut reports: Vec<MTReport> = Vec::new();
    let mut text = String::new();
    let mut items = Vec::new();
    for &m in methods {
        let r = match m {
            MtMethod::Definition => satisfies_mt_definition(&t),
            // Under `all`, the Steiner-only criteria are skipped for other loops.
            _ if !steiner && method == MethodArg::All => {
                let line = format!("{m}: skipped (not a Steiner loop)");
                writeln!(text, "{line}").unwrap();
                items.push(line);
                continue;
            }
            MtMethod::Prop1 => satisfies_mt_prop1(&t)?,
            MtMethod::Fano => satisfies_mt_fano(&t)?,
        };
        let line = match r.counterexample {
            None => format!("{m}: SATISFIES ({} triples)", r.triples_examined),
            Some((x, y, z)) => format!("{m}: FAILS at ({x}, {y}, {z}) ({} triples)", r.triples_examined),
        };
        writeln!(text, "{line}").unwrap();
        items.push(line);
        reports.push(r);
    }
    let agree = reports.iter().all(|r| r.satisfies == reports[0].satisfies);
    let counterexample = reports.iter().find_map(|r| r.counterexample).map(|(x, y, z)| json!([x, y, z]));
    let (verdict, exit) = match (agree, reports[0].satisfies) {
        (false, _) => ("DISAGREE", 3),
        (true, true) => ("SATISFIES", 0),
        (true, false) => ("FAILS", 1),
    };
    if reports.len() > 1 {
        writeln!(
            text,
            "{}",
            if agree { "methods agree" } else { "DISAGREE: methods give different verdicts" }
        )
        .unwrap();
    }
    Ok(Outcome {
        verdict: Some(verdict),
        counterexample,
        count: Some(reports.len() as u64),
        items,
        text,
        exit,
    })
}

fn pasch(doc: Document, list: bool) -> anyhow::Result<Outcome> {
    let s = doc.into_sts()?;
    let configs = find_pasch_configs(&s);
    let mut text = format!("{} Pasch configurations\n", configs.len());
    let lines: Vec<String> = configs
        .iter()
        .map(|c| c.blocks().iter().map(|[a, b, c]| format!("{a} {b} {c}")).collect::<Vec<_>>().join(" | "))
        .collect();
    if list {
        for l in &lines {
            writeln!(text, "{l}").unwrap();
        }
    }
    Ok(Outcome {
        count: Some(configs.len() as u64),
        items: if list { lines } else { Vec::new() },
        text,
        ..Outcome::default()
    })
}

/// File name of the `index`-th class: `sts9a.sts`, `sts13b.sts`, ...
pub fn class_file_name(v: usize, index: usize) -> String {
    let mut suffix = String::new();
    let mut i = index;
    loop {
        suffix.insert(0, char::from(b'a' + (i % 26) as u8));
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    format!("sts{v}{suffix}.sts")
}

fn enumerate(v: usize, allow_slow: bool, out_dir: &Path, quiet: bool) -> anyhow::Result<Outcome> {
    let mut last = Instant::now();
    let classes = enumerate_sts_with_progress(v, allow_slow, &mut |p| {
        if !quiet && last.elapsed() >= Duration::from_secs(1) {
            eprintln!("enumerate: {} labelled systems, {} classes", p.systems, p.classes);
            last = Instant::now();
        }
    })?;
    std::fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let mut items = Vec::new();
    let mut text = format!("{} isomorphism classes of STS({v})\n", classes.len());
    for (i, s) in classes.into_iter().enumerate() {
        let path = out_dir.join(class_file_name(v, i));
        write_document(&path, &Document::Sts(s))?;
        writeln!(text, "{}", path.display()).unwrap();
        items.push(path.display().to_string());
    }
    Ok(Outcome { count: Some(items.len() as u64), items, text, ..Outcome::default() })
}

fn explore(
    target: &Path,
    witnesses: &[PathBuf],
    max_leaves: usize,
    vars: &str,
    kind: Option<Kind>,
    quiet: bool,
) -> anyhow::Result<Outcome> {
    let variables: Vec<char> = vars.chars().collect();
    if variables.is_empty() || !variables.iter().all(char::is_ascii_lowercase) {
        bail!("--vars must be lowercase letters, found {vars:?}");
    }
    if (1..variables.len()).any(|i| variables[..i].contains(&variables[i])) {
        bail!("--vars repeats a letter: {vars:?}");
    }
    if max_leaves > DEFAULT_MAX_LEAVES {
        eprintln!("warning: --max-leaves {max_leaves} exceeds {DEFAULT_MAX_LEAVES}; the search may take a long time");
    }
    let target = load(target, kind)?.into_loop()?;
    let named = if witnesses.is_empty() {
        default_witnesses()
    } else {
        witnesses
            .iter()
            .map(|p| {
                let name = p
                    .file_stem()
                    .map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned());
                Ok((name, load(p, kind)?.into_loop()?))
            })
            .collect::<anyhow::Result<Vec<_>>>()?
    };
    let (names, loops): (Vec<String>, Vec<_>) = named.into_iter().unzip();
    let options = ExploreOptions { variables, max_leaves };
    let found = find_identities(&target, &loops, &options)?;
    if found.is_empty() && !quiet {
        eprintln!("explore: no separating identities found");
    }
    let items: Vec<String> = found.iter().map(|f| format!("{}\t{}", f.identity, names[f.witness])).collect();
    let text: String = items.iter().map(|l| format!("{l}\n")).collect();
    Ok(Outcome { count: Some(items.len() as u64), items, text, ..Outcome::default() })
}

fn convert(doc: Document, to: Kind, output: Option<&Path>) -> anyhow::Result<Outcome> {
    let converted = match (to, doc) {
        (Kind::Sts, d) => Document::Sts(d.into_sts()?),
        (Kind::Loop, d) => Document::Loop(d.into_loop()?),
        (Kind::Quasigroup, Document::Quasigroup(q)) => Document::Quasigroup(q),
        (Kind::Quasigroup, Document::Sts(s)) => Document::Quasigroup(sts_to_quasigroup(&s)?),
        (Kind::Quasigroup, Document::Loop(t)) => Document::Quasigroup(loop_to_quasigroup(&t)?),
    };
    emit(&converted, output)
}
