use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hopf_exact::corpus;
use hopf_exact::exactalg::FieldDescriptor;
use hopf_exact::format::serialize_algebra;
use hopf_exact::hopfcore::{drinfeld_double, dual, smash_with_s2, HopfAlgebraData};
use hopf_exact::suite::{extend_scalars, run_suite, Check, SuiteOptions, Target};
use hopf_exact::{Error, Result};

#[derive(Parser)]
#[command(name = "hopf-exact", version, about = "Exact verification of Hopf algebra invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks on algebra files or `corpus:<name>` targets.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated checks (axioms, filtration, idempotents, comatrix,
        /// big-identity, annihilation, qexp, smash) or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Compute N, L, ord(S²), exp and qexp.
    Invariants {
        #[command(flatten)]
        common: Common,
    },
    /// The built-in corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Write the Drinfeld double of a target in the text format.
    Double(Construct),
    /// Write H ⋊ k⟨S²⟩ in the text format.
    Smash(Construct),
    /// Write the dual Hopf algebra in the text format.
    Dual(Construct),
}

#[derive(Subcommand)]
enum CorpusAction {
    List {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Files or `corpus:<name>`; `corpus:all` expands to the whole corpus.
    #[arg(required = true)]
    targets: Vec<String>,
    /// Search cap for exponents (default: dim³ when decisive, else 64).
    #[arg(long)]
    cap: Option<u64>,
    #[arg(long)]
    json: bool,
    /// Embed scalars into a larger field, e.g. `cyclotomic:12`.
    #[arg(long, value_name = "cyclotomic:<m>")]
    field_override: Option<String>,
}

#[derive(Args)]
struct Construct {
    target: String,
    /// Output file (default: stdout).
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_name = "cyclotomic:<m>")]
    field_override: Option<String>,
}

fn parse_override(s: &Option<String>) -> Result<Option<FieldDescriptor>> {
    let Some(s) = s else { return Ok(None) };
    let m = s
        .strip_prefix("cyclotomic:")
        .and_then(|m| m.parse::<u32>().ok())
        .ok_or_else(|| Error::InvalidField(format!("expected cyclotomic:<m>, got `{s}`")))?;
    FieldDescriptor::cyclotomic(m).map(Some)
}

fn expand_targets(raw: &[String]) -> Vec<Target> {
    raw.iter()
        .flat_map(|t| {
            if t == "corpus:all" {
                corpus::build_corpus().iter().map(|e| Target::Corpus(e.name.to_string())).collect()
            } else {
                vec![Target::parse(t)]
            }
        })
        .collect()
}

fn run_checks(common: &Common, checks: Vec<Check>) -> Result<bool> {
    let opts = SuiteOptions {
        checks,
        cap: common.cap,
        field_override: parse_override(&common.field_override)?,
        ..Default::default()
    };
    let targets = expand_targets(&common.targets);
    // unknown names are usage errors, not failing checks
    for t in &targets {
        let known = match t {
            Target::Corpus(name) => corpus::find(name).is_some(),
            Target::File(path) => path.is_file(),
        };
        if !known {
            return Err(Error::UnknownTarget(t.label()));
        }
    }
    let mut ok = true;
    let mut json = Vec::new();
    for (t, r) in targets.iter().zip(run_suite(&targets, &opts)) {
        match r {
            Ok(report) => {
                ok &= report.all_pass();
                if common.json {
                    json.push(serde_json::to_value(&report).expect("report serializes"));
                } else {
                    print!("{}", report.render());
                }
            }
            Err(e) => {
                ok = false;
                if common.json {
                    json.push(serde_json::json!({ "target": t.label(), "error": e.to_string() }));
                } else {
                    println!("== {} ==\n  error: {e}", t.label());
                }
            }
        }
    }
    if common.json {
        println!("{}", serde_json::to_string_pretty(&json).expect("json"));
    }
    Ok(ok)
}

fn construct(c: &Construct, build: fn(&HopfAlgebraData) -> Result<HopfAlgebraData>) -> Result<()> {
    let (mut h, _) = Target::parse(&c.target).load()?;
    if let Some(f) = parse_override(&c.field_override)? {
        h = extend_scalars(&h, &f)?;
    }
    let text = serialize_algebra(&build(&h)?);
    match &c.output {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Format(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn list_corpus(json: bool) {
    let entries = corpus::build_corpus();
    if json {
        let v: Vec<_> = entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "name": e.name,
                    "description": e.description,
                    "field": e.field.to_string(),
                    "expected": e.expected,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        return;
    }
    for e in &entries {
        println!("{:<16} {:<14} dim {:<3} {}", e.name, e.field.to_string(), e.expected.dim, e.description);
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { common, checks } => run_checks(&common, Check::parse_list(&checks)?),
        Command::Invariants { common } => run_checks(&common, vec![Check::Filtration, Check::Annihilation, Check::Qexp]),
        Command::Corpus { action: CorpusAction::List { json } } => {
            list_corpus(json);
            Ok(true)
        }
        Command::Double(c) => construct(&c, |h| drinfeld_double(h).map(|d| d.double)).map(|_| true),
        Command::Smash(c) => construct(&c, smash_with_s2).map(|_| true),
        Command::Dual(c) => construct(&c, dual).map(|_| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
