//! Command-line front end.
//!
//! Exit codes: 0 when every verdict passes, 1 when a verdict fails (the report is
//! still written), 2 for usage or input errors.

pub mod files;
pub mod report;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::commute::centralizer;
use crate::constructions::{BkmParams, ConstructionParams, Family};
use crate::error::{Error, Result};
use crate::length::{algebra_closure, length_report, LengthReport, DEFAULT_WORD_BUDGET};
use crate::scalar::Field;

pub use files::{to_json, GeneratorEntry, GeneratorSetFile};
pub use report::{verify_family, verify_system, VerificationReport, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "commalg", version, about = "Maximal commutative matrix subalgebras and their lengths")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the generator set of a family as JSON.
    Construct(ConstructArgs),
    /// Check maximality, length and the radical bound.
    Verify(VerifyArgs),
    /// Report the word filtration of a generator file.
    Length(InputArgs),
    /// Dump a basis of the centralizer of a generator file.
    Centralizer(InputArgs),
    /// Verify every valid parameter tuple in a grid.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Bkml,
    Bkm,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
}

impl FamilyArgs {
    fn family(&self) -> Result<Family> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::InvalidInput(format!("--{name} is required")))
        };
        let kind = self.family.ok_or_else(|| Error::InvalidInput("--family is required".into()))?;
        let (n, m, k) = (need(self.n, "n")?, need(self.m, "m")?, need(self.k, "k")?);
        match kind {
            FamilyKind::Bkml => Ok(Family::Bkml(ConstructionParams::new(n, m, need(self.l, "l")?, k)?)),
            FamilyKind::Bkm => {
                if self.l.is_some() {
                    return Err(Error::InvalidInput("--l does not apply to bkm".into()));
                }
                Ok(Family::Bkm(BkmParams::new(n, m, k)?))
            }
        }
    }
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub params: FamilyArgs,
    #[arg(long, default_value = "rational")]
    pub field: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Generator file; alternatively give --family and its parameters.
    #[arg(long, conflicts_with = "family")]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub params: FamilyArgs,
    /// Field to compute in; defaults to the file's field, or rational.
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long, default_value_t = 25)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
    pub word_budget: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value = "bkml")]
    pub family: FamilyKind,
    /// Inclusive range `a..b`, or a single value.
    #[arg(long)]
    pub n: String,
    /// Defaults to `1..max(n)`.
    #[arg(long)]
    pub m: Option<String>,
    /// Defaults to `1..max(n)`; ignored for bkm.
    #[arg(long)]
    pub l: Option<String>,
    #[arg(long)]
    pub k: String,
    #[arg(long, default_value = "rational")]
    pub field: String,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, default_value_t = 25)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
    pub word_budget: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a command produced: the JSON text, where it goes, and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub json: String,
    pub out: Option<PathBuf>,
    pub exit_code: i32,
    /// One-line human summary for stderr.
    pub summary: Option<String>,
}

/// Parses an inclusive range `a..b` (also `a..=b`) or a single integer.
pub fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let bad = || Error::InvalidInput(format!("bad range `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(num(a)?..=num(b)?)
        }
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<GeneratorSetFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    GeneratorSetFile::parse(&text)
}

fn parse_field(s: Option<&str>) -> Result<Option<Field>> {
    s.map(str::parse).transpose()
}

#[derive(Serialize)]
struct LengthOutput {
    n: usize,
    field: String,
    system_labels: Vec<String>,
    #[serde(flatten)]
    report: LengthReport,
}

#[derive(Serialize)]
struct CentralizerOutput {
    n: usize,
    field: String,
    dimension: usize,
    basis: Vec<Vec<files::Entry>>,
}

#[derive(Serialize)]
struct Skipped {
    params: report::ParamsJson,
    reason: String,
}

#[derive(Serialize)]
struct SweepSummary {
    passed: usize,
    failed: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct SweepOutput {
    reports: Vec<VerificationReport>,
    skipped: Vec<Skipped>,
    summary: SweepSummary,
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Construct(args) => {
            let field: Field = args.field.parse()?;
            let system = args.params.family()?.generators(field)?;
            Ok(Outcome {
                json: to_json(&GeneratorSetFile::from_system(&system)),
                out: args.out.clone(),
                exit_code: EXIT_OK,
                summary: None,
            })
        }
        Command::Verify(args) => {
            let opts = VerifyOptions { samples: args.samples, seed: args.seed, word_budget: args.word_budget };
            let field = parse_field(args.field.as_deref())?;
            let report = match &args.input {
                Some(path) => verify_system(&read_input(path)?.to_system(field)?, &opts)?,
                None => {
                    let family = args.params.family()?;
                    verify_family(&family, field.unwrap_or(Field::Rational), &opts)?
                }
            };
            Ok(Outcome {
                exit_code: if report.passed { EXIT_OK } else { EXIT_VERDICT },
                summary: Some(format!(
                    "verify: {}",
                    if report.passed { "pass".to_string() } else { report.failures.join("; ") }
                )),
                json: to_json(&report),
                out: args.out.clone(),
            })
        }
        Command::Length(args) => {
            let system = read_input(&args.input)?.to_system(parse_field(args.field.as_deref())?)?;
            let target = algebra_closure(&system)?;
            let report = length_report(&system, &target)?;
            let out = LengthOutput {
                n: system.n(),
                field: system.field().to_string(),
                system_labels: system.labels().map(str::to_string).collect(),
                report,
            };
            Ok(Outcome { json: to_json(&out), out: args.out.clone(), exit_code: EXIT_OK, summary: None })
        }
        Command::Centralizer(args) => {
            let system = read_input(&args.input)?.to_system(parse_field(args.field.as_deref())?)?;
            let mats: Vec<_> = system.matrices().cloned().collect();
            let c = centralizer(system.field(), system.n(), &mats)?;
            let basis = c.basis_matrices()?.iter().map(files::matrix_entries).collect();
            let out = CentralizerOutput {
                n: system.n(),
                field: system.field().to_string(),
                dimension: c.dim(),
                basis,
            };
            Ok(Outcome { json: to_json(&out), out: args.out.clone(), exit_code: EXIT_OK, summary: None })
        }
        Command::Sweep(args) => sweep(args),
    }
}

/// All `(family, params)` candidates in lexicographic `(n, m, l, k)` order, split
/// into valid families and skipped tuples.
/// Valid families and `(params, reason)` for each skipped tuple.
pub type SweepGrid = (Vec<Family>, Vec<(report::ParamsJson, String)>);

pub fn sweep_grid(args: &SweepArgs) -> Result<SweepGrid> {
    let ns = parse_range(&args.n)?;
    let n_max = *ns.end();
    let ms = match &args.m {
        Some(s) => parse_range(s)?,
        None => 1..=n_max,
    };
    let ls = match (&args.l, args.family) {
        (_, FamilyKind::Bkm) => 0..=0,
        (Some(s), _) => parse_range(s)?,
        (None, _) => 1..=n_max,
    };
    let ks = parse_range(&args.k)?;
    let mut valid = Vec::new();
    let mut skipped = Vec::new();
    for n in ns {
        for m in ms.clone() {
            for l in ls.clone() {
                for k in ks.clone() {
                    let (family, params) = match args.family {
                        FamilyKind::Bkml => (
                            ConstructionParams::new(n, m, l, k).map(Family::Bkml),
                            report::ParamsJson { family: "bkml", n, m, l: Some(l), k },
                        ),
                        FamilyKind::Bkm => (
                            BkmParams::new(n, m, k).map(Family::Bkm),
                            report::ParamsJson { family: "bkm", n, m, l: None, k },
                        ),
                    };
                    match family {
                        Ok(f) => valid.push(f),
                        Err(e) => skipped.push((params, e.to_string())),
                    }
                }
            }
        }
    }
    Ok((valid, skipped))
}

fn sweep(args: &SweepArgs) -> Result<Outcome> {
    let field: Field = args.field.parse()?;
    let (valid, skipped) = sweep_grid(args)?;
    if valid.is_empty() {
        return Err(Error::InvalidInput("no valid parameter tuple in the given ranges".into()));
    }
    let opts = VerifyOptions { samples: args.samples, seed: args.seed, word_budget: args.word_budget };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    // par_iter().collect() keeps input order
    let reports = pool.install(|| {
        valid
            .par_iter()
            .map(|f| verify_family(f, field, &opts))
            .collect::<Result<Vec<_>>>()
    })?;
    let passed = reports.iter().filter(|r| r.passed).count();
    let failed = reports.len() - passed;
    let summary = SweepSummary { passed, failed, skipped: skipped.len() };
    let line = format!(
        "sweep: {} passed, {} failed, {} skipped",
        summary.passed, summary.failed, summary.skipped
    );
    let out = SweepOutput {
        reports,
        skipped: skipped.into_iter().map(|(params, reason)| Skipped { params, reason }).collect(),
        summary,
    };
    Ok(Outcome {
        json: to_json(&out),
        out: args.out.clone(),
        exit_code: if failed == 0 { EXIT_OK } else { EXIT_VERDICT },
        summary: Some(line),
    })
}

/// Runs a parsed command, writes its output, and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(outcome) => {
            let written = match &outcome.out {
                Some(path) => fs::write(path, &outcome.json),
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(outcome.json.as_bytes())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
            if let Some(line) = outcome.summary {
                eprintln!("{line}");
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
