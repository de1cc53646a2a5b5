//! `hopfpar`: catalog listing, verification suites, `H_par` dimension
//! tables and interchange-format import/export.
//!
//! Exit status: 0 when every check passes, 1 when any check fails, 2 on
//! usage, lookup or parse errors.

use clap::{Parser, Subcommand, ValueEnum};
use hopfpar::catalog;
use hopfpar::format::{parse_document, parse_field, write_document, write_hopf, Document};
use hopfpar::suites::{run_suite, ParOptions, Subject, Suite, DEFAULT_DEGREE};
use hopfpar::{FieldSpec, Report};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "hopfpar", version, about = "Exact partial representation workbench for finite-dimensional Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    Coradical,
    Par,
    Smash,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Oracle {
    Groupoid,
    None,
}

#[derive(clap::Args)]
struct Common {
    /// Base field: `q` for the rationals or `fp:<p>`.
    #[arg(long, value_parser = field_arg)]
    field: Option<FieldSpec>,
    /// Also write the report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the named constructions.
    Catalog,
    /// Run verification suites on a catalog entry or an interchange file.
    Verify {
        name: String,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Truncated H_par and A_par with dimension tables.
    Par {
        name: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
        #[arg(long, value_enum, default_value = "groupoid")]
        oracle: Oracle,
        #[command(flatten)]
        common: Common,
    },
    /// Write a catalog entry in the interchange format.
    Export {
        name: String,
        path: PathBuf,
        #[arg(long, value_parser = field_arg)]
        field: Option<FieldSpec>,
    },
    /// Read an interchange file and verify its axioms.
    Import {
        path: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

/// Hard cap on truncation degree; the rewriting cost grows exponentially.
const MAX_DEGREE: usize = 12;

fn field_arg(s: &str) -> Result<FieldSpec, String> {
    parse_field(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn subject(name: &str, field: Option<FieldSpec>) -> Result<Subject, Failure> {
    if catalog::find(name).is_ok() {
        return Ok(Subject::from_catalog(name, field)?);
    }
    let path = Path::new(name);
    if path.is_file() {
        if field.is_some() {
            return Err(Failure::Usage("--field does not apply to a loaded file".into()));
        }
        let text = std::fs::read_to_string(path)?;
        return Ok(Subject::from_document(name, parse_document(&text)?));
    }
    Err(Failure::Usage(format!("unknown catalog entry or file {name:?}")))
}

fn emit(report: &Report, started: Instant, path: Option<&Path>) -> Result<ExitCode, Failure> {
    let text = report.render(Some(started.elapsed().as_millis()));
    print!("{text}");
    if let Some(p) = path {
        std::fs::write(p, &text)?;
    }
    Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn check_degree(d: usize) -> Result<(), Failure> {
    if d == 0 || d > MAX_DEGREE {
        return Err(Failure::Usage(format!("degree must be between 1 and {MAX_DEGREE}")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let started = Instant::now();
    match cli.command {
        Command::Catalog => {
            for e in catalog::entries() {
                let kind = match e.kind {
                    catalog::EntryKind::Hopf => "hopf",
                    catalog::EntryKind::Twist => "twist",
                };
                let field = match e.rule {
                    catalog::FieldRule::Any => "any".to_string(),
                    catalog::FieldRule::NotChar(p) => format!("char!={p}"),
                    catalog::FieldRule::Fixed(p) => format!("F_{p}"),
                };
                println!("{}\t{kind}\t{field}\t{}", e.name, e.description);
            }
            println!("count {}", catalog::entries().len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { name, suite, degree, common } => {
            check_degree(degree)?;
            let s = subject(&name, common.field)?;
            let suite = match suite {
                SuiteArg::Axioms => Suite::Axioms,
                SuiteArg::Coradical => Suite::Coradical,
                SuiteArg::Par => Suite::Par,
                SuiteArg::Smash => Suite::Smash,
                SuiteArg::All => Suite::All,
            };
            let opts = ParOptions { degree, groupoid_oracle: true };
            let report = run_suite(&s, suite, opts)?;
            emit(&report, started, common.report.as_deref())
        }
        Command::Par { name, degree, oracle, common } => {
            check_degree(degree)?;
            let s = subject(&name, common.field)?;
            let opts = ParOptions {
                degree,
                groupoid_oracle: matches!(oracle, Oracle::Groupoid),
            };
            let report = run_suite(&s, Suite::Par, opts)?;
            emit(&report, started, common.report.as_deref())
        }
        Command::Export { name, path, field } => {
            let e = catalog::find(&name)?;
            let text = match e.twist(field)? {
                Some(t) => write_document(&Document::Twist(t)),
                None => write_hopf(&e.hopf(field)?),
            };
            std::fs::write(&path, text)?;
            println!("wrote {} to {}", name, path.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Import { path, report } => {
            let text = std::fs::read_to_string(&path)?;
            let doc = parse_document(&text)?;
            let s = Subject::from_document(&path.display().to_string(), doc);
            let rep = run_suite(&s, Suite::Axioms, ParOptions::default())?;
            emit(&rep, started, report.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
