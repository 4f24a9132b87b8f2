use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use trialg::catalog::{self, parse_assignment};
use trialg::generate::generate_nary;
use trialg::identities::AssocReport;
use trialg::iso::{iso_search_with, SearchMode};
use trialg::polysolve::{certify_expressibility, Caps, SolveStatus};
use trialg::ring::{rational_to_string, Ring, RingElem};
use trialg::Msc;

const EXIT_OK: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "trialg", version, about = "Exact computations with n-ary algebras given by structure constants")]
struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "TRIALG_JOBS", default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

/// An algebra from a JSON file or from the catalog.
#[derive(Args)]
struct Source {
    /// Path to an msc JSON document.
    #[arg(long, conflicts_with = "name")]
    input: Option<PathBuf>,
    /// Catalog entry name, e.g. A4 or Cstar.
    #[arg(long)]
    name: Option<String>,
    /// Parameter values for --name, e.g. a1=1,b2=-1/2; omit for the symbolic template.
    #[arg(long, requires = "name")]
    params: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n-algebra generated by a binary algebra.
    Generate {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 3)]
        arity: usize,
    },
    /// Associativity (arity 2) or total associativity (arity 3) report.
    Assoc {
        #[command(flatten)]
        source: Source,
    },
    /// Search GL(m, GF(p)) for a change of basis taking A to B.
    Iso {
        /// Path to A, or a catalog reference NAME[:a1=..,b2=..].
        #[arg(long)]
        a: String,
        /// Path to B, or a catalog reference NAME[:a1=..,b2=..].
        #[arg(long)]
        b: String,
        #[arg(long)]
        prime: u64,
        /// List every witness instead of the first one.
        #[arg(long)]
        all: bool,
    },
    /// Decide whether a 2-dimensional 3-algebra is generated by a binary algebra.
    Express {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ',', default_value = "5,7")]
        primes: Vec<u64>,
        /// Also run the Gröbner engine over Q.
        #[arg(long)]
        groebner: bool,
        #[arg(long, default_value_t = Caps::default().max_pairs)]
        max_pairs: u64,
        #[arg(long, default_value_t = Caps::default().max_degree)]
        max_degree: u32,
    },
    /// Dump the catalog, or one entry, as msc documents.
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
    /// Compare the generated 3-algebras with the embedded table.
    Table1Verify,
    /// Grid points where a family is totally associative.
    TotassocScan {
        #[arg(long)]
        family: String,
        /// Per-parameter values, e.g. "a1=0,1/2;b2=-1,1"; unnamed parameters use the default grid.
        #[arg(long)]
        grid: Option<String>,
    },
    /// Replay every table row and claim; the report goes to --out or stdout.
    PaperReplay {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print(value: &impl serde::Serialize) -> Result<(), Failure> {
    emit(&serde_json::to_string_pretty(value)?)
}

fn load_catalog(name: &str, params: Option<&str>) -> Result<Msc, Failure> {
    let entry = catalog::catalog_entry(name)?;
    let assignment = match params {
        Some(p) => parse_assignment(p)?,
        None => return Ok(entry.template.clone()),
    };
    Ok(entry.specialize(&assignment).map_err(|e| Failure(format!("{name}: {e}")))?)
}

fn load_file(path: &PathBuf) -> Result<Msc, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Msc::from_json(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load(source: &Source) -> Result<Msc, Failure> {
    match (&source.input, &source.name) {
        (Some(path), None) => load_file(path),
        (None, Some(name)) => load_catalog(name, source.params.as_deref()),
        _ => Err(Failure("exactly one of --input or --name is required".into())),
    }
}

fn load_reference(text: &str) -> Result<Msc, Failure> {
    let path = PathBuf::from(text);
    if path.exists() {
        return load_file(&path);
    }
    let (name, params) = match text.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (text, None),
    };
    if catalog::catalog_entry(name).is_err() {
        return Err(Failure(format!("`{text}` is neither a readable file nor a catalog entry")));
    }
    load_catalog(name, params)
}

fn parse_grid(family: &str, spec: Option<&str>) -> Result<(Vec<String>, Vec<Vec<trialg::ring::BigRational>>), Failure> {
    let entry = catalog::catalog_entry(family)?;
    let mut grid = catalog::default_grid(entry.params.len());
    for part in spec.unwrap_or("").split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, values) =
            part.split_once('=').ok_or_else(|| Failure(format!("grid axis `{part}` is not name=v1,v2,...")))?;
        let axis = entry
            .params
            .iter()
            .position(|p| p == name.trim())
            .ok_or_else(|| Failure(format!("{family} has no parameter `{}`", name.trim())))?;
        grid[axis] = values
            .split(',')
            .map(str::trim)
            .filter(|v| !v.is_empty())
            .map(|v| match Ring::Rationals.parse(v)? {
                RingElem::Rational(q) => Ok(q),
                _ => unreachable!(),
            })
            .collect::<trialg::Result<Vec<_>>>()?;
    }
    Ok((entry.params.clone(), grid))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Generate { source, arity } => {
            let m = load(&source)?;
            print(&generate_nary(&m, arity)?.to_document())?;
            Ok(EXIT_OK)
        }
        Command::Assoc { source } => {
            let report = AssocReport::new(&load(&source)?)?;
            print(&report.to_document())?;
            Ok(if report.verdict { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Iso { a, b, prime, all } => {
            let (a, b) = (load_reference(&a)?, load_reference(&b)?);
            let mode = if all { SearchMode::All } else { SearchMode::First };
            let search = iso_search_with(&a, &b, prime, mode)?;
            for w in &search.warnings {
                eprintln!("warning: {w}");
            }
            print(&search.to_document())?;
            Ok(if search.found() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Express { source, primes, groebner, max_pairs, max_degree } => {
            let c = load(&source)?;
            let caps = groebner.then_some(Caps { max_pairs, max_degree });
            let cert = certify_expressibility(&c, &primes, caps)?;
            print(&cert.to_document())?;
            Ok(match cert.outcome.status {
                SolveStatus::Witness => EXIT_OK,
                SolveStatus::NoSolutionModP | SolveStatus::CertifiedEmptyOverClosure => EXIT_FALSE,
                SolveStatus::ConsistentOverClosure | SolveStatus::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Catalog { name } => {
            let bundle = catalog::catalog_bundle();
            match name {
                None => print(&bundle)?,
                Some(n) => {
                    let entry = bundle.get(&n).ok_or_else(|| Failure(trialg::Error::UnknownEntry(n.clone()).to_string()))?;
                    print(entry)?
                }
            }
            Ok(EXIT_OK)
        }
        Command::Table1Verify => {
            let report = catalog::table1_verify();
            print(&report.to_document())?;
            Ok(if report.is_ok() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::TotassocScan { family, grid } => {
            let (params, grid) = parse_grid(&family, grid.as_deref())?;
            let points = catalog::totassoc_scan(&family, &grid)?;
            let as_maps: Vec<Value> = points
                .iter()
                .map(|pt| {
                    Value::Object(
                        params.iter().cloned().zip(pt.iter().map(|q| Value::String(rational_to_string(q)))).collect(),
                    )
                })
                .collect();
            print(&json!({ "family": family, "params": params, "points": as_maps }))?;
            Ok(EXIT_OK)
        }
        Command::PaperReplay { out } => {
            let report = catalog::paper_replay();
            let text = report.to_json();
            match out {
                Some(path) => fs::write(&path, text + "\n").map_err(|e| Failure(format!("{}: {e}", path.display())))?,
                None => emit(&text)?,
            }
            let s = report.summary();
            eprintln!(
                "{} claims: {} pass, {} erratum, {} fail, {} inconclusive",
                s.total, s.pass, s.erratum, s.fail, s.inconclusive
            );
            Ok(if s.ok { EXIT_OK } else { EXIT_FALSE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
