//! Command-line front end: validate, convert, and query corpora of
//! constrained-TEI lexicon files.
//!
//! Exit codes: 0 for success with no errors, 1 when validation errors
//! were found, 2 for usage or IO failures. Payload goes to stdout;
//! diagnostics of the query commands go to stderr so the payload stays
//! machine-readable.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lmfkit::json::export_json;
use lmfkit::render::{diagnostic_line, etym_trace, report_json, report_text};
use lmfkit::stats::{stats, stats_json, stats_text};
use lmfkit::store::{ingest, lookup, Store};
use lmfkit_core::tei::canonicalize;
use lmfkit_core::{SerializationProfile, ValidationReport};

#[derive(Parser)]
#[command(name = "lmfkit", version, about = "Lexicon toolkit for constrained TEI corpora")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Tei,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate files, one line per diagnostic.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Profile file; defaults to $LMFKIT_PROFILE, then the built-in
        /// profile.
        #[arg(long)]
        profile: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rewrite one file in canonical form, as TEI or as JSON.
    Convert {
        file: PathBuf,
        /// Canonical serialization (already the default; kept as an
        /// explicit switch).
        #[arg(long)]
        canonical: bool,
        #[arg(long, value_enum, default_value_t = Target::Tei)]
        to: Target,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find entries whose lemma matches the headword exactly.
    Lookup {
        headword: String,
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
    },
    /// Print the etymological chain of a headword.
    Etym {
        headword: String,
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
    },
    /// Corpus-wide counts.
    Stats {
        #[arg(long, required = true, num_args = 1..)]
        corpus: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Failure outside the document model: unreadable files, bad profiles,
/// unwritable output. Always exit 2.
struct Failure(String);

impl From<lmfkit::store::IngestError> for Failure {
    fn from(error: lmfkit::store::IngestError) -> Self {
        Failure(error.to_string())
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("lmfkit: {message}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, Failure> {
    match Cli::parse().command {
        Command::Validate {
            files,
            profile,
            format,
        } => {
            let profile = load_profile(profile.as_deref())?;
            let store = ingest(&files, &profile)?;
            match format {
                Format::Text => print!("{}", report_text(&store.report)),
                Format::Json => println!("{}", report_json(&store.report)),
            }
            Ok(exit_for(&store.report))
        }
        Command::Convert {
            file,
            canonical: _,
            to,
            output,
        } => {
            let profile = load_profile(None)?;
            match to {
                Target::Tei => {
                    let bytes = fs::read(&file)
                        .map_err(|e| Failure(format!("cannot read {}: {e}", file.display())))?;
                    let mut report = canonicalize(&bytes, &profile);
                    let label = file.display().to_string();
                    for d in &mut report.diagnostics {
                        if d.file.is_none() {
                            d.file = Some(label.clone());
                        }
                        eprintln!("{}", diagnostic_line(d));
                    }
                    match report.value {
                        Some(out) => {
                            write_output(output.as_deref(), &out)?;
                            Ok(ExitCode::SUCCESS)
                        }
                        None => Ok(ExitCode::from(1)),
                    }
                }
                Target::Json => {
                    let store = ingest(&[file], &profile)?;
                    print_diagnostics_stderr(&store.report);
                    match export_json(&store) {
                        Ok(json) => {
                            let mut bytes = json.into_bytes();
                            bytes.push(b'\n');
                            write_output(output.as_deref(), &bytes)?;
                            Ok(exit_for(&store.report))
                        }
                        Err(error) => {
                            eprintln!("ERROR {} -:-:- - {}", error.code, error.message);
                            Ok(ExitCode::from(1))
                        }
                    }
                }
            }
        }
        Command::Lookup { headword, corpus } => {
            let store = ingest_corpus(&corpus)?;
            for summary in lookup(&store, &headword) {
                println!(
                    "{}\t{}\t{}",
                    summary.id,
                    summary.language.as_deref().unwrap_or("-"),
                    summary.senses
                );
            }
            Ok(exit_for(&store.report))
        }
        Command::Etym { headword, corpus } => {
            let store = ingest_corpus(&corpus)?;
            match etym_trace(&store, &headword) {
                Ok(trace) => {
                    println!("{trace}");
                    Ok(exit_for(&store.report))
                }
                Err(error) => {
                    eprintln!("lmfkit: {error}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Stats { corpus, format } => {
            let store = ingest_corpus(&corpus)?;
            let report = stats(&store);
            match format {
                Format::Text => print!("{}", stats_text(&report)),
                Format::Json => println!("{}", stats_json(&report)),
            }
            Ok(exit_for(&store.report))
        }
    }
}

fn ingest_corpus(paths: &[PathBuf]) -> Result<Store, Failure> {
    let profile = load_profile(None)?;
    let store = ingest(paths, &profile)?;
    print_diagnostics_stderr(&store.report);
    Ok(store)
}

fn print_diagnostics_stderr(report: &ValidationReport) {
    for d in &report.diagnostics {
        eprintln!("{}", diagnostic_line(d));
    }
}

fn exit_for(report: &ValidationReport) -> ExitCode {
    if report.has_errors() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

/// Profile resolution: explicit flag, then $LMFKIT_PROFILE, then the
/// built-in profile. An empty variable counts as unset.
fn load_profile(flag: Option<&Path>) -> Result<SerializationProfile, Failure> {
    let path = flag.map(PathBuf::from).or_else(|| {
        std::env::var_os("LMFKIT_PROFILE")
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    });
    match path {
        None => Ok(SerializationProfile::default_profile()),
        Some(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure(format!("cannot read profile {}: {e}", path.display())))?;
            SerializationProfile::load(&text)
                .map_err(|e| Failure(format!("invalid profile {}: {e}", path.display())))
        }
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| Failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure(format!("cannot write to stdout: {e}")))
        }
    }
}
