//! Command-line front end.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::lattice::GramDocument;
use crate::orbifold::{Orbifold, VerifyOptions, DEFAULT_MAX_DET};
use crate::report::Report;

/// Exit status for success or a passing verification.
pub const EXIT_OK: i32 = 0;
/// Exit status when some verification check fails.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit status for unreadable input, bad labels and invalid lattices.
pub const EXIT_INPUT: i32 = 2;

/// Base-algebra checks are skipped above this many V_{√2L}^+ labels.
const BASE_SUITE_MAX_LABELS: usize = 256;

#[derive(Debug, Parser)]
#[command(
    name = "orbifold-fusion",
    version,
    about = "Exact fusion data of the 2-permutation orbifold (V_L ⊗ V_L)^Z2",
    long_about = "Exact fusion data of the 2-permutation orbifold (V_L ⊗ V_L)^Z2.\n\n\
                  The lattice is read from a JSON file {\"gram\": [[...]]} (use - for stdin).\n\
                  Labels: D(coords;eps), N(coords,coords), T(coords;eps), with coordinates\n\
                  in the basis of the Gram matrix, e.g. D(1/2;0), N(0,1/2), T(0;1)."
)]
struct Cli {
    /// Print timing information to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Path to the Gram-matrix JSON document, or - for stdin.
    gram: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List all irreducible modules.
    Modules(Input),
    /// Quantum dimension of every module and the global dimension.
    Qdims(Input),
    /// Fusion product of two modules.
    Fuse {
        #[command(flatten)]
        input: Input,
        a: String,
        b: String,
    },
    /// Constituents over V_{√2L} ⊗ V_{√2L}^+.
    Decompose {
        #[command(flatten)]
        input: Input,
        label: String,
    },
    /// Full fusion table.
    Table {
        /// Path to the Gram-matrix JSON document, or - for stdin.
        gram: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text, conflicts_with_all = ["json", "csv"])]
        format: Format,
        /// Same as --format json.
        #[arg(long)]
        json: bool,
        /// Same as --format csv.
        #[arg(long)]
        csv: bool,
        /// Refuse lattices with |L°/L| above this bound.
        #[arg(long, default_value_t = DEFAULT_MAX_DET, value_parser = clap::value_parser!(i64).range(1..))]
        max_l: i64,
    },
    /// Check the fusion-ring axioms and structural identities.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Refuse lattices with |L°/L| above this bound.
        #[arg(long, default_value_t = DEFAULT_MAX_DET, value_parser = clap::value_parser!(i64).range(1..))]
        max_l: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Resolved settings for one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub format: OutputFormat,
    pub max_l: i64,
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

fn load(path: &Path) -> Result<Orbifold> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    Ok(Orbifold::new(GramDocument::from_json(&text)?.into_lattice()?))
}

fn to_json_line(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Runs the CLI with explicit argument list and output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(shown.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(shown.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    let started = std::time::Instant::now();
    let verbose = cli.verbose;
    let result = execute(cli);
    if verbose {
        let _ = writeln!(err, "elapsed: {:.3}s", started.elapsed().as_secs_f64());
    }
    match result {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn config(cli: &Cli) -> RunConfig {
    let (input, format, max_l) = match &cli.command {
        Command::Modules(i) | Command::Qdims(i) => (i, None, DEFAULT_MAX_DET),
        Command::Fuse { input, .. } | Command::Decompose { input, .. } => (input, None, DEFAULT_MAX_DET),
        Command::Verify { input, max_l, .. } => (input, None, *max_l),
        Command::Table { gram, format, json, csv, max_l } => {
            let f = match (json, csv, format) {
                (true, _, _) | (_, _, Format::Json) => OutputFormat::Json,
                (_, true, _) | (_, _, Format::Csv) => OutputFormat::Csv,
                _ => OutputFormat::Text,
            };
            return RunConfig { input: gram.clone(), format: f, max_l: *max_l, verbose: cli.verbose };
        }
    };
    let format = format.unwrap_or(if input.json { OutputFormat::Json } else { OutputFormat::Text });
    RunConfig { input: input.gram.clone(), format, max_l, verbose: cli.verbose }
}

fn execute(cli: Cli) -> Result<(String, i32)> {
    let cfg = config(&cli);
    let orb = load(&cfg.input)?;
    let json = cfg.format == OutputFormat::Json;
    let mut text = String::new();
    match &cli.command {
        Command::Modules(_) => {
            let mods = orb.enumerate_modules();
            if json {
                let items: Vec<_> = mods.iter().map(|m| json!({"name": m.to_string(), "label": m})).collect();
                text = to_json_line(&json!({"det": orb.lattice().det(), "count": mods.len(), "modules": items}));
            } else {
                for m in mods {
                    text += &format!("{m}\n");
                }
            }
        }
        Command::Qdims(_) => {
            let mods = orb.enumerate_modules();
            if json {
                let items: Vec<_> = mods
                    .iter()
                    .map(|m| json!({"name": m.to_string(), "qdim": orb.qdim(m).to_string(), "simple_current": orb.is_simple_current(m)}))
                    .collect();
                text = to_json_line(&json!({"modules": items, "glob": orb.glob().to_string()}));
            } else {
                for m in mods {
                    text += &format!("{m} {}\n", orb.qdim(m));
                }
                text += &format!("glob {}\n", orb.glob());
            }
        }
        Command::Fuse { a, b, .. } => {
            let (a, b) = (orb.parse_label(a)?, orb.parse_label(b)?);
            let p = orb.fuse(&a, &b);
            if json {
                let items: Vec<_> = p.iter().map(|(c, n)| json!({"name": c.to_string(), "label": c, "multiplicity": n})).collect();
                text = to_json_line(&json!({"a": a.to_string(), "b": b.to_string(), "product": items}));
            } else {
                for (c, n) in p.iter() {
                    if n == 1 {
                        text += &format!("{c}\n");
                    } else {
                        text += &format!("{n}*{c}\n");
                    }
                }
            }
        }
        Command::Decompose { label, .. } => {
            let m = orb.parse_label(label)?;
            let parts = orb.decompose(&m);
            if json {
                text = to_json_line(&json!({"label": m.to_string(), "constituents": parts}));
            } else {
                for c in parts {
                    text += &format!("{c}\n");
                }
            }
        }
        Command::Table { .. } => {
            let t = orb.fusion_table(cfg.max_l)?;
            match cfg.format {
                OutputFormat::Json => text = to_json_line(&t.to_json()),
                OutputFormat::Csv => text = t.to_csv(),
                OutputFormat::Text => {
                    for a in 0..t.len() {
                        for b in 0..t.len() {
                            let terms: Vec<String> = t
                                .product(a, b)
                                .iter()
                                .map(|&(c, n)| if n == 1 { t.labels()[c].to_string() } else { format!("{n}*{}", t.labels()[c]) })
                                .collect();
                            text += &format!("{} x {} = {}\n", t.labels()[a], t.labels()[b], terms.join(" + "));
                        }
                    }
                }
            }
        }
        Command::Verify { .. } => {
            let options = VerifyOptions { max_det: cfg.max_l, ..VerifyOptions::default() };
            let mut report = orb.verify(options)?;
            if orb.base().labels().len() <= BASE_SUITE_MAX_LABELS {
                prefix_into(&mut report, "base ", orb.base().verify());
            }
            let code = if report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            text = if json {
                to_json_line(&json!({"passed": report.all_passed(), "checks": report.checks}))
            } else {
                let verdict = if report.all_passed() { "all checks passed" } else { "verification FAILED" };
                format!("{report}{verdict}\n")
            };
            return Ok((text, code));
        }
    }
    Ok((text, EXIT_OK))
}

fn prefix_into(into: &mut Report, prefix: &str, from: Report) {
    for mut c in from.checks {
        c.name = format!("{prefix}{}", c.name);
        into.checks.push(c);
    }
}
