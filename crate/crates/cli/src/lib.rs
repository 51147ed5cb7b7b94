//! Command-line front end: argument parsing, text/JSON rendering, and the check suites.

pub mod checks;
mod commands;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use checks::{run_suite, CheckOutcome, Suite};
pub use commands::{CanonicalJson, HomDimJson, TableauJson, TranslationJson, WebCoeffJson, WebEvalJson};

#[derive(Parser, Debug)]
#[command(name = "gl11", version, about = "Exact Hecke-algebra, gl(1|1) and web computations")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the JSON form of the result to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kazhdan-Lusztig basis element of the Hecke algebra of S_n.
    KlBasis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "WORD")]
        w: String,
    },
    /// Canonical basis element of the induced module with sign part P and trivial part Q.
    ModBasis {
        #[arg(long)]
        n: usize,
        /// Generators of the sign part, e.g. "1,3" (empty or "none" for the trivial group).
        #[arg(long, value_name = "GENS", default_value = "")]
        p: String,
        /// Generators of the trivial part.
        #[arg(long, value_name = "GENS", default_value = "")]
        q: String,
        #[arg(long, value_name = "WORD")]
        w: String,
    },
    /// Canonical basis of V(a); without --eta, the bar involution and every canonical element.
    Canonical {
        #[arg(long, value_name = "A")]
        comp: String,
        #[arg(long, value_name = "BITS")]
        eta: Option<String>,
    },
    /// Image of standard vectors under a web given as a word like "m1.s2:1".
    WebEval {
        #[arg(long, value_name = "A")]
        comp: String,
        #[arg(long, value_name = "WORD")]
        word: String,
        #[arg(long, value_name = "BITS")]
        bottom: Option<String>,
    },
    /// One matrix coefficient of a web, from the local vertex rules.
    WebCoeff {
        #[arg(long, value_name = "A")]
        comp: String,
        #[arg(long, value_name = "WORD")]
        word: String,
        #[arg(long, value_name = "BITS")]
        bottom: String,
        #[arg(long, value_name = "BITS")]
        top: String,
    },
    /// Hook tableaux of type A and shape (n-k, k).
    Tableaux {
        #[arg(long, value_name = "A")]
        comp: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        admissible_only: bool,
    },
    /// Matrix of a translation onto or out of the wall at position I.
    Translate {
        #[arg(long, value_name = "A")]
        comp: String,
        #[arg(long, value_name = "I")]
        pos: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        dir: DirArg,
        #[arg(long, default_value = "proper")]
        basis: BasisArg,
    },
    /// Hom dimension between projectives, by diagram count and by the form at q = 1.
    Homdim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "WORD")]
        w: String,
        #[arg(long, value_name = "WORD")]
        z: String,
    },
    /// Run a verification suite.
    Check {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirArg {
    Onto,
    Out,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Standard,
    Proper,
    Projective,
    Simple,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        let line = msg.to_string();
        let line = line.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments").trim();
        let line = if line.starts_with("error:") { line.to_string() } else { format!("error: {line}") };
        Self { code: 2, stdout: String::new(), stderr: format!("{line}\n") }
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: e.to_string(), stderr: String::new() };
            }
            return Outcome::usage(e);
        }
    };
    let report = match commands::execute(&cli.command) {
        Ok(r) => r,
        Err(commands::Failure::Usage(msg)) => return Outcome::usage(msg),
        Err(commands::Failure::Check(msg)) => {
            return Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    };
    let json = serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            return Outcome::usage(format!("cannot write {}: {e}", path.display()));
        }
    }
    let stdout = if cli.json { format!("{json}\n") } else { report.text };
    Outcome { code: if report.failed { 1 } else { 0 }, stdout, stderr: String::new() }
}
