use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use equiloc_cli::{run, Command, Format, JobSpec};
use equiloc_core::Rational;

#[derive(Parser)]
#[command(name = "equiloc", version, about = "Localization invariants of Hamiltonian circle actions")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a polytope and print its vertices.
    Check(Opts),
    /// The invariant S of one circle action.
    #[command(name = "s-class")]
    SClass(Opts),
    /// Run the necessary conditions on two actions of one polytope.
    Compare(Opts),
    /// Type, kappa and (for Hirzebruch surfaces) subtype of an action.
    Classify(Opts),
    /// Decide homotopy of two actions where a complete criterion is known.
    Decide(Opts),
    /// The invariant S of an action on a coadjoint orbit.
    #[command(name = "orbit-s-class")]
    OrbitSClass(Opts),
    /// Compare two actions on a coadjoint orbit.
    #[command(name = "orbit-compare")]
    OrbitCompare(Opts),
    /// Decide every pair of vectors in a box.
    Sweep(Opts),
    /// Execute a job stored as JSON.
    Job {
        path: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Latex,
    Json,
}

#[derive(Args)]
struct Opts {
    /// Polytope or orbit description (JSON).
    #[arg(long, visible_alias = "manifold")]
    file: Option<PathBuf>,
    /// simplex, hirzebruch, pl_bundle or s2xs2.
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long)]
    sigma: Option<Rational>,
    #[arg(long)]
    tau: Option<Rational>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    a: Option<Vec<i64>>,
    /// Orbit spectrum, weakly decreasing.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    spectrum: Option<Vec<Rational>>,
    #[arg(long, visible_alias = "b", value_delimiter = ',', allow_hyphen_values = true)]
    vector: Option<Vec<i64>>,
    #[arg(long, visible_alias = "b2", value_delimiter = ',', allow_hyphen_values = true)]
    vector2: Option<Vec<i64>>,
    /// Keep sigma and tau as symbols.
    #[arg(long)]
    param_mode: bool,
    /// S2xS2 with rationally independent sigma and tau.
    #[arg(long)]
    incommensurable: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: OutFormat,
    /// Sweep box half-width.
    #[arg(long)]
    range: Option<i64>,
}

fn job_from(command: Command, o: Opts) -> JobSpec {
    JobSpec {
        command,
        file: o.file,
        model: o.model,
        n: o.n,
        k: o.k,
        sigma: o.sigma,
        tau: o.tau,
        a: o.a,
        spectrum: o.spectrum,
        vector: o.vector,
        vector2: o.vector2,
        param_mode: o.param_mode,
        incommensurable: o.incommensurable,
        format: match o.format {
            OutFormat::Text => Format::Text,
            OutFormat::Latex => Format::Latex,
            OutFormat::Json => Format::Json,
        },
        range: o.range,
        truncation: None,
    }
}

fn load_job(path: &PathBuf) -> Result<JobSpec, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text)
        .map_err(|e| format!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut job = match cli.command {
        Cmd::Check(o) => job_from(Command::Check, o),
        Cmd::SClass(o) => job_from(Command::SClass, o),
        Cmd::Compare(o) => job_from(Command::Compare, o),
        Cmd::Classify(o) => job_from(Command::Classify, o),
        Cmd::Decide(o) => job_from(Command::Decide, o),
        Cmd::OrbitSClass(o) => job_from(Command::OrbitSClass, o),
        Cmd::OrbitCompare(o) => job_from(Command::OrbitCompare, o),
        Cmd::Sweep(o) => job_from(Command::Sweep, o),
        Cmd::Job { path } => match load_job(&path) {
            Ok(j) => j,
            Err(e) => {
                eprintln!("error: schema error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    if job.truncation.is_none() {
        match std::env::var("EQUILOC_TRUNCATION") {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(t) => job.truncation = Some(t),
                Err(_) => {
                    eprintln!("error: schema error: EQUILOC_TRUNCATION must be a non-negative integer, got `{v}`");
                    return ExitCode::from(2);
                }
            },
            Err(std::env::VarError::NotPresent) => {}
            Err(e) => {
                eprintln!("error: schema error: EQUILOC_TRUNCATION: {e}");
                return ExitCode::from(2);
            }
        }
    }
    let out = run(&job);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
