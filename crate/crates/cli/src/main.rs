//! `supertrop`: compute with supertropical matrices, replay the worked
//! examples, and run the randomized theorem checks.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain error (for
//! example a strictly singular input to `nabla`), 3 a theorem check failed.

mod demo;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use supertrop::lawcheck::{self, CheckId, CheckReport, Constraint, GenConfig};
use supertrop::spectral::{char_poly, eigenvalues};
use supertrop::tropmat::Side;
use supertrop::{Error, Matrix, Polynomial};

#[derive(Parser)]
#[command(name = "supertrop", version, about = "Supertropical linear algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a quantity of the matrix (or, for `roots`, polynomial) in FILE.
    Compute {
        what: What,
        file: PathBuf,
        /// Side of the conductor for `definite-form`.
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Recompute a worked example and compare with stored values.
    Demo { id: String },
    /// Run theorem checks on random instances.
    Check {
        /// `all` or a single check id.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Search for counterexamples to the reversed-coefficient conjecture.
    Explore {
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Det,
    Adj,
    Nabla,
    Star,
    Charpoly,
    Eigen,
    DefiniteForm,
    Roots,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 500)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Numerator range `LO,HI` (inclusive).
    #[arg(long, default_value = "-10,10", allow_hyphen_values = true)]
    range: String,
    #[arg(long, default_value_t = 1)]
    denominator: i64,
    #[arg(long, default_value_t = 0.2)]
    neginf_prob: f64,
    #[arg(long, default_value_t = 0.1)]
    ghost_prob: f64,
    /// Restrict the primary input, e.g. `triangular`.
    #[arg(long, default_value = "none")]
    constraint: String,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock time in the report (makes it non-reproducible).
    #[arg(long)]
    timing: bool,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) | Error::InvalidConfig(_) => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Checks) => ExitCode::from(3),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Compute { what, file, side } => compute(what, &file, side),
        Command::Demo { id } => match demo::run(&id)? {
            Some(true) => Ok(()),
            Some(false) => Err(Failure::Checks),
            None => Err(Failure::Usage(format!(
                "unknown example {id:?}; known: {}",
                demo::IDS.join(", ")
            ))),
        },
        Command::Check { suite, run } => {
            let checks = if suite == "all" {
                CheckId::ALL.to_vec()
            } else {
                vec![suite.parse::<CheckId>()?]
            };
            run_reports(&checks, &run, suite == "all")
        }
        Command::Explore { run } => {
            if run.n < 2 {
                return Err(Failure::Usage("explore needs --n >= 2".into()));
            }
            run_reports(&[CheckId::Conjecture62], &run, false)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn compute(what: What, file: &Path, side: SideArg) -> Result<(), Failure> {
    let text = read(file)?;
    if let What::Roots = what {
        let p: Polynomial = text.trim().parse()?;
        println!("{}", p.roots()?);
        return Ok(());
    }
    let a = Matrix::from_json(&text)?;
    match what {
        What::Det => println!("{}", a.determinant()?),
        What::Adj => println!("{}", a.adjugate()?.to_json()),
        What::Nabla => println!("{}", a.nabla()?.to_json()),
        What::Star => println!("{}", a.kleene_star()?.to_json()),
        What::Charpoly => println!("{}", char_poly(&a)?),
        What::Eigen => println!("{}", eigenvalues(&a)?),
        What::DefiniteForm => {
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let (p, d) = a.definite_form(side)?;
            println!("{{\"conductor\":{},\"definite\":{}}}", p.to_json(), d.to_json());
        }
        What::Roots => unreachable!(),
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("--range expects LO,HI, got {s:?}"));
    let (lo, hi) = s.split_once(',').or_else(|| s.split_once("..")).ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

fn run_reports(checks: &[CheckId], args: &RunArgs, as_array: bool) -> Result<(), Failure> {
    let cfg = GenConfig {
        n: args.n,
        numerator_range: parse_range(&args.range)?,
        denominator: args.denominator,
        neginf_prob: args.neginf_prob,
        ghost_prob: args.ghost_prob,
        constraint: args.constraint.parse::<Constraint>()?,
        seed: args.seed,
    };
    let mut reports: Vec<CheckReport> = Vec::new();
    for &check in checks {
        // In a full suite, a constraint only narrows the checks it fits.
        let cfg = match check.effective_constraint(cfg.constraint) {
            Err(_) if as_array => GenConfig { constraint: Constraint::None, ..cfg.clone() },
            _ => cfg.clone(),
        };
        let start = Instant::now();
        let mut report = lawcheck::run_check(check, &cfg, args.trials)?;
        if args.timing {
            report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        }
        reports.push(report);
    }

    let json = if as_array {
        serde_json::to_string_pretty(&reports).expect("reports serialize")
    } else {
        reports[0].to_json()
    };
    let summary: Vec<String> = reports.iter().map(summarize).collect();
    match &args.out {
        Some(path) => {
            fs::write(path, json + "\n")
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            summary.iter().for_each(|s| println!("{s}"));
        }
        None => {
            println!("{json}");
            summary.iter().for_each(|s| eprintln!("{s}"));
        }
    }
    if reports.iter().all(CheckReport::all_passed) {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn summarize(r: &CheckReport) -> String {
    let mut s = format!("{}: n={} {}/{} passed", r.check_id, r.config.n, r.passes, r.trials);
    if r.check_id == CheckId::Conjecture62 {
        s += &format!(", counterexamples: {}", r.findings.len());
    } else if !r.findings.is_empty() {
        s += &format!(", findings: {}", r.findings.len());
    }
    s
}
