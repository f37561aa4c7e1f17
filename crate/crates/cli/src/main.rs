//! `orthocevia`: triangle centers, relation checks, verification suites and
//! SVG sketches from the command line.
//!
//! Exit codes: 0 success or relation holds, 1 relation or suite fails,
//! 2 usage or parse error, 3 degenerate triangle, 4 precondition failure.

mod check;
mod figure;
mod scene;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use orthocevia::verify::{run_suite, SuiteConfig};
use orthocevia::VerifyError;

use check::{Relation, With};
use figure::FigureId;
use scene::{CliError, CliResult};

#[derive(Parser)]
#[command(name = "orthocevia", version, about = "Triangle geometry: centers, relations, verification suites, figures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SceneArgs {
    /// Triangle as "ax,ay bx,by cx,cy".
    #[arg(long, allow_hyphen_values = true)]
    triangle: Option<String>,
    /// JSON scene: {"triangle": [[x,y],[x,y],[x,y]], "points": {"P1": [x,y]}}.
    #[arg(long)]
    scene: Option<PathBuf>,
    /// Named point, as NAME=x,y or NAME=<scene point or center name>. Repeatable.
    #[arg(long = "point", value_name = "NAME=SPEC", allow_hyphen_values = true)]
    points: Vec<String>,
    /// Relative tolerance; overrides ORTHOCEVIA_EPS.
    #[arg(long)]
    eps: Option<f64>,
}

impl SceneArgs {
    fn load(&self, fallback: Option<[orthocevia::Point; 3]>) -> CliResult<scene::Scene> {
        let mut s = scene::load(self.triangle.as_deref(), self.scene.as_deref(), fallback, self.eps)?;
        s.bind(&self.points)?;
        Ok(s)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print all triangle centers, side lengths and semiperimeter as JSON.
    Centers {
        #[command(flatten)]
        scene: SceneArgs,
    },
    /// Check a relation and print its result; exit 0 if it holds, 1 if not.
    Check {
        relation: Relation,
        /// Second triangle for homology/orthology-type relations.
        #[arg(long)]
        with: Option<With>,
        #[command(flatten)]
        scene: SceneArgs,
    },
    /// Run a randomized verification suite; exit 0 iff it passes.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Relative tolerance; overrides ORTHOCEVIA_EPS.
        #[arg(long)]
        eps: Option<f64>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write an SVG sketch of one of the classical configurations.
    Figure {
        id: FigureId,
        #[arg(long)]
        out: PathBuf,
        /// Width in pixels.
        #[arg(long, default_value_t = 800)]
        size: u32,
        #[command(flatten)]
        scene: SceneArgs,
    },
}

fn print_json(value: &serde_json::Value) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    orthocevia::json::to_writer_pretty(&mut out, value)
        .and_then(|_| writeln!(out).map_err(serde_json::Error::io))
        .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}

fn write_file(path: &PathBuf, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Centers { scene } => {
            let s = scene.load(None)?;
            print_json(&check::centers(&s))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { relation, with, scene } => {
            let s = scene.load(None)?;
            let (holds, doc) = check::check(&s, relation, with)?;
            print_json(&doc)?;
            Ok(if holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify {
            suite,
            trials,
            seed,
            eps,
            json,
        } => {
            let config = SuiteConfig {
                tolerance: scene::tolerance(eps)?,
                ..SuiteConfig::default().with_trials(trials).with_seed(seed)
            };
            let report = run_suite(&suite, &config).map_err(|e| match e {
                VerifyError::SamplingExhausted(_) => CliError::Precondition(e.to_string()),
                _ => CliError::Usage(e.to_string()),
            })?;
            let text = orthocevia::json::to_string_pretty(&report);
            match &json {
                Some(path) => write_file(path, &(text + "\n"))?,
                None => println!("{text}"),
            }
            eprintln!(
                "{}: {} trials, {} failures, {} skipped: {}",
                report.suite,
                report.trials,
                report.failures.len(),
                report.skipped,
                if report.passed { "PASS" } else { "FAIL" }
            );
            Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Figure { id, out, size, scene } => {
            let s = scene.load(Some(id.default_triangle()))?;
            write_file(&out, &figure::render(&s, id, size)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code())
        }
    }
}
