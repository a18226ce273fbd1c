use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tame_fitting::job::{self, JobCase, JobOutcome, JobSpec, EXIT_INPUT_ERROR};
use tame_fitting::report::{self, Format, RenderOptions};
use tame_fitting::Int;

#[derive(Parser)]
#[command(
    name = "tame-fitting",
    version,
    about = "Compare the Fitting ideal of the tame kernel with the generalized Stickelberger ideal"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify E = Q(√D) over Q with S = ramified primes plus any extras
    Verify {
        #[arg(long = "disc")]
        disc: Int,
        #[arg(long = "extra-primes", value_delimiter = ',')]
        extra_primes: Vec<Int>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include wall-clock timings (output is then not reproducible)
        #[arg(long)]
        timings: bool,
    },
    /// Run every case of a job file and write the reports to a file
    Batch {
        #[arg(long)]
        jobs: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        timings: bool,
    },
    /// CSV table over all fundamental discriminants up to N
    Table {
        #[arg(long)]
        dmax: Int,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify manual records of externally supplied invariants
    Manual {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        timings: bool,
    },
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT_ERROR as u8)
}

fn report_errors(outcome: &JobOutcome) {
    for (case, err) in &outcome.errors {
        eprintln!("{case}: {err}");
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(
    outcome: JobOutcome,
    format: Format,
    opts: RenderOptions,
    out: Option<&PathBuf>,
) -> ExitCode {
    report_errors(&outcome);
    let rendered = match report::render(&outcome.reports, format, opts) {
        Ok(text) => text,
        Err(e) => return input_error(e),
    };
    if let Err(e) = emit(&rendered, out) {
        return input_error(e);
    }
    ExitCode::from(outcome.exit_code as u8)
}

fn read_job(path: &PathBuf) -> Result<JobSpec, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    job::parse_job(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            disc,
            extra_primes,
            format,
            timings,
        } => {
            let spec = JobSpec {
                cases: vec![JobCase::Auto { disc, extra_primes }],
            };
            finish(job::run_job(&spec), format, RenderOptions { timings }, None)
        }
        Command::Batch {
            jobs,
            out,
            format,
            timings,
        } => match read_job(&jobs) {
            Ok(spec) => finish(
                job::run_job(&spec),
                format,
                RenderOptions { timings },
                Some(&out),
            ),
            Err(e) => input_error(e),
        },
        Command::Table { dmax, out } => {
            let outcome = job::run_job(&job::discriminant_range(dmax));
            report_errors(&outcome);
            match report::table_csv(&outcome.reports) {
                Ok(text) => match emit(&text, out.as_ref()) {
                    Ok(()) => ExitCode::from(outcome.exit_code as u8),
                    Err(e) => input_error(e),
                },
                Err(e) => input_error(e),
            }
        }
        Command::Manual {
            input,
            format,
            timings,
        } => match read_job(&input) {
            Ok(spec) if spec.cases.iter().any(|c| !matches!(c, JobCase::Manual(_))) => input_error(
                format!("{}: only manual records are accepted", input.display()),
            ),
            Ok(spec) => finish(job::run_job(&spec), format, RenderOptions { timings }, None),
            Err(e) => input_error(e),
        },
    }
}
