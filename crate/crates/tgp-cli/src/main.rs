use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tgp_cli::commands::{cmd_compare, cmd_front, cmd_run, FileFormat, RunSpec};
use tgp_cli::CliError;

/// Traceless genetic programming benchmark harness.
#[derive(Parser)]
#[command(name = "tgp", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a batch of seeded runs and export fronts, metric series and
    /// a summary.
    Run {
        /// Problem name (zdt1|zdt2|zdt3|zdt4|zdt6); required for the MOO
        /// variants, ignored by classic.
        #[arg(long)]
        problem: Option<String>,
        /// Algorithm variant: plain, archive or classic.
        #[arg(long, default_value = "plain")]
        variant: String,
        /// Number of independent runs (run i uses seed + i).
        #[arg(long)]
        runs: Option<usize>,
        #[arg(long)]
        pop_size: Option<usize>,
        #[arg(long)]
        generations: Option<usize>,
        #[arg(long)]
        p_insert: Option<f64>,
        #[arg(long)]
        tournament_size: Option<usize>,
        /// Archive capacity (archive variant; defaults to 300).
        #[arg(long)]
        archive_capacity: Option<usize>,
        /// Generations between metric samples.
        #[arg(long)]
        metric_stride: Option<usize>,
        /// Base seed for the batch.
        #[arg(long)]
        seed: Option<u64>,
        /// Output directory for run files and summary.json.
        #[arg(long, default_value = "tgp_out")]
        out: PathBuf,
        /// Output format for fronts and metric series: csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Export the 200-point reference front of a problem.
    Front {
        #[arg(long)]
        problem: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Tabulate summaries against the SPEA/PAES reference values.
    Compare {
        /// summary.json files produced by `run`.
        summaries: Vec<PathBuf>,
        /// Baseline CSV (method,problem,cm,dm); defaults to the embedded
        /// transcription.
        #[arg(long)]
        baseline: Option<PathBuf>,
        /// Also write the table as CSV to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run {
            problem,
            variant,
            runs,
            pop_size,
            generations,
            p_insert,
            tournament_size,
            archive_capacity,
            metric_stride,
            seed,
            out,
            format,
        } => {
            let spec = RunSpec {
                problem,
                variant,
                runs,
                pop_size,
                generations,
                p_insert,
                tournament_size,
                archive_capacity,
                metric_stride,
                seed,
                out_dir: out,
                format: FileFormat::from_name(&format)?,
            };
            cmd_run(&spec).map(|_| ())
        }
        Command::Front {
            problem,
            out,
            format,
        } => cmd_front(&problem, &out, FileFormat::from_name(&format)?).map(|_| ()),
        Command::Compare {
            summaries,
            baseline,
            out,
        } => {
            let table = cmd_compare(&summaries, baseline.as_deref(), out.as_deref())?;
            print!("{table}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
