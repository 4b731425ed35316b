use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use aflt_core::error::{Error, Result};
use aflt_core::report::{
    emit_frey, emit_split2, emit_survey, emit_verdict, frey_report, parse_triple, run_pipeline, run_survey,
    split2_report, FieldConfig, Format,
};

/// Asymptotic Fermat criterion toolkit for quadratic and 2-power cyclotomic fields.
#[derive(Parser)]
#[command(name = "aflt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve or search the S-unit equation and evaluate the criterion.
    Check {
        /// Field configuration file.
        #[arg(long)]
        field: PathBuf,
        /// Solution list, one lambda per line; overrides the config's list.
        #[arg(long)]
        solutions: Option<PathBuf>,
        /// Treat the solution list as the complete solution set.
        #[arg(long)]
        complete: bool,
        /// Exponent box for the bounded search.
        #[arg(long)]
        search_box: Option<u32>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Survey Q(sqrt(-d)) for squarefree d in [min, max].
    Survey {
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Frey curve invariants and local data above 2 for a triple.
    Frey {
        #[arg(long)]
        field: PathBuf,
        /// Three elements `a,b,c`, each as coordinates `c0;c1;...`.
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Decomposition of 2 in the field.
    Split2 {
        #[arg(long)]
        field: PathBuf,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn run(command: Command) -> Result<String> {
    match command {
        Command::Check {
            field,
            solutions,
            complete,
            search_box,
            format,
        } => {
            let format: Format = format.parse()?;
            let mut config = FieldConfig::load(&field)?;
            if let Some(path) = solutions {
                config.solutions = Some(path);
                config.solutions_complete = complete;
            } else if complete {
                config.solutions_complete = true;
            }
            if let Some(b) = search_box {
                if b == 0 {
                    return Err(Error::Range("--search-box must be at least 1".into()));
                }
                config.search_box = Some(b);
            }
            let out = run_pipeline(&config)?;
            Ok(emit_verdict(&out, format))
        }
        Command::Survey { min, max, format } => {
            let format: Format = format.parse()?;
            Ok(emit_survey(&run_survey(min, max)?, format))
        }
        Command::Frey {
            field,
            triple,
            p,
            format,
        } => {
            let format: Format = format.parse()?;
            let k = FieldConfig::load(&field)?.field()?;
            let triple = parse_triple(&k, &triple)?;
            Ok(emit_frey(&frey_report(&k, &triple, p)?, format))
        }
        Command::Split2 { field, format } => {
            let format: Format = format.parse()?;
            let k = FieldConfig::load(&field)?.field()?;
            Ok(emit_split2(&split2_report(&k), format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("aflt: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
