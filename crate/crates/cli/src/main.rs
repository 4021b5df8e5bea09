mod commands;
mod record;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ibt_core::SeqKind;

use commands::{GenPath, Suite};
use record::{render, Format};

#[derive(Parser, Debug)]
#[command(name = "ibt", version, about = "Iterated binomial transforms of the Padovan and Perrin matrix sequences")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit terms 0..n-1 of a transformed sequence, or the single term given by --at.
    Gen {
        #[arg(long)]
        kind: SeqKind,
        #[arg(short = 'r', default_value_t = 0)]
        r: u32,
        #[arg(short = 'n', default_value_t = 1)]
        count: usize,
        #[arg(long, value_enum, default_value_t = GenPath::Auto)]
        path: GenPath,
        /// Emit only term `at` (power path under `auto`).
        #[arg(long, conflicts_with = "count")]
        at: Option<u64>,
    },
    /// Check identities on a parameter grid.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        r_max: u32,
        #[arg(long, default_value_t = 64)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
    /// Time and count operations on each evaluation path.
    Bench {
        #[arg(long, default_value = "padovan-matrix")]
        kind: SeqKind,
        #[arg(short = 'r', default_value_t = 3)]
        r: u32,
        #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
        n_list: Vec<u64>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        repeats: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "oracle,recurrence,power")]
        paths: Vec<BenchPath>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BenchPath {
    Oracle,
    Recurrence,
    Power,
}

impl From<BenchPath> for ibt_core::transform::Path {
    fn from(p: BenchPath) -> Self {
        match p {
            BenchPath::Oracle => Self::Oracle,
            BenchPath::Recurrence => Self::Recurrence,
            BenchPath::Power => Self::Power,
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, commands::Failure> {
    let outcome = match cli.command {
        Command::Gen { kind, r, count, path, at } => commands::gen(kind, r, count, path, at)?,
        Command::Verify { suite, r_max, n_max, m_max } => commands::verify(suite, r_max, n_max, m_max)?,
        Command::Bench { kind, r, n_list, repeats, paths } => {
            let paths: Vec<_> = paths.into_iter().map(Into::into).collect();
            commands::bench(kind, r, &n_list, repeats as usize, &paths)?
        }
    };
    let text = render(&outcome.record, cli.format).map_err(commands::Failure::Other)?;
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| commands::Failure::Other(e.into()))?,
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| commands::Failure::Other(e.into()))?,
    }
    Ok(if outcome.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Other(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
