use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cyclotri_cli::commands::{self, CommandError};

/// Exact computations with triangulations of polygons and infinity-gons.
#[derive(Parser)]
#[command(name = "cyclotri", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide noncrossing, connected, maximal, triangulation and locally finite.
    Check { file: PathBuf },
    /// Exchange an arc of a maximal set.
    Flip {
        file: PathBuf,
        /// Two points, e.g. "0 2" or "(0, 1) (1, -2)".
        arc: String,
    },
    /// Flip greedily until the arc belongs to the set.
    Reach { file: PathBuf, arc: String },
    /// The cluster variable of an arc, starting from the set as initial seed.
    Var { file: PathBuf, arc: String },
    /// Count the triangulations of the n-gon.
    Enumerate {
        n: u32,
        /// Print the exchange graph in DOT instead.
        #[arg(long)]
        graph: bool,
    },
    /// Draw the set as an SVG chord diagram.
    Draw {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        window: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the classical examples and their property table.
    Examples {
        /// Print only the table.
        #[arg(long)]
        table: bool,
    },
    /// Cut every thread to [-window, window] and print the polygon.
    Truncate { file: PathBuf, window: i64 },
}

fn read(path: &PathBuf) -> Result<String, CommandError> {
    std::fs::read_to_string(path).map_err(|e| CommandError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn run(command: Command) -> Result<(String, Option<PathBuf>), CommandError> {
    let text = match command {
        Command::Check { file } => commands::check(&read(&file)?)?,
        Command::Flip { file, arc } => commands::flip(&read(&file)?, &arc)?,
        Command::Reach { file, arc } => commands::reach(&read(&file)?, &arc)?,
        Command::Var { file, arc } => commands::var(&read(&file)?, &arc)?,
        Command::Enumerate { n, graph } => commands::enumerate(n, graph)?,
        Command::Draw { file, window, out } => return Ok((commands::draw(&read(&file)?, window)?, out)),
        Command::Examples { table } => commands::examples(table)?,
        Command::Truncate { file, window } => commands::truncate(&read(&file)?, window)?,
    };
    Ok((text, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, None)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok((text, Some(path))) => match std::fs::write(&path, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
