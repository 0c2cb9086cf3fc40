use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quasiflow::commands::{self, GroupOptions};
use quasiflow::CliResult;
use quasiflow_core::group::DEFAULT_ELEMENT_CAP;

#[derive(Parser)]
#[command(
    name = "quasiflow",
    version,
    about = "Generalized symmetries of linear torus flows"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a flow file.
    Check { flow: PathBuf },
    /// List multipliers with power-basis coefficients bounded by the height.
    Search {
        flow: PathBuf,
        #[arg(long, default_value_t = 1)]
        height: u64,
        /// Write the MULT lines to this results file as well.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that `x -> Bx + c` is a generalized symmetry.
    Verify {
        flow: PathBuf,
        /// Rows separated by `;`, entries by `,`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        /// Power-basis coordinates per component, components separated by `|`.
        #[arg(long, allow_hyphen_values = true)]
        translation: Option<String>,
    },
    /// Build and certify a torsion model of the symmetry group.
    Group {
        flow: PathBuf,
        /// Generating multipliers as `|`-separated coordinate vectors; default `-1`.
        #[arg(long, allow_hyphen_values = true)]
        gens: Option<String>,
        #[arg(long, default_value_t = 1)]
        q: u64,
        #[arg(long, default_value_t = 2)]
        words: usize,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
    },
    /// Largest gap (n = 2) or covering radius (n >= 3) of the return set.
    Density {
        flow: PathBuf,
        #[arg(long = "max-m", default_value_t = 1000)]
        max_m: u64,
        #[arg(long, default_value_t = 20)]
        grid: u64,
    },
}

fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Check { flow } => commands::check(&flow, out, err),
        Command::Search {
            flow,
            height,
            out: path,
        } => commands::search(&flow, height, path.as_deref(), out, err),
        Command::Verify {
            flow,
            matrix,
            translation,
        } => commands::verify(&flow, &matrix, translation.as_deref(), out, err),
        Command::Group {
            flow,
            gens,
            q,
            words,
            cap,
        } => {
            let opts = GroupOptions {
                gens: gens.as_deref(),
                q,
                words,
                cap,
            };
            commands::group(&flow, &opts, out, err)
        }
        Command::Density { flow, max_m, grid } => commands::density(&flow, max_m, grid, out, err),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // exit 2 belongs to invalid flows, so usage errors map to 1
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = match run(cli, &mut out, &mut err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
