use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spfiber::cli::{self, Command, Format, RunConfig, Suite};
use spfiber::tensor_rep::DEFAULT_MAX_CELLS;

/// Top homology dimensions of type C partial Springer fibers.
#[derive(Parser)]
#[command(name = "spfiber", version)]
struct Args {
    /// `N = 2n + 1`.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    #[arg(long, global = true, default_value_t = 2)]
    d: usize,
    /// A type C partition of `2d`, e.g. `2,1,1`.
    #[arg(long, global = true)]
    orbit: Option<String>,
    /// A symmetric composition, e.g. `0,0,4,0,0`.
    #[arg(long, global = true)]
    component: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Ceiling on `N^d`.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CELLS)]
    max_cells: usize,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Springer correspondence table.
    Springer,
    /// H_top report for one orbit or all of them.
    Htop,
    /// Run the invariant suites.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// List theta matrices.
    Theta,
}

fn main() -> ExitCode {
    env_logger::init();
    let args = Args::parse();
    let command = match args.command {
        Sub::Springer => Command::Springer,
        Sub::Htop => Command::Htop,
        Sub::Verify { suite } => Command::Verify(suite),
        Sub::Theta => Command::Theta,
    };
    let config = RunConfig {
        n: args.n,
        d: args.d,
        command,
        orbit: args.orbit,
        component: args.component,
        format: args.format,
        max_cells: args.max_cells,
    };
    let (out, err, code) = cli::run(&config);
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    ExitCode::from(code)
}
