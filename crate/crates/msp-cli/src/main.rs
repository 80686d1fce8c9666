use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use msp_cli::{load_config, render_table, run_experiments, run_verify, RunOptions, EXIT_ACCEPTANCE};
use sim_harness::VerifyLevel;

#[derive(Parser)]
#[command(name = "msp", version, about = "Ordinal matroid secretary experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every plan in a JSON config and compare against the guarantees.
    Run {
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        width: Option<usize>,
        #[arg(long, env = "MSP_SEED")]
        seed: Option<u64>,
    },
    /// Exhaustive property suites on the shipped fixtures.
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        /// Adds a rule whose witness depends on arrival history.
        #[arg(long, hide = true)]
        inject_mutant: bool,
    },
    /// Print the guarantee table.
    Bounds,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quick,
    Full,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run { config, out, width, seed } => {
            let result = load_config(&config)
                .and_then(|c| run_experiments(&c, &RunOptions { out_dir: out, width, seed }));
            match result {
                Ok(outcome) => {
                    print!("{}", outcome.summary());
                    if outcome.passed() { 0 } else { EXIT_ACCEPTANCE }
                }
                Err(e) => {
                    eprintln!("msp: {e}");
                    e.exit_code()
                }
            }
        }
        Command::Verify { level, inject_mutant } => {
            let level = match level {
                Level::Quick => VerifyLevel::Quick,
                Level::Full => VerifyLevel::Full,
            };
            match run_verify(level, inject_mutant) {
                Ok((report, text)) => {
                    print!("{text}");
                    if report.passed() { 0 } else { EXIT_ACCEPTANCE }
                }
                Err(e) => {
                    eprintln!("msp: {e}");
                    e.exit_code()
                }
            }
        }
        Command::Bounds => {
            print!("{}", render_table());
            0
        }
    };
    ExitCode::from(code as u8)
}
