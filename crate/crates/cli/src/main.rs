use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod baseconv;
mod board;
mod render;
mod sort;
mod verify;

#[derive(Parser)]
#[command(name = "metamorph", version, about = "Run and check list metamorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a fraction between bases, digit by digit.
    Baseconv(baseconv::Args),
    /// Sort values with heapsort or one of its jigsaw evaluations.
    Sort(sort::Args),
    /// Check a side condition or an equivalence over a finite domain.
    Verify(verify::Args),
    /// Draw the jigsaw board for heapsort.
    TraceBoard(board::Args),
}

/// Why a command did not finish normally.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or unparsable input. Exit code 2.
    Usage(String),
    /// The computation itself went wrong. Exit code 1.
    Runtime(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Baseconv(args) => baseconv::run(&args),
        Command::Sort(args) => sort::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::TraceBoard(args) => board::run(&args),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
