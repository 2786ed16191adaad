use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    venus_cli::run(venus_cli::Cli::parse())
}
