use std::process::ExitCode;

use auglab::cli::{dispatch, Cli};
use clap::Parser;

fn main() -> ExitCode {
    ExitCode::from(dispatch(&Cli::parse()))
}
