use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use moufang_cli::{run, Cli};

fn main() -> ExitCode {
    let out = run(Cli::parse());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
