use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use szeged_cut::cli::{needs_stdin, run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let mut stdin = String::new();
    if needs_stdin(&config) {
        if let Err(err) = std::io::stdin().read_to_string(&mut stdin) {
            eprintln!("error: standard input: {err}");
            return ExitCode::from(6);
        }
    }
    match run(&config, &stdin) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.code as u8)
        }
    }
}
