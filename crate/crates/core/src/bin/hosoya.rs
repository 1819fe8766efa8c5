use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use hosoya::cli::{run, CommandRequest};

fn main() -> ExitCode {
    let request = CommandRequest::parse();
    let outcome = run(&request, &mut io::stdin().lock());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = io::stdout().flush();
    ExitCode::from(outcome.status as u8)
}
