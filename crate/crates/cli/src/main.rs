use std::io;
use std::process::ExitCode;

use clap::Parser;

use capbound_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match capbound_cli::run(&cli, &mut io::stdout().lock(), &mut io::stderr().lock()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
