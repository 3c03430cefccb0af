use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use codon_gas_cli::args::Cli;
use codon_gas_cli::{run, EXIT_IO};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(failure) => {
            eprintln!("error: {failure}");
            return ExitCode::from(failure.exit_code as u8);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, rendered.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(rendered.as_bytes()).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_IO as u8)
        }
    }
}
