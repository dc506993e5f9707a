use std::process::ExitCode;

use clap::Parser;

use gruss_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let doc = match run(&cli.command) {
        Ok(doc) => doc,
        Err(err) => {
            eprintln!("gruss: {err}");
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let json = doc.to_json();
    match cli.command.out() {
        Some(path) => {
            if let Err(err) = std::fs::write(path, json) {
                eprintln!("gruss: {}: {err}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{json}"),
    }
    ExitCode::from(doc.exit_code as u8)
}
