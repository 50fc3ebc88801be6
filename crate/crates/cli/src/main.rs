use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use cli::{run, Cli, CliError, Command};

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn svg_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Cotor { chart, .. } | Command::Cone { chart, .. } | Command::May { chart, .. } => chart.svg.as_ref(),
        _ => None,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command).and_then(|a| {
        for n in &a.notes {
            eprintln!("note: {n}");
        }
        if let (Some(path), Some(svg)) = (svg_path(&cli.command), &a.svg) {
            write(path, svg)?;
        }
        match &cli.output {
            Some(path) => write(path, &a.text),
            None => {
                print!("{}", a.text);
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
