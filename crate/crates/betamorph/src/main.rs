use std::fs;
use std::process::ExitCode;

use betamorph::args::Cli;
use betamorph::document::{combined_exit_code, render};
use betamorph::{commands, read_beta_list, run_batch};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = &cli.options;
    let (docs, batch) = match (&opts.beta, &opts.beta_list) {
        (Some(spec), None) => (vec![commands::run(&cli.command, spec, opts)], false),
        (None, Some(path)) => match fs::read_to_string(path) {
            Ok(text) => (run_batch(&cli.command, &read_beta_list(&text), opts), true),
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        _ => {
            eprintln!("error: pass exactly one of --beta and --beta-list");
            return ExitCode::from(2);
        }
    };
    let output = render(&docs, opts.format, batch);
    match &opts.out {
        Some(path) => {
            if let Err(e) = fs::write(path, output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{output}"),
    }
    for d in &docs {
        if let Some(e) = &d.error {
            eprintln!("error ({}): {e}", d.beta_spec);
        }
    }
    ExitCode::from(combined_exit_code(&docs) as u8)
}
