mod args;
mod cache;
mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use cache::Cache;

const USAGE: u8 = 64;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(USAGE),
            };
        }
    };
    let dir = std::env::var_os("CERESA_CACHE_DIR")
        .map(PathBuf::from)
        .or(cli.cache_dir.clone())
        .filter(|_| !cli.no_cache);
    let cache = dir.and_then(|d| match Cache::open(&d) {
        Ok(c) => Some(c),
        Err(e) => {
            eprintln!("warning: cache disabled, cannot use {}: {e}", d.display());
            None
        }
    });
    let mut out = std::io::stdout().lock();
    // Write errors (a closed pipe) are ignored; the exit code still reports the result.
    match commands::run(&cli.command, cache.as_ref()) {
        Ok(value) => {
            let _ = if cli.table {
                write!(out, "{}", render::table(&value))
            } else {
                writeln!(out, "{}", render::json(&value))
            };
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            if !cli.table {
                let v = serde_json::json!({ "error": f.message, "exit_code": f.code });
                let _ = writeln!(out, "{}", render::json(&v));
            }
            ExitCode::from(f.code as u8)
        }
    }
}
