//! `laminar` — command-line front end for lattice, circle-family, and
//! island-system analysis.
//!
//! Exit codes: 0 = success (all verified properties held), 1 = a verified
//! property failed (a witness is printed), 2 = usage or input error.

mod cmd_circles;
mod cmd_gen;
mod cmd_islands;
mod cmd_lat;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "laminar",
    version,
    about = "Lattices, CD-independent subsets, circle-closure lattices, and island systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a lattice file
    #[command(subcommand)]
    Lat(cmd_lat::LatCmd),
    /// Analyze a circle-family file
    #[command(subcommand)]
    Circles(cmd_circles::CirclesCmd),
    /// Count, maximize, and verify islands on height grids
    #[command(subcommand)]
    Islands(cmd_islands::IslandsCmd),
    /// Generate inputs: posets, circle families, the named catalog
    #[command(subcommand)]
    Gen(cmd_gen::GenCmd),
}

/// Commands produce either a clean exit code (0 or 1) or an input/usage
/// error message, which `main` prints before exiting with 2.
type CmdResult = Result<u8, String>;

fn main() -> ExitCode {
    // Die quietly when the reading end of a pipe goes away (`... | head`)
    // instead of panicking on the broken-pipe write error.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Lat(cmd) => cmd_lat::run(cmd),
        Command::Circles(cmd) => cmd_circles::run(cmd),
        Command::Islands(cmd) => cmd_islands::run(cmd),
        Command::Gen(cmd) => cmd_gen::run(cmd),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Prints one serialized report object on its own line.
fn json_line<T: serde::Serialize>(value: &T) -> Result<(), String> {
    let line = serde_json::to_string(value).map_err(|e| e.to_string())?;
    println!("{line}");
    Ok(())
}
