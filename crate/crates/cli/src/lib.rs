//! Library side of the `faddeeva` command: argument definitions, the
//! commands themselves (writing to any `Write`), and the self-test suites.

pub mod args;
pub mod commands;
mod error;
mod function;
pub mod output;
mod params;
pub mod reference;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::{Cli, Command, FunctionKind};
pub use error::CliError;

/// Parses `argv` and runs the command. Returns the process exit code:
/// 0 success, 1 usage, 2 computation or validation failure, 3 I/O.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // --help and --version arrive here too, on stdout
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 1;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match commands::dispatch(&cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
