pub mod bench;
pub mod eval;
pub mod hitran;
pub mod kernel;
pub mod map;
pub mod selftest;

use std::io::Write;

use crate::args::Command;
use crate::error::CliError;

pub fn dispatch(cmd: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Eval(a) => eval::run(a, stdout, stderr),
        Command::Map(a) => map::run(a, stdout, stderr),
        Command::Hitran(a) => hitran::run(a, stdout, stderr),
        Command::Bench(a) => bench::run(a, stdout, stderr),
        Command::Kernel(a) => kernel::run(a, stdout, stderr),
        Command::Selftest(a) => selftest::run(a, stdout, stderr),
    }
}
