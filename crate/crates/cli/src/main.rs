use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = faddeeva_cli::run(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() && code == 0 {
        return ExitCode::from(3);
    }
    ExitCode::from(code as u8)
}
