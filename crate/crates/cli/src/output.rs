//! Output sinks and number formatting shared by the commands.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::CliError;

/// 17 significant digits, `nan` for NaN.
pub fn num(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.16e}")
    }
}

/// Writes `text` to `path` through a temporary file, so a failed run never
/// leaves a partial file behind.
pub fn write_atomic(path: &Path, text: &str) -> Result<(), CliError> {
    let mut tmp = PathBuf::from(path);
    let mut name = tmp.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".tmp");
    tmp.set_file_name(name);
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io(e)
    })
}

/// Sends `text` to `out` if a path is given, else to `stdout`.
pub fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(p) => write_atomic(p, text),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}
