//! Command-line front end for `polite-core`.
//!
//! Exit codes: `0` success, `1` usage, domain or I/O error, `2` verification
//! mismatch. [`run`] takes explicit output streams so the whole surface can be
//! driven in-process.

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub mod args;
pub mod commands;
pub mod parse;
pub mod scan;
pub mod table;
pub mod verify;

pub use args::{Cli, Command, Format};

/// Successful run.
pub const EXIT_OK: i32 = 0;
/// Bad arguments, out-of-domain input, or I/O failure.
pub const EXIT_USAGE: i32 = 1;
/// `verify` found a disagreement.
pub const EXIT_MISMATCH: i32 = 2;

/// Environment variable overriding the brute-force oracle bound.
pub const ORACLE_LIMIT_VAR: &str = "POLITE_ORACLE_LIMIT";

/// Process-level settings that do not come from argv.
#[derive(Debug, Clone, Copy)]
pub struct Env {
    /// Whether stdout is a terminal; picks the default `scan` format.
    pub stdout_is_terminal: bool,
    /// Largest `n` handed to the brute-force oracle.
    pub oracle_limit: u64,
}

impl Env {
    /// Reads [`ORACLE_LIMIT_VAR`] and the terminal state of stdout.
    pub fn from_process() -> Result<Self, String> {
        use std::io::IsTerminal;
        let oracle_limit = match std::env::var(ORACLE_LIMIT_VAR) {
            Ok(v) => parse::decimal(&v).map_err(|e| format!("{ORACLE_LIMIT_VAR}: {e}"))?,
            Err(_) => polite_core::DEFAULT_ORACLE_LIMIT,
        };
        Ok(Env { stdout_is_terminal: std::io::stdout().is_terminal(), oracle_limit })
    }
}

impl Default for Env {
    fn default() -> Self {
        Env { stdout_is_terminal: false, oracle_limit: polite_core::DEFAULT_ORACLE_LIMIT }
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(argv: I, env: Env, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match commands::dispatch(cli.command, env, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}
