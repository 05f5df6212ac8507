//! Command-line front end: parsers, subcommands and report rendering.

pub mod commands;
pub mod parse;
pub mod report;

use std::io::Read;
use std::path::PathBuf;

use clap::Parser;

pub use commands::{Cli, CliError, Outcome};

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command, reading stdin
/// from `stdin` when no file is given.
pub fn run<I, T>(args: I, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Run
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Run {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Run {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    if let Some(jobs) = cli.jobs {
        // fails only if a pool already exists, which keeps its size
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    let mut read = |path: Option<&PathBuf>| -> commands::CliResult<String> {
        match path {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
            _ => stdin().map_err(|e| CliError::Usage(format!("stdin: {e}"))),
        }
    };
    match commands::execute(&cli, &mut read) {
        Ok(out) => Run {
            code: if out.discrepancy { 3 } else { 0 },
            stdout: out.report.render(cli.format),
            stderr: String::new(),
        },
        Err(e) => Run {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Reads all of standard input.
pub fn read_stdin() -> std::io::Result<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}
