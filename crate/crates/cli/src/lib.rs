//! Command-line front end: parses input, calls the library and renders
//! the results.

pub mod args;
mod commands;
pub mod render;

use clap::Parser;

use args::{Cli, Format};
use hyperscope::Error;

/// Exit status, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_SOLUTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::Lowering(_)
        | Error::UnknownFamily(_)
        | Error::Invalid(_)
        | Error::NotSimilar(_)
        | Error::VarInPochhammer(_) => EXIT_USAGE,
        Error::Stage { source, .. } => exit_code(source),
        _ => EXIT_NO_SOLUTION,
    }
}

/// Runs the command line `argv`, program name first.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Output { code, stdout, stderr };
        }
    };
    let jobs = cli.global.jobs.max(1);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            return Output {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let batch = pool.install(|| commands::dispatch(&cli));
    let stdout = if batch.items.is_empty() {
        String::new()
    } else {
        match cli.global.format {
            Format::Text => render::to_text(&batch.items),
            Format::Json => render::to_json(&batch.items),
            Format::Latex => render::to_latex(&batch.items),
        }
    };
    let stderr: String = batch.errors.iter().map(|e| format!("error: {e}\n")).collect();
    Output {
        code: batch.code,
        stdout,
        stderr,
    }
}
