//! Script language and report rendering for the `regcd` command.

pub mod dsl;
pub mod exec;
pub mod render;
pub mod session;

use exec::{execute, run_verify, Flags, Summary};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_ENGINE: u8 = 3;

/// Output text for stdout, diagnostics for stderr, and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn run_script(src: &str, flags: &Flags) -> Outcome {
    let script = match dsl::parse(src) {
        Ok(s) => s,
        Err(e) => return input_error(e.to_string()),
    };
    let session = match session::Session::build(&script) {
        Ok(s) => s,
        Err(e) => return input_error(e.to_string()),
    };
    let (reports, error) = execute(&session, flags);
    let fails: usize = reports.iter().map(exec::Report::fails).sum();
    let stdout = render::reports(&reports, flags.json);
    match error {
        Some(e) => Outcome {
            stdout,
            stderr: format!("error: {e}\n"),
            code: EXIT_ENGINE,
        },
        None => Outcome {
            stdout,
            stderr: String::new(),
            code: if fails > 0 { EXIT_FAILS } else { EXIT_OK },
        },
    }
}

pub fn run_verify_command(statement: &str, seed: u64, size: usize, flags: &Flags) -> Outcome {
    if statement != "all" && !regcd_core::verify::STATEMENTS.contains(&statement) {
        return input_error(format!("unknown statement id `{statement}`"));
    }
    match run_verify(statement, seed, size, flags) {
        Ok(results) => {
            let s = Summary::of(&results);
            let stdout = if flags.json {
                render::json(&results)
            } else {
                format!("{}{}", render::checks(&results), render::summary(&s))
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: if s.fails > 0 { EXIT_FAILS } else { EXIT_OK },
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: verify {statement}: {e}\n"),
            code: EXIT_ENGINE,
        },
    }
}

fn input_error(msg: String) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
        code: EXIT_INPUT,
    }
}
