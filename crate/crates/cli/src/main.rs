use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use regcd_cli::exec::Flags;
use regcd_cli::{run_script, run_verify_command, Outcome, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "regcd", version, about = "Regularity and local cohomology of graded modules")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Lowest degree scanned by the local duality route.
    #[arg(long, global = true, allow_hyphen_values = true)]
    floor: Option<i64>,
    /// Largest Frobenius power tried by F-depth probes.
    #[arg(long, global = true)]
    smax: Option<u32>,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true, env = "REGCD_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script file, or standard input with `-`.
    Run { script: String },
    /// Check statements on the generated corpus.
    Verify {
        /// A statement id or `all`.
        statement: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        size: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .expect("thread pool is configured once");
    }
    let flags = Flags {
        json: cli.json,
        floor: cli.floor,
        smax: cli.smax,
    };
    let out = match &cli.command {
        Cmd::Run { script } => {
            let mut src = String::new();
            let read = if script == "-" {
                std::io::stdin().read_to_string(&mut src).map(|_| ())
            } else {
                std::fs::read_to_string(script).map(|s| src = s)
            };
            match read {
                Ok(()) => run_script(&src, &flags),
                Err(e) => Outcome {
                    stdout: String::new(),
                    stderr: format!("error: cannot read {script}: {e}\n"),
                    code: EXIT_INPUT,
                },
            }
        }
        Cmd::Verify { statement, seed, size } => run_verify_command(statement, *seed, *size, &flags),
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}
