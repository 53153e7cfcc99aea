use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use polygame_cli::{run, Cli};

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which is reserved for mismatches
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text());
            let _ = std::io::stdout().flush();
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
