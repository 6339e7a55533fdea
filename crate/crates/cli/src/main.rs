use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use exceptia_cli::{configure_threads, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(&cli));
    match result {
        Ok(report) => {
            // a closed downstream pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{}", report.render(cli.json));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.exit_code() == 2 {
                eprintln!("run `exceptia --help` for the command grammar");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
