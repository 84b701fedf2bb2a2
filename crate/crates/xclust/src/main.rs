use std::process::ExitCode;

use clap::Parser;
use xclust::cli::{run, summary, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli, args) {
        Ok(report) => {
            println!("{}", report.to_json());
            eprintln!("{}", summary(&report));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
