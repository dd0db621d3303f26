use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = acampo::cli::Cli::parse();
    let code = acampo::cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code)
}
