use clap::Parser;
use divbound::cli;

fn main() -> std::process::ExitCode {
    cli::run(cli::Cli::parse())
}
