use std::process::ExitCode;

fn main() -> ExitCode {
    graychroma::cli::run(std::env::args_os())
}
