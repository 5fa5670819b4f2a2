use std::process::ExitCode;

fn main() -> ExitCode {
    friezeforge::cli::run()
}
