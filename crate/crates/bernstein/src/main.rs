use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(bernstein::cli::run_from_env())
}
