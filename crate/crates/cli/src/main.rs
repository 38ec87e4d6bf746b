use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let code = quot_cli::run(std::env::args_os(), &mut stdout.lock());
    ExitCode::from(code)
}
