use std::io::Write;
use std::process::ExitCode;

use twistspin::cli;

fn main() -> ExitCode {
    if let Err(e) = cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(cli::EXIT_USAGE as u8);
    }
    let out = cli::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
