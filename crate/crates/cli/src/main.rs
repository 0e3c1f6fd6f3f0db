use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut stdin = stdin.lock();
    let stdout = io::stdout();
    let mut stdout = io::BufWriter::new(stdout.lock());
    let stderr = io::stderr();
    let mut stderr = stderr.lock();
    let code = sqsum_cli::run(
        std::env::args_os(),
        &mut sqsum_cli::Io {
            stdin: &mut stdin,
            stdout: &mut stdout,
            stderr: &mut stderr,
        },
    );
    if let Err(e) = stdout.flush() {
        let _ = writeln!(stderr, "error: writing output: {e}");
        return ExitCode::from(sqsum_cli::EXIT_OPERATIONAL as u8);
    }
    ExitCode::from(code as u8)
}
