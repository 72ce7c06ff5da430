use std::io::Write;
use std::process::ExitCode;

use exreal::bench::with_big_stack;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let code = with_big_stack(move || {
        let stdout = std::io::stdout();
        let stderr = std::io::stderr();
        let mut out = stdout.lock();
        let mut err = stderr.lock();
        let code = exreal::cli::run(args, &mut out, &mut err);
        let _ = out.flush();
        code
    });
    ExitCode::from(code as u8)
}
