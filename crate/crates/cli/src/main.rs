use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = listcrit_cli::run(std::env::args_os());
    let mut out: Box<dyn Write> = if result.exit_code == 2 {
        Box::new(std::io::stderr())
    } else {
        Box::new(std::io::stdout())
    };
    let _ = out.write_all(result.text.as_bytes());
    ExitCode::from(result.exit_code)
}
